#include "gwdt/ratfun.hpp"

#include <cctype>
#include <sstream>

namespace gwdt {

RatFun::RatFun(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly(1L);
        return;
    }
    BigRational c = den_.content();
    if (c != BigRational(1)) {
        BigRational inv = BigRational(1) / c;
        den_.scale(inv);
        num_.scale(inv);
    }
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) {
    if (den_ == o.den_) {
        num_ -= o.num_;
    } else {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFun& RatFun::operator*=(const RatFun& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
    if (o.is_zero()) throw std::domain_error("RatFun: division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

RatFun RatFun::pow(int e) const {
    if (e == 0) return RatFun(1L);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("RatFun::pow: zero base with negative exponent");
        return RatFun();
    }
    int a = e < 0 ? -e : e;
    MultiPoly n = num_.pow(a), d = den_.pow(a);
    return e > 0 ? RatFun(std::move(n), std::move(d)) : RatFun(std::move(d), std::move(n));
}

RatFun RatFun::reduced() const {
    if (num_.is_zero()) return RatFun();
    MultiPoly g = poly_gcd(num_, den_);
    if (g.is_constant()) return *this;
    auto n = divide_exact(num_, g);
    auto d = divide_exact(den_, g);
    if (!n || !d) throw std::logic_error("RatFun::reduced: gcd does not divide");
    return RatFun(std::move(*n), std::move(*d));
}

std::optional<int> RatFun::homogeneous_degree() const {
    if (is_zero()) throw std::domain_error("homogeneous_degree: zero function");
    if (!num_.is_homogeneous() || !den_.is_homogeneous()) return std::nullopt;
    return num_.total_degree() - den_.total_degree();
}

bool RatFun::depends_on(int v) const { return num_.depends_on(v) || den_.depends_on(v); }

RatFun RatFun::specialize(const MultiPoly::Assignment& a) const {
    MultiPoly d = den_.substitute(a);
    if (d.is_zero()) throw std::domain_error("RatFun::specialize: denominator vanishes (pole)");
    return RatFun(num_.substitute(a), std::move(d));
}

std::string RatFun::str() const {
    RatFun r = reduced();
    if (r.num_.is_zero()) return "0";
    BigRational scalar = r.num_.content();  // r.den_ is already integer-primitive
    MultiPoly num_int = r.num_;
    num_int.scale(BigRational(1) / scalar);
    BigInt p = scalar.numerator();  // carries the sign
    BigInt q = scalar.denominator();
    MultiPoly den_poly = r.den_;
    den_poly.scale(BigRational(q));
    if (den_poly == MultiPoly(1L)) {
        MultiPoly out = num_int;
        out.scale(BigRational(p));
        return out.str();
    }
    bool neg = p < 0;
    if (neg) p = -p;
    MultiPoly num_poly = num_int;
    num_poly.scale(BigRational(p));
    std::ostringstream os;
    if (neg) os << "-";
    if (num_poly.term_count() > 1)
        os << "(" << num_poly.str() << ")";
    else
        os << num_poly.str();
    os << " / (" << den_poly.str() << ")";
    return os.str();
}

RatFun expand(const FactoredRational& f) {
    MultiPoly num(f.scalar());
    MultiPoly den(1L);
    for (const auto& [form, e] : f.factors()) {
        if (e > 0)
            num = num * form.poly().pow(e);
        else
            den = den * form.poly().pow(-e);
    }
    return RatFun(std::move(num), std::move(den));
}

// ---------------------------------------------------------------------------
// Canonical text parser: sums/products/quotients/powers of integers and
// lambda0..lambda2, enough to round-trip str() and read simple user input.

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("RatFun::parse: " + what + " at position " +
                                    std::to_string(pos) + " in '" + s + "'");
    }

    RatFun parse_expr() {
        RatFun v = parse_term();
        while (true) {
            if (eat('+'))
                v += parse_term();
            else if (eat('-'))
                v -= parse_term();
            else
                return v;
        }
    }

    RatFun parse_term() {
        RatFun v = parse_unary();
        while (true) {
            if (eat('*'))
                v *= parse_unary();
            else if (eat('/'))
                v /= parse_unary();
            else
                return v;
        }
    }

    RatFun parse_unary() {
        if (eat('-')) return -parse_unary();
        return parse_power();
    }

    RatFun parse_power() {
        RatFun base = parse_atom();
        if (eat('^')) {
            bool neg = eat('-');
            long e = parse_integer();
            return base.pow(static_cast<int>(neg ? -e : e));
        }
        return base;
    }

    long parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }

    RatFun parse_atom() {
        skip_ws();
        if (eat('(')) {
            RatFun v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return RatFun(BigRational(BigInt(s.substr(start, pos - start))));
        }
        for (int v = 0; v < kNumVars; ++v) {
            std::string name = kVarNames[v];
            if (s.compare(pos, name.size(), name) == 0) {
                pos += name.size();
                return RatFun::variable(v);
            }
        }
        fail("unexpected token");
    }
};

}  // namespace

RatFun RatFun::parse(const std::string& text) {
    Parser p(text);
    RatFun v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

}  // namespace gwdt
