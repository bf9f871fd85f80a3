#include "gwdt/multipoly.hpp"

#include <sstream>

namespace gwdt {

MultiPoly MultiPoly::variable(int v, int exponent) {
    if (v < 0 || v >= kNumVars) throw std::invalid_argument("MultiPoly::variable: bad index");
    if (exponent < 0) throw std::invalid_argument("MultiPoly::variable: negative exponent");
    Monomial m;
    m.e[v] = exponent;
    MultiPoly p;
    p.add_term(m, BigRational(1));
    return p;
}

MultiPoly MultiPoly::linear(const BigRational& c0, const BigRational& c1,
                            const BigRational& c2, const BigRational& c) {
    MultiPoly p;
    Monomial m;
    m.e = {1, 0, 0};
    p.add_term(m, c0);
    m.e = {0, 1, 0};
    p.add_term(m, c1);
    m.e = {0, 0, 1};
    p.add_term(m, c2);
    p.add_term(Monomial{}, c);
    return p;
}

void MultiPoly::add_term(const Monomial& m, const BigRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BigRational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRational() : it->second;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("MultiPoly: zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

const BigRational& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("MultiPoly: zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

int MultiPoly::total_degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.total_degree();
}

int MultiPoly::degree_in(int v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.e[v]);
    return d;
}

int MultiPoly::min_exponent_in(int v) const {
    if (terms_.empty()) return 0;
    int d = -1;
    for (const auto& [m, c] : terms_) d = d < 0 ? m.e[v] : std::min(d, m.e[v]);
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != d) return false;
    return true;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    // iterate the smaller operand on the outside
    const MultiPoly& x = a.term_count() <= b.term_count() ? a : b;
    const MultiPoly& y = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_) r.add_term(mx * my, cx * cy);
    return r;
}

MultiPoly& MultiPoly::scale(const BigRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_) coef *= c;
    return *this;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
    MultiPoly r(1L);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::shift_down(int v, int k) const {
    if (k == 0) return *this;
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        if (m.e[v] < k) throw std::domain_error("MultiPoly::shift_down: not divisible");
        Monomial m2 = m;
        m2.e[v] -= k;
        r.terms_.emplace(m2, c);
    }
    return r;
}

MultiPoly MultiPoly::at_zero(int v) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_)
        if (m.e[v] == 0) r.terms_.emplace(m, c);
    return r;
}

MultiPoly MultiPoly::substitute(const Assignment& a) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        BigRational coef = c;
        Monomial out;
        for (int v = 0; v < kNumVars; ++v) {
            if (m.e[v] == 0) continue;
            if (a.value[v].has_value()) {
                coef *= a.value[v]->pow(m.e[v]);
            } else if (a.rename[v].has_value()) {
                out.e[*a.rename[v]] += m.e[v];
            } else {
                out.e[v] += m.e[v];
            }
        }
        r.add_term(out, coef);
    }
    return r;
}

BigRational MultiPoly::content() const {
    if (terms_.empty()) return BigRational();
    BigInt num_gcd = 0;
    BigInt den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    }
    BigRational content(num_gcd, den_lcm);
    if (leading_coefficient().sign() < 0) content = -content;
    return content;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        BigRational abs_c = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_vars = m.total_degree() > 0;
        if (!has_vars || abs_c != BigRational(1)) {
            os << abs_c.str();
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (int v = 0; v < kNumVars; ++v) {
            if (m.e[v] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << kVarNames[v];
            if (m.e[v] > 1) os << "^" << m.e[v];
        }
    }
    return os.str();
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    MultiPoly rem = a;
    MultiPoly quot;
    const Monomial& lb = b.leading_monomial();
    const BigRational& cb = b.leading_coefficient();
    while (!rem.is_zero()) {
        const Monomial& lr = rem.leading_monomial();
        Monomial q;
        for (int v = 0; v < kNumVars; ++v) {
            if (lr.e[v] < lb.e[v]) return std::nullopt;
            q.e[v] = lr.e[v] - lb.e[v];
        }
        BigRational qc = rem.leading_coefficient() / cb;
        MultiPoly t;
        t.add_term(q, qc);
        quot += t;
        rem -= t * b;
        if (!rem.is_zero() && rem.leading_monomial().total_degree() > lr.total_degree())
            return std::nullopt;  // cannot happen for exact multiples; guards nontermination
    }
    return quot;
}

}  // namespace gwdt
