#ifndef GWDT_RATFUN_HPP
#define GWDT_RATFUN_HPP

#include <optional>
#include <string>

#include "gwdt/factored.hpp"
#include "gwdt/multipoly.hpp"

namespace gwdt {

// Element of Q(lambda0, lambda1, lambda2) as an unreduced quotient.
// Normal form kept cheap: the denominator is a primitive integer polynomial
// with positive leading coefficient; the rational scale sits in the
// numerator. Full gcd reduction happens lazily (reduced(), str()); equality
// is exact regardless, by cross-multiplication.
class RatFun {
public:
    RatFun() : num_(), den_(1L) {}                       // zero
    explicit RatFun(const BigRational& c) : num_(c), den_(1L) {}
    explicit RatFun(long c) : num_(c), den_(1L) {}
    explicit RatFun(MultiPoly num) : num_(std::move(num)), den_(1L) {}
    RatFun(MultiPoly num, MultiPoly den);

    static RatFun variable(int v) { return RatFun(MultiPoly::variable(v)); }

    const MultiPoly& numerator() const { return num_; }
    const MultiPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);  // throws std::domain_error on zero divisor
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }

    // exact equality as rational functions (never relies on reduction)
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    // x^e for integer e (negative exponents invert; zero base rejected)
    RatFun pow(int e) const;

    RatFun reduced() const;  // fully gcd-reduced, same value

    // deg(num) - deg(den) if both homogeneous, nullopt otherwise.
    // Throws std::domain_error on the zero function.
    std::optional<int> homogeneous_degree() const;

    bool depends_on(int v) const;

    // Exact substitution; variables map to rationals or other variables.
    // Throws std::domain_error if the denominator vanishes identically.
    RatFun specialize(const MultiPoly::Assignment& a) const;

    // Canonical text form: fully reduced, integer-coefficient sums in
    // canonical order, e.g. "-(lambda1 + lambda2) / (lambda1*lambda2)".
    std::string str() const;
    static RatFun parse(const std::string& text);

private:
    void normalize();
    MultiPoly num_, den_;
};

// Product of scalar and all forms^exponent, positive exponents into the
// numerator, negative into the denominator.
RatFun expand(const FactoredRational& f);

}  // namespace gwdt

#endif
