#ifndef GWDT_FACTORED_HPP
#define GWDT_FACTORED_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "gwdt/multipoly.hpp"

namespace gwdt {

// Normalized integer linear form c0*lambda0 + c1*lambda1 + c2*lambda2:
// not all zero, gcd of nonzero coefficients 1, first nonzero coefficient
// positive. The sign and scale stripped during normalization are returned
// to the owner.
struct LinearForm {
    std::array<std::int64_t, kNumVars> c{0, 0, 0};

    // Returns {form, s} with raw = s * form, s rational nonzero.
    static std::pair<LinearForm, BigRational> normalize(std::int64_t c0, std::int64_t c1,
                                                        std::int64_t c2);

    MultiPoly poly() const {
        return MultiPoly::linear(BigRational(c[0]), BigRational(c[1]), BigRational(c[2]));
    }

    friend bool operator<(const LinearForm& a, const LinearForm& b) { return a.c < b.c; }
    friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.c == b.c; }

    std::string str() const;
};

// scalar * prod forms^exponent, exponents nonzero, forms distinct.
// The working representation for localization weights.
class FactoredRational {
public:
    FactoredRational() : scalar_(1) {}
    explicit FactoredRational(const BigRational& s) : scalar_(s) {}

    const BigRational& scalar() const { return scalar_; }
    const std::map<LinearForm, int>& factors() const { return factors_; }
    bool is_zero() const { return scalar_.is_zero(); }

    void mul_scalar(const BigRational& s);
    // multiply by (c0*l0 + c1*l1 + c2*l2)^exponent
    void mul_form(std::int64_t c0, std::int64_t c1, std::int64_t c2, int exponent);
    FactoredRational& operator*=(const FactoredRational& o);
    friend FactoredRational operator*(FactoredRational a, const FactoredRational& b) {
        return a *= b;
    }

    std::string str() const;

private:
    BigRational scalar_;
    std::map<LinearForm, int> factors_;
};

}  // namespace gwdt

#endif
