#ifndef GWDT_RATIONAL_HPP
#define GWDT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gwdt {

using BigInt = mpz_class;

// Arbitrary-precision rational, always canonical: gcd(|num|, den) = 1,
// den > 0, zero stored as 0/1.
class BigRational {
public:
    BigRational() : q_(0) {}
    BigRational(long n) : q_(n) {}
    BigRational(const BigInt& n) : q_(n) {}
    BigRational(const BigInt& num, const BigInt& den) : q_(num, den) {
        if (den == 0) throw std::domain_error("BigRational: zero denominator");
        q_.canonicalize();
    }
    BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

    static BigRational parse(const std::string& s);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    BigRational operator-() const { return BigRational(mpq_class(-q_)); }
    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.q_ != b.q_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.q_ >= b.q_; }

    // Integer exponent; negative exponents invert (zero base rejected).
    BigRational pow(long e) const;

    std::string str() const;

private:
    explicit BigRational(const mpq_class& q) : q_(q) {}
    mpq_class q_;
};

BigInt int_pow(BigInt base, unsigned long e);
BigInt factorial(unsigned long n);

inline BigInt to_bigint(long long v) { return BigInt(static_cast<long>(v)); }

}  // namespace gwdt

#endif
