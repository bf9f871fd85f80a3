#include "gwdt/rational.hpp"

namespace gwdt {

BigRational BigRational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        return BigRational(BigInt(s));
    }
    BigInt num(s.substr(0, slash));
    std::string den_str = s.substr(slash + 1);
    if (den_str.empty()) throw std::invalid_argument("BigRational::parse: missing denominator in '" + s + "'");
    return BigRational(num, BigInt(den_str));
}

BigRational BigRational::pow(long e) const {
    if (e == 0) return BigRational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("BigRational::pow: zero base with negative exponent");
        return BigRational();
    }
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    BigInt n = int_pow(numerator(), a);
    BigInt d = int_pow(denominator(), a);
    return e > 0 ? BigRational(n, d) : BigRational(d, n);
}

std::string BigRational::str() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

BigInt int_pow(BigInt base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace gwdt
