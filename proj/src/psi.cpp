#include "gwdt/psi.hpp"

#include <numeric>
#include <stdexcept>

namespace gwdt {

BigRational psi_integral(const std::vector<int>& exponents) {
    std::size_t n = exponents.size();
    if (n < 3) throw std::invalid_argument("psi_integral: need at least 3 marked points");
    long sum = 0;
    for (int a : exponents) {
        if (a < 0) throw std::invalid_argument("psi_integral: negative exponent");
        sum += a;
    }
    if (sum != static_cast<long>(n) - 3) return BigRational();
    BigInt v = factorial(n - 3);
    for (int a : exponents) v /= factorial(static_cast<unsigned long>(a));
    return BigRational(v);
}

namespace {

BigInt string_recursion(std::vector<int> a) {
    std::size_t n = a.size();
    if (n == 3) return BigInt(1);  // all exponents are zero here
    // remove one marked point with exponent 0 and distribute via the
    // string equation
    std::size_t zero_at = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) {
            zero_at = i;
            break;
        }
    }
    if (zero_at == n) throw std::logic_error("psi brute force: no removable point");
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(zero_at));
    BigInt total = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0) continue;
        --a[j];
        total += string_recursion(a);
        ++a[j];
    }
    return total;
}

}  // namespace

BigRational psi_integral_bruteforce(const std::vector<int>& exponents) {
    std::size_t n = exponents.size();
    if (n < 3) throw std::invalid_argument("psi_integral_bruteforce: need at least 3 marked points");
    if (n > 10) throw std::invalid_argument("psi_integral_bruteforce: n too large");
    long sum = 0;
    for (int a : exponents) {
        if (a < 0) throw std::invalid_argument("psi_integral_bruteforce: negative exponent");
        sum += a;
    }
    if (sum != static_cast<long>(n) - 3) return BigRational();
    return BigRational(string_recursion(exponents));
}

}  // namespace gwdt
