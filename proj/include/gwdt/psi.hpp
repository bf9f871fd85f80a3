#ifndef GWDT_PSI_HPP
#define GWDT_PSI_HPP

#include <vector>

#include "gwdt/rational.hpp"

namespace gwdt {

// Integral of psi_1^{a_1} ... psi_n^{a_n} over the moduli of n-pointed
// genus-zero stable curves: (n-3)!/(a_1! ... a_n!) when the exponents sum
// to n-3, zero otherwise. Requires n >= 3.
BigRational psi_integral(const std::vector<int>& exponents);

// Same quantity by recursive application of the string equation down to
// n = 3. Test oracle; requires 3 <= n <= 10.
BigRational psi_integral_bruteforce(const std::vector<int>& exponents);

}  // namespace gwdt

#endif
