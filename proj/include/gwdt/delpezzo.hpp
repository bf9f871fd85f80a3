#ifndef GWDT_DELPEZZO_HPP
#define GWDT_DELPEZZO_HPP

#include <string>
#include <vector>

#include "gwdt/rational.hpp"

namespace gwdt {

// Integer curve class in the Picard lattice, coordinates in the lattice's
// chosen basis: (d; d1, ..., dr) for a blow-up of the plane, (b1, b2) for
// the quadric.
struct DelPezzoClass {
    std::vector<long long> c;
};

// Picard lattice of a del-Pezzo surface. Two shapes:
//  * blow-up of the plane at r points (0 <= r <= 8): basis H, E1..Er,
//    pairing diag(+1, -1, ..., -1), c1 = 3H - sum Ei;
//  * the quadric P1 x P1: basis of the two rulings, pairing offdiag(1, 1),
//    c1 = (2, 2).
class DelPezzoLattice {
public:
    static DelPezzoLattice blowup(int r);
    static DelPezzoLattice quadric();

    int rank() const { return rank_; }
    const std::string& name() const { return name_; }

    long long pair(const DelPezzoClass& a, const DelPezzoClass& b) const;
    long long c1_dot(const DelPezzoClass& beta) const;

    // (-1)^(1 + beta^2) == (-1)^(c1.beta - 1); holds for every class
    bool parity_check(const DelPezzoClass& beta) const;

private:
    enum class Kind { Blowup, Quadric } kind_;
    int rank_;
    std::string name_;
};

struct FiberClassInvariants {
    BigRational dt_twist;  // degree-n sheaf count; zero beyond the primitive class
    BigRational gw_twist;  // dt_twist(1) / n^2
};

// Fiber-class bookkeeping on S x P1 for the insertion d1 (x) gamma2:
// the twist sign makes the primitive count -d1 * (c1(S).gamma2).
FiberClassInvariants fiber_class_invariants(long long d1, long long c1_dot_gamma2, long long n);

// Constant relating twisted invariants of S x P1 to invariants of the
// canonical threefold over S: d * (beta.gamma1) * value.
BigRational ks_reduction(long long d, long long beta_dot_gamma1, const BigRational& value);

// H^4(S) insertions vanish on both sides.
BigRational ks_reduction_h4();

}  // namespace gwdt

#endif
