#include "gwdt/delpezzo.hpp"

#include <stdexcept>

namespace gwdt {

DelPezzoLattice DelPezzoLattice::blowup(int r) {
    if (r < 0 || r > 8) throw std::invalid_argument("DelPezzoLattice: 0 <= r <= 8 required");
    DelPezzoLattice l;
    l.kind_ = Kind::Blowup;
    l.rank_ = r + 1;
    l.name_ = "Bl_" + std::to_string(r) + "(P2)";
    return l;
}

DelPezzoLattice DelPezzoLattice::quadric() {
    DelPezzoLattice l;
    l.kind_ = Kind::Quadric;
    l.rank_ = 2;
    l.name_ = "P1xP1";
    return l;
}

long long DelPezzoLattice::pair(const DelPezzoClass& a, const DelPezzoClass& b) const {
    if (static_cast<int>(a.c.size()) != rank_ || static_cast<int>(b.c.size()) != rank_)
        throw std::invalid_argument("DelPezzoLattice::pair: rank mismatch");
    if (kind_ == Kind::Quadric) return a.c[0] * b.c[1] + a.c[1] * b.c[0];
    long long v = a.c[0] * b.c[0];
    for (int i = 1; i < rank_; ++i) v -= a.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(i)];
    return v;
}

long long DelPezzoLattice::c1_dot(const DelPezzoClass& beta) const {
    if (static_cast<int>(beta.c.size()) != rank_)
        throw std::invalid_argument("DelPezzoLattice::c1_dot: rank mismatch");
    if (kind_ == Kind::Quadric) return 2 * (beta.c[0] + beta.c[1]);
    long long v = 3 * beta.c[0];
    for (int i = 1; i < rank_; ++i) v += beta.c[static_cast<std::size_t>(i)];
    return v;
}

bool DelPezzoLattice::parity_check(const DelPezzoClass& beta) const {
    long long self = pair(beta, beta);
    long long c1b = c1_dot(beta);
    auto parity = [](long long x) { return ((x % 2) + 2) % 2; };
    return parity(1 + self) == parity(c1b - 1);
}

FiberClassInvariants fiber_class_invariants(long long d1, long long c1_dot_gamma2, long long n) {
    if (n < 1) throw std::invalid_argument("fiber_class_invariants: n >= 1 required");
    BigRational primitive(-d1 * c1_dot_gamma2);
    FiberClassInvariants out;
    out.dt_twist = n == 1 ? primitive : BigRational();
    out.gw_twist = primitive / BigRational(n * n);
    return out;
}

BigRational ks_reduction(long long d, long long beta_dot_gamma1, const BigRational& value) {
    return BigRational(d * beta_dot_gamma1) * value;
}

BigRational ks_reduction_h4() { return BigRational(); }

}  // namespace gwdt
