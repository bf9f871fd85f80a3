#ifndef GWDT_GEOMETRY_HPP
#define GWDT_GEOMETRY_HPP

#include <stdexcept>

namespace gwdt {

// The local curve: total space of O(l1) + O(l2) over P1, Fano condition
// l1 + l2 >= -1. The third twist l3 = -2 - l1 - l2 closes the direct sum
// to the rank-three bundle with fiber weights (t1, t2, t1^-1 t2^-1), i.e.
// equivariant first Chern classes (lambda1, lambda2, -lambda1-lambda2)
// over the fixed point 0 of the base.
struct LocalCurveGeometry {
    long long l1, l2;

    LocalCurveGeometry(long long a, long long b) : l1(a), l2(b) {
        if (l1 + l2 < -1)
            throw std::invalid_argument("LocalCurveGeometry: l1 + l2 >= -1 required");
    }

    long long l3() const { return -2 - l1 - l2; }
};

}  // namespace gwdt

#endif
