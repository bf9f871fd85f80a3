#ifndef GWDT_CLOSED_FORMS_HPP
#define GWDT_CLOSED_FORMS_HPP

#include "gwdt/geometry.hpp"
#include "gwdt/ratfun.hpp"

namespace gwdt {

// l-bar convention: l for l >= 0, -l-1 for l < 0.
struct LBar {
    long long l;
    long long lbar;
    explicit LBar(long long v) : l(v), lbar(v >= 0 ? v : -v - 1) {}
};

// Alternating sum lbar^2 - (lbar-1)^2 + (lbar-2)^2 - ... down to 0,
// equal to lbar(lbar+1)/2.
BigInt alt_square_sum(long long lbar);

// Degree-one invariant: lambda1^(-l1-1) lambda2^(-l2-1) (-lambda1-lambda2)^(l1+l2+1).
RatFun gw01(const LocalCurveGeometry& geom);

// Degree-two invariant:
//   (1/8) lambda1^(-2l1-1) lambda2^(-2l2-1) (-lambda1-lambda2)^(-2l3-1) * {
//     alt(lb1) lambda1^-2 + alt(lb2) lambda2^-2 + alt(lb3) (lambda1+lambda2)^-2
//     + l1 l2 / (lambda1 lambda2) + l2 l3 / (lambda2 (-lambda1-lambda2))
//     + l1 l3 / (lambda1 (-lambda1-lambda2)) }
RatFun gw02(const LocalCurveGeometry& geom);

// Degree-one sheaf count:
//   (-1)^(l1+l2-1) lambda1^(-l1-1) lambda2^(-l2-1) (lambda1+lambda2)^(l1+l2+1),
// identically equal to gw01.
RatFun dt01(const LocalCurveGeometry& geom);

// (-1)^(d(l1+l2)-1)
int twist_sign(const LocalCurveGeometry& geom, int d);

}  // namespace gwdt

#endif
