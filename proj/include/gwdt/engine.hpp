#ifndef GWDT_ENGINE_HPP
#define GWDT_ENGINE_HPP

#include <vector>

#include "gwdt/geometry.hpp"
#include "gwdt/loc_graph.hpp"
#include "gwdt/ratfun.hpp"

namespace gwdt {

// One fixed locus worth of the localization sum, kept as a ratio of
// products of linear forms times a rational scalar. May depend on the
// auxiliary base weight lambda0; the dependence cancels only in the
// accumulated sum.
struct GraphContribution {
    LocGraph graph;
    FactoredRational value;
};

std::vector<GraphContribution> graph_contributions(const LocalCurveGeometry& geom, int d);

// Sum the contributions over a common factored denominator and eliminate
// the auxiliary base weight. Throws std::logic_error if lambda0 fails to
// cancel (a weight-formula bug, never a data error).
RatFun accumulate(const std::vector<GraphContribution>& contributions);

// The equivariant twisted genus-zero invariant of Tot(O(l1)+O(l2)) in
// degree d, an element of Q(lambda1, lambda2) homogeneous of degree -1.
RatFun twisted_gw(const LocalCurveGeometry& geom, int d);

}  // namespace gwdt

#endif
