#ifndef GWDT_LOC_GRAPH_HPP
#define GWDT_LOC_GRAPH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace gwdt {

// Vertex label: which torus-fixed point of the base P1 the vertex sits over.
enum class FixedPoint : int { Zero = 0, Infinity = 1 };

// Torus-fixed locus of unmarked genus-zero degree-d stable maps to P1:
// a connected tree, vertices labeled by the two fixed points with adjacent
// labels distinct, edges carrying cover degrees d_e >= 1 with sum d.
struct LocGraph {
    std::vector<FixedPoint> labels;        // one per vertex
    struct Edge {
        int u, v;
        int degree;
    };
    std::vector<Edge> edges;
    std::int64_t aut_order = 1;            // |Aut|, label- and degree-preserving
    std::int64_t edge_degree_product = 1;  // prod of d_e

    int vertex_count() const { return static_cast<int>(labels.size()); }
    int degree() const;
    std::vector<std::vector<int>> adjacency() const;  // adjacency()[v] = incident edge ids
    void validate() const;  // throws std::logic_error on any broken invariant
};

// One representative per isomorphism class, d >= 1. Deterministic order.
std::vector<LocGraph> enumerate_graphs(int d);

inline constexpr int kMaxEnumerationDegree = 10;

// |Aut| * prod d_e, the divisor of each localization contribution.
std::int64_t automorphism_factor(const LocGraph& g);

// Isomorphism-invariant encoding: identical strings exactly for
// label-preserving isomorphic graphs. Center-rooted AHU coding extended
// with labels and edge degrees.
std::string canonical_form(const LocGraph& g);

// Stable one-line debug form: `label-sequence | edge list (u,v,d) | autOrder`.
std::string debug_line(const LocGraph& g);

}  // namespace gwdt

#endif
