#include "gwdt/loc_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

// Fixed loci are enumerated directly as one canonical representative per
// isomorphism class. Rooted bipartite trees with weighted edges are built
// recursively with children kept in canonical order, so every rooted
// isomorphism class appears exactly once; unrooted classes are then read
// off at the tree center. A tree with an odd diameter has a central edge,
// whose endpoints carry the two distinct base labels, so the two halves are
// never interchangeable and each unrooted class has a unique description.

namespace gwdt {

namespace {

char label_char(FixedPoint p) { return p == FixedPoint::Zero ? '0' : '8'; }

struct AdjEntry {
    int neighbor;
    int degree;
};

std::vector<std::vector<AdjEntry>> neighbor_lists(const LocGraph& g) {
    std::vector<std::vector<AdjEntry>> adj(g.labels.size());
    for (const auto& e : g.edges) {
        adj[static_cast<std::size_t>(e.u)].push_back({e.v, e.degree});
        adj[static_cast<std::size_t>(e.v)].push_back({e.u, e.degree});
    }
    return adj;
}

// Tree center by repeated leaf stripping: one or two vertices.
std::vector<int> find_center(const std::vector<std::vector<AdjEntry>>& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 1) return {0};
    std::vector<int> deg(adj.size());
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
        if (deg[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int v : layer) {
            deg[static_cast<std::size_t>(v)] = 0;
            for (const auto& [w, d] : adj[static_cast<std::size_t>(v)]) {
                if (deg[static_cast<std::size_t>(w)] > 1 && --deg[static_cast<std::size_t>(w)] == 1)
                    next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string encode_rooted(const LocGraph& g, const std::vector<std::vector<AdjEntry>>& adj,
                          int v, int parent) {
    std::vector<std::string> kids;
    for (const auto& [w, d] : adj[static_cast<std::size_t>(v)]) {
        if (w == parent) continue;
        kids.push_back(std::to_string(d) + encode_rooted(g, adj, w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string out;
    out += label_char(g.labels[static_cast<std::size_t>(v)]);
    out += '[';
    for (std::size_t i = 0; i < kids.size(); ++i) {
        if (i) out += ',';
        out += kids[i];
    }
    out += ']';
    return out;
}

}  // namespace

int LocGraph::degree() const {
    int d = 0;
    for (const auto& e : edges) d += e.degree;
    return d;
}

std::vector<std::vector<int>> LocGraph::adjacency() const {
    std::vector<std::vector<int>> adj(labels.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        adj[static_cast<std::size_t>(edges[i].u)].push_back(static_cast<int>(i));
        adj[static_cast<std::size_t>(edges[i].v)].push_back(static_cast<int>(i));
    }
    return adj;
}

void LocGraph::validate() const {
    int n = vertex_count();
    if (n < 2) throw std::logic_error("LocGraph: needs at least two vertices");
    if (static_cast<int>(edges.size()) != n - 1)
        throw std::logic_error("LocGraph: edge count does not match a tree");
    std::int64_t prod = 1;
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v)
            throw std::logic_error("LocGraph: bad edge endpoints");
        if (e.degree < 1) throw std::logic_error("LocGraph: edge degree must be positive");
        if (labels[static_cast<std::size_t>(e.u)] == labels[static_cast<std::size_t>(e.v)])
            throw std::logic_error("LocGraph: adjacent vertices share a label");
        prod *= e.degree;
    }
    if (prod != edge_degree_product) throw std::logic_error("LocGraph: wrong edge degree product");
    if (aut_order < 1) throw std::logic_error("LocGraph: nonpositive automorphism order");
    // connectivity
    auto adj = neighbor_lists(*this);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [w, d] : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    if (count != n) throw std::logic_error("LocGraph: not connected");
}

std::int64_t automorphism_factor(const LocGraph& g) { return g.aut_order * g.edge_degree_product; }

std::string canonical_form(const LocGraph& g) {
    auto adj = neighbor_lists(g);
    auto centers = find_center(adj);
    if (centers.size() == 1) {
        return "C" + encode_rooted(g, adj, centers[0], -1);
    }
    int a = centers[0], b = centers[1];
    if (g.labels[static_cast<std::size_t>(a)] != FixedPoint::Zero) std::swap(a, b);
    int k = 0;
    for (const auto& [w, d] : adj[static_cast<std::size_t>(a)])
        if (w == b) k = d;
    return "B" + std::to_string(k) + ";" + encode_rooted(g, adj, a, b) + ";" +
           encode_rooted(g, adj, b, a);
}

std::string debug_line(const LocGraph& g) {
    std::ostringstream os;
    for (std::size_t v = 0; v < g.labels.size(); ++v) {
        if (v) os << "-";
        os << (g.labels[v] == FixedPoint::Zero ? "0" : "inf");
    }
    os << " |";
    for (const auto& e : g.edges) os << " (" << e.u << "," << e.v << "," << e.degree << ")";
    os << " | " << g.aut_order;
    return os.str();
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct RootedTree {
    // (edge degree, child weight, child index in the opposite-label pool)
    std::vector<std::array<int, 3>> kids;
    std::string key;
    std::int64_t aut = 1;
    int height = 0;
};

class RootedPool {
public:
    RootedPool(int dmax) : dmax_(dmax) {
        pool_[0].resize(static_cast<std::size_t>(dmax) + 1);
        pool_[1].resize(static_cast<std::size_t>(dmax) + 1);
        for (int label = 0; label < 2; ++label) {
            RootedTree leaf;
            leaf.key = std::string(1, label ? '8' : '0') + "[]";
            pool_[label][0].push_back(leaf);
        }
        for (int w = 1; w <= dmax; ++w)
            for (int label = 0; label < 2; ++label) generate(label, w);
    }

    const std::vector<RootedTree>& trees(int label, int w) const {
        return pool_[label][static_cast<std::size_t>(w)];
    }

private:
    struct Candidate {
        int k, cw, idx, cost, height;
        std::int64_t aut;
        std::string code;  // degree-prefixed child key
    };

    void generate(int label, int w) {
        int other = 1 - label;
        std::vector<Candidate> cands;
        for (int k = 1; k <= w; ++k) {
            for (int cw = 0; cw + k <= w; ++cw) {
                const auto& kids = pool_[other][static_cast<std::size_t>(cw)];
                for (std::size_t idx = 0; idx < kids.size(); ++idx) {
                    Candidate c;
                    c.k = k;
                    c.cw = cw;
                    c.idx = static_cast<int>(idx);
                    c.cost = k + cw;
                    c.height = 1 + kids[idx].height;
                    c.aut = kids[idx].aut;
                    c.code = std::to_string(k) + kids[idx].key;
                    cands.push_back(std::move(c));
                }
            }
        }
        std::sort(cands.begin(), cands.end(),
                  [](const Candidate& a, const Candidate& b) { return a.code < b.code; });
        std::vector<int> picks;
        pick(label, w, cands, 0, w, picks);
    }

    void pick(int label, int w, const std::vector<Candidate>& cands, std::size_t from,
              int remaining, std::vector<int>& picks) {
        if (remaining == 0) {
            emit(label, w, cands, picks);
            return;
        }
        for (std::size_t i = from; i < cands.size(); ++i) {
            if (cands[i].cost > remaining) continue;
            picks.push_back(static_cast<int>(i));
            pick(label, w, cands, i, remaining - cands[i].cost, picks);
            picks.pop_back();
        }
    }

    void emit(int label, int w, const std::vector<Candidate>& cands, const std::vector<int>& picks) {
        RootedTree t;
        std::string body;
        std::int64_t aut = 1;
        std::size_t i = 0;
        while (i < picks.size()) {
            std::size_t j = i;
            while (j < picks.size() && picks[j] == picks[i]) ++j;
            const Candidate& c = cands[static_cast<std::size_t>(picks[i])];
            std::int64_t mult = static_cast<std::int64_t>(j - i);
            for (std::int64_t m = 1; m <= mult; ++m) aut *= m;
            for (std::int64_t m = 0; m < mult; ++m) aut *= c.aut;
            for (std::size_t p = i; p < j; ++p) {
                if (!body.empty()) body += ',';
                body += c.code;
                t.kids.push_back({c.k, c.cw, c.idx});
                t.height = std::max(t.height, c.height);
            }
            i = j;
        }
        t.key = std::string(1, label ? '8' : '0') + "[" + body + "]";
        t.aut = aut;
        pool_[label][static_cast<std::size_t>(w)].push_back(std::move(t));
    }

    int dmax_;
    std::vector<std::vector<RootedTree>> pool_[2];
};

// Depth-first flattening of a rooted tree into vertex/edge lists.
void flatten(const RootedPool& pool, int label, const RootedTree& t, int at, LocGraph& g) {
    for (const auto& [k, cw, idx] : t.kids) {
        const RootedTree& child = pool.trees(1 - label, cw)[static_cast<std::size_t>(idx)];
        g.labels.push_back(label ? FixedPoint::Zero : FixedPoint::Infinity);
        int child_at = static_cast<int>(g.labels.size()) - 1;
        g.edges.push_back({at, child_at, k});
        g.edge_degree_product *= k;
        flatten(pool, 1 - label, child, child_at, g);
    }
}

LocGraph assemble_unicentral(const RootedPool& pool, int label, const RootedTree& t) {
    LocGraph g;
    g.labels.push_back(label ? FixedPoint::Infinity : FixedPoint::Zero);
    flatten(pool, label, t, 0, g);
    g.aut_order = t.aut;
    return g;
}

LocGraph assemble_bicentral(const RootedPool& pool, int k, const RootedTree& zero_side,
                            const RootedTree& inf_side) {
    LocGraph g;
    g.labels.push_back(FixedPoint::Zero);
    g.labels.push_back(FixedPoint::Infinity);
    g.edges.push_back({0, 1, k});
    g.edge_degree_product = k;
    flatten(pool, 0, zero_side, 0, g);
    flatten(pool, 1, inf_side, 1, g);
    g.aut_order = zero_side.aut * inf_side.aut;
    return g;
}

}  // namespace

std::vector<LocGraph> enumerate_graphs(int d) {
    if (d <= 0) throw std::invalid_argument("enumerate_graphs: degree must be positive");
    if (d > kMaxEnumerationDegree)
        throw std::invalid_argument("enumerate_graphs: degree exceeds enumeration bound");
    RootedPool pool(d);
    std::vector<LocGraph> out;
    // one central vertex: the two largest child depths agree
    for (int label = 0; label < 2; ++label) {
        for (const RootedTree& t : pool.trees(label, d)) {
            int d1 = 0, d2 = 0;
            for (const auto& [k, cw, idx] : t.kids) {
                int depth = 1 + pool.trees(1 - label, cw)[static_cast<std::size_t>(idx)].height;
                if (depth > d1) {
                    d2 = d1;
                    d1 = depth;
                } else if (depth > d2) {
                    d2 = depth;
                }
            }
            if (d1 == d2) out.push_back(assemble_unicentral(pool, label, t));
        }
    }
    // central edge: halves of equal height, the zero-labeled side first
    for (int k = 1; k <= d; ++k) {
        for (int wa = 0; wa + k <= d; ++wa) {
            int wb = d - k - wa;
            for (const RootedTree& ta : pool.trees(0, wa))
                for (const RootedTree& tb : pool.trees(1, wb))
                    if (ta.height == tb.height) out.push_back(assemble_bicentral(pool, k, ta, tb));
        }
    }
    std::sort(out.begin(), out.end(), [](const LocGraph& a, const LocGraph& b) {
        return canonical_form(a) < canonical_form(b);
    });
    return out;
}

}  // namespace gwdt
