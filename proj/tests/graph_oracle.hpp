#ifndef GWDT_TESTS_GRAPH_ORACLE_HPP
#define GWDT_TESTS_GRAPH_ORACLE_HPP

// Independent brute-force enumerator of fixed-locus graphs, used only as a
// test oracle: walk every labeled tree on up to d+1 vertices (Pruefer
// sequences), every label alternation and every edge-degree composition,
// identify isomorphism classes by minimizing the serialized form over all
// vertex permutations, and count automorphisms directly.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "gwdt/loc_graph.hpp"

namespace gwdt_test {

struct OracleGraph {
    std::vector<int> labels;                     // 0 / 1
    std::vector<std::array<int, 3>> edges;       // u, v, degree
    long long aut = 0;
    std::string key;
};

inline std::string oracle_key(const std::vector<int>& labels,
                              const std::vector<std::array<int, 3>>& edges,
                              const std::vector<int>& perm) {
    int n = static_cast<int>(labels.size());
    std::string s;
    for (int target = 0; target < n; ++target) {
        for (int v = 0; v < n; ++v)
            if (perm[static_cast<std::size_t>(v)] == target)
                s += labels[static_cast<std::size_t>(v)] ? 'i' : 'o';
    }
    std::vector<std::array<int, 3>> es;
    for (const auto& e : edges) {
        int a = perm[static_cast<std::size_t>(e[0])], b = perm[static_cast<std::size_t>(e[1])];
        es.push_back({std::min(a, b), std::max(a, b), e[2]});
    }
    std::sort(es.begin(), es.end());
    for (const auto& e : es)
        s += "|" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]);
    return s;
}

inline std::vector<std::vector<std::array<int, 2>>> labeled_trees(int n) {
    // trees as edge lists, via Pruefer decoding (n >= 2)
    std::vector<std::vector<std::array<int, 2>>> out;
    if (n == 2) {
        out.push_back({{0, 1}});
        return out;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        std::vector<int> degree(static_cast<std::size_t>(n), 1);
        for (int x : seq) ++degree[static_cast<std::size_t>(x)];
        std::vector<std::array<int, 2>> edges;
        std::vector<int> deg = degree;
        for (int x : seq) {
            int leaf = -1;
            for (int v = 0; v < n; ++v)
                if (deg[static_cast<std::size_t>(v)] == 1) {
                    leaf = v;
                    break;
                }
            edges.push_back({leaf, x});
            deg[static_cast<std::size_t>(leaf)] = 0;
            --deg[static_cast<std::size_t>(x)];
        }
        std::array<int, 2> last{-1, -1};
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] == 1) {
                if (last[0] < 0)
                    last[0] = v;
                else
                    last[1] = v;
            }
        edges.push_back(last);
        out.push_back(edges);
        // next sequence
        std::size_t i = 0;
        while (i < seq.size() && seq[i] == n - 1) seq[i++] = 0;
        if (i == seq.size()) break;
        ++seq[i];
    }
    return out;
}

inline std::vector<OracleGraph> oracle_enumerate(int d) {
    std::map<std::string, OracleGraph> classes;
    for (int n = 2; n <= d + 1; ++n) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<int>> perms;
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));

        for (const auto& tree : labeled_trees(n)) {
            // 2-color by alternation from vertex 0
            for (int root_label = 0; root_label < 2; ++root_label) {
                std::vector<int> labels(static_cast<std::size_t>(n), -1);
                labels[0] = root_label;
                std::vector<int> stack{0};
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (const auto& e : tree) {
                        int w = -1;
                        if (e[0] == v) w = e[1];
                        if (e[1] == v) w = e[0];
                        if (w >= 0 && labels[static_cast<std::size_t>(w)] < 0) {
                            labels[static_cast<std::size_t>(w)] =
                                1 - labels[static_cast<std::size_t>(v)];
                            stack.push_back(w);
                        }
                    }
                }
                // edge degree compositions summing to d
                int m = n - 1;
                std::vector<int> comp(static_cast<std::size_t>(m), 1);
                auto total = [&]() {
                    int t = 0;
                    for (int c : comp) t += c;
                    return t;
                };
                while (true) {
                    if (total() == d) {
                        std::vector<std::array<int, 3>> edges;
                        for (int i = 0; i < m; ++i)
                            edges.push_back({tree[static_cast<std::size_t>(i)][0],
                                             tree[static_cast<std::size_t>(i)][1],
                                             comp[static_cast<std::size_t>(i)]});
                        std::string best;
                        for (const auto& p : perms) {
                            std::string k = oracle_key(labels, edges, p);
                            if (best.empty() || k < best) best = k;
                        }
                        auto it = classes.find(best);
                        if (it == classes.end()) {
                            OracleGraph g;
                            g.labels = labels;
                            g.edges = edges;
                            g.key = best;
                            std::vector<int> id(static_cast<std::size_t>(n));
                            std::iota(id.begin(), id.end(), 0);
                            std::string self = oracle_key(labels, edges, id);
                            g.aut = 0;
                            for (const auto& p : perms)
                                if (oracle_key(labels, edges, p) == self) ++g.aut;
                            classes.emplace(best, std::move(g));
                        }
                    }
                    std::size_t i = 0;
                    while (i < comp.size() && comp[i] == d) comp[i++] = 1;
                    if (i == comp.size()) break;
                    ++comp[i];
                }
            }
        }
    }
    std::vector<OracleGraph> out;
    for (auto& [k, g] : classes) out.push_back(std::move(g));
    return out;
}

}  // namespace gwdt_test

#endif
