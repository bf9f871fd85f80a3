// Acceptance suite: every release criterion as an exact check with its time
// budget, one pass/fail line each. Exit code is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "graph_oracle.hpp"
#include "gwdt/closed_forms.hpp"
#include "gwdt/delpezzo.hpp"
#include "gwdt/engine.hpp"
#include "gwdt/multicover.hpp"
#include "gwdt/psi.hpp"
#include "gwdt/rng.hpp"

using namespace gwdt;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::vector<LocalCurveGeometry> admissible_pairs(int bound) {
    std::vector<LocalCurveGeometry> out;
    for (long long l1 = -bound; l1 <= bound; ++l1)
        for (long long l2 = -bound; l2 <= bound; ++l2)
            if (l1 + l2 >= -1) out.emplace_back(l1, l2);
    return out;
}

std::vector<LocalCurveGeometry> random_geometries(int count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<LocalCurveGeometry> out;
    while (static_cast<int>(out.size()) < count) {
        long long l1 = rng.uniform(-10, 10);
        long long l2 = rng.uniform(-10, 10);
        if (l1 + l2 >= -1) out.emplace_back(l1, l2);
    }
    return out;
}

RatFun lam1() { return RatFun::variable(kLambda1); }

// ----- criteria ------------------------------------------------------------

void criterion_1() {  // d=1 sweep vs closed form, |l| <= 10
    for (const auto& geom : admissible_pairs(10))
        require(twisted_gw(geom, 1) == gw01(geom),
                "d=1 mismatch at (" + std::to_string(geom.l1) + "," + std::to_string(geom.l2) + ")");
}

void criterion_2() {  // d=2 sweep vs closed form, |l| <= 10
    for (const auto& geom : admissible_pairs(10))
        require(twisted_gw(geom, 2) == gw02(geom),
                "d=2 mismatch at (" + std::to_string(geom.l1) + "," + std::to_string(geom.l2) + ")");
}

void criterion_3() {  // dt01 = gw01 identically
    for (const auto& geom : admissible_pairs(10))
        require(dt01(geom) == gw01(geom),
                "dt01 != gw01 at (" + std::to_string(geom.l1) + "," + std::to_string(geom.l2) + ")");
}

void criterion_4() {  // rigid geometry: 1/(d^3 lambda1) and vanishing extraction
    LocalCurveGeometry geom(0, -1);
    InvariantSeries<RatFun> gw;
    for (int d = 1; d <= 3; ++d) gw.set(ClassKey::degree(d), twisted_gw(geom, d));
    for (int d = 2; d <= 3; ++d) {
        RatFun expected =
            RatFun(1L) / (RatFun(BigRational(static_cast<long>(d) * d * d)) * lam1());
        require(gw.at(ClassKey::degree(d)) == expected,
                "degree " + std::to_string(d) + " invariant is not 1/(d^3 lambda1)");
        require(extract_dt_local(geom, gw, d).is_zero(),
                "degree " + std::to_string(d) + " extracted count is nonzero");
    }
    require(extract_dt_local(geom, gw, 1) == RatFun(1L) / lam1(), "degree 1 count wrong");
}

void criterion_5() {  // lambda0 elimination and homogeneity on random geometries
    for (const auto& geom : random_geometries(20, 20260801)) {
        for (int d = 1; d <= 3; ++d) {
            RatFun v = twisted_gw(geom, d);
            require(!v.depends_on(kLambda0), "lambda0 survived at d=" + std::to_string(d));
            require(v.homogeneous_degree() == -1,
                    "inhomogeneous result at (" + std::to_string(geom.l1) + "," +
                        std::to_string(geom.l2) + "), d=" + std::to_string(d));
        }
    }
}

void criterion_6() {  // exchange symmetry
    MultiPoly::Assignment swap12;
    swap12.rename[kLambda1] = kLambda2;
    swap12.rename[kLambda2] = kLambda1;
    for (const auto& geom : random_geometries(20, 555)) {
        for (int d = 1; d <= 3; ++d) {
            RatFun swapped = twisted_gw(geom, d).specialize(swap12);
            require(swapped == twisted_gw(LocalCurveGeometry(geom.l2, geom.l1), d),
                    "exchange symmetry broken at (" + std::to_string(geom.l1) + "," +
                        std::to_string(geom.l2) + "), d=" + std::to_string(d));
        }
    }
}

void criterion_7() {  // psi closed form vs string-equation recursion, n <= 8
    for (int n = 3; n <= 8; ++n) {
        std::vector<int> tuple(static_cast<std::size_t>(n), 0);
        std::function<void(int, int)> walk = [&](int pos, int left) {
            if (pos == n) {
                require(psi_integral(tuple) == psi_integral_bruteforce(tuple),
                        "psi mismatch at n=" + std::to_string(n));
                return;
            }
            for (int a = 0; a <= left; ++a) {
                tuple[static_cast<std::size_t>(pos)] = a;
                walk(pos + 1, left - a);
            }
            tuple[static_cast<std::size_t>(pos)] = 0;
        };
        walk(0, n - 3);
    }
}

void criterion_8() {  // graph enumeration vs brute force, d <= 4
    const std::map<int, std::size_t> counts{{1, 1}, {2, 3}, {3, 6}, {4, 16}};
    for (int d = 1; d <= 4; ++d) {
        auto produced = enumerate_graphs(d);
        auto oracle = gwdt_test::oracle_enumerate(d);
        require(produced.size() == oracle.size() && produced.size() == counts.at(d),
                "class count mismatch at d=" + std::to_string(d) + ": produced " +
                    std::to_string(produced.size()) + ", brute force " +
                    std::to_string(oracle.size()));
        std::map<std::string, long long> auts;
        for (const auto& g : oracle) auts[g.key] = g.aut;
        for (const auto& g : produced) {
            std::vector<int> labels;
            std::vector<std::array<int, 3>> edges;
            for (auto l : g.labels) labels.push_back(l == FixedPoint::Zero ? 0 : 1);
            for (const auto& e : g.edges) edges.push_back({e.u, e.v, e.degree});
            std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
            std::iota(perm.begin(), perm.end(), 0);
            std::string best;
            do {
                std::string k = gwdt_test::oracle_key(labels, edges, perm);
                if (best.empty() || k < best) best = k;
            } while (std::next_permutation(perm.begin(), perm.end()));
            require(auts.count(best) == 1, "produced class missing from brute force");
            require(auts.at(best) == g.aut_order, "automorphism order mismatch at d=" +
                                                      std::to_string(d) + ": " + debug_line(g));
        }
    }
}

void criterion_9() {  // multiple-cover round trips
    Rng rng(424243);
    for (int trial = 0; trial < 100; ++trial) {
        // multiples of one primitive class, so divisor classes stay in support
        InvariantSeries<BigRational> s;
        int depth = static_cast<int>(rng.uniform(1, 6));
        bool lattice = rng.uniform(0, 1) == 1;
        long long b = rng.uniform(-4, 4), c = rng.uniform(-4, 4);
        for (long long m = 1; m <= depth; ++m) {
            BigRational v(rng.uniform(-30, 30), rng.uniform(1, 9));
            if (lattice)
                s.set(ClassKey::lattice({m, b * m, c * m}), v);
            else
                s.set(ClassKey::degree(m), v);
        }
        for (int n = 0; n <= 3; ++n) {  // exponents n-3 in {-3,-2,-1,0}
            CoverExponent e{n};
            InvariantSeries<BigRational> gw;
            for (const auto& [k, v] : s.entries) gw.set(k, assemble(s, e, k));
            require(invert(gw, e).entries == s.entries, "invert(assemble) != id");
            require(invert_mobius(gw, e).entries == s.entries, "moebius route disagrees");
            auto inv = invert(s, e);
            for (const auto& [k, v] : s.entries)
                require(assemble(inv, e, k) == v, "assemble(invert) != id");
        }
    }
}

void criterion_10() {  // parity identity
    for (int r = 0; r <= 4; ++r) {
        DelPezzoLattice lat = DelPezzoLattice::blowup(r);
        DelPezzoClass beta;
        beta.c.assign(static_cast<std::size_t>(r) + 1, -3);
        while (true) {
            require(lat.parity_check(beta), "parity failed on " + lat.name());
            std::size_t i = 0;
            while (i < beta.c.size() && beta.c[i] == 3) beta.c[i++] = -3;
            if (i == beta.c.size()) break;
            ++beta.c[i];
        }
    }
    Rng rng(90210);
    DelPezzoLattice l8 = DelPezzoLattice::blowup(8);
    for (int i = 0; i < 10000; ++i) {
        DelPezzoClass beta;
        for (int k = 0; k < 9; ++k) beta.c.push_back(rng.uniform(-1000000, 1000000));
        require(l8.parity_check(beta), "parity failed on a random r=8 class");
    }
    DelPezzoLattice quad = DelPezzoLattice::quadric();
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b)
            require(quad.parity_check(DelPezzoClass{{a, b}}), "parity failed on P1xP1");
}

void criterion_11() {  // fiber-class bookkeeping
    Rng rng(1618);
    for (int i = 0; i < 50; ++i) {
        long long d1 = rng.uniform(-20, 20), cg = rng.uniform(-20, 20);
        BigRational primitive = fiber_class_invariants(d1, cg, 1).dt_twist;
        for (long long n = 1; n <= 5; ++n) {
            auto inv = fiber_class_invariants(d1, cg, n);
            require(inv.gw_twist == primitive / BigRational(n * n),
                    "gw_twist(n) != dt_twist(1)/n^2");
            require(n == 1 || inv.dt_twist == BigRational(0), "nonzero count at n > 1");
        }
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        std::function<void()> fn;
        double budget_seconds;
    };
    const std::vector<Criterion> criteria{
        {1, "d=1 closed-form sweep, |l1|,|l2| <= 10", criterion_1, 5.0},
        {2, "d=2 closed-form sweep, |l1|,|l2| <= 10", criterion_2, 120.0},
        {3, "degree-1 GW=DT identity on the sweep range", criterion_3, 1.0},
        {4, "multiple covers of the rigid geometry, d <= 3", criterion_4, 10.0},
        {5, "base-weight elimination and homogeneity, 20 random geometries", criterion_5, 60.0},
        {6, "exchange symmetry, 20 random geometries", criterion_6, 60.0},
        {7, "psi-integral closed form vs string recursion, n <= 8", criterion_7, 1.0},
        {8, "graph enumeration vs brute force, d <= 4", criterion_8, 30.0},
        {9, "multiple-cover round trips, 100 random series", criterion_9, 30.0},
        {10, "del-Pezzo parity, exhaustive box and 10^4 random", criterion_10, 1.0},
        {11, "fiber-class bookkeeping, 50 random pairs, n <= 5", criterion_11, 5.0},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.fn();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (error.empty() && seconds > c.budget_seconds)
            error = "time budget exceeded (" + std::to_string(seconds) + "s > " +
                    std::to_string(c.budget_seconds) + "s)";
        bool ok = error.empty();
        if (!ok) ++failures;
        std::printf("[%s] criterion %2d: %s [%.2fs]%s%s\n", ok ? "PASS" : "FAIL", c.id, c.label,
                    seconds, ok ? "" : " -- ", error.c_str());
    }
    if (failures == 0)
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    else
        std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
