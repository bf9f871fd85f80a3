#include "gwdt/engine.hpp"

#include <map>

#include "gwdt/psi.hpp"

// Fixed-point summation for the twisted invariants of the local curve.
//
// The fiber torus acts trivially on the base P1, so the sum runs over the
// fixed loci of an auxiliary C* on the base, with tangent weight lambda0 at
// the fixed point 0 and -lambda0 at infinity. Fiber weights of the three
// bundle summands over 0 are (lambda1, lambda2, -lambda1-lambda2); over
// infinity each is shifted by its twist times the base weight.
//
// Per graph, with s_v the base tangent weight at the vertex's fixed point
// and w_F = s_v/d_e the edge tangent weight along a flag:
//
//  * bundle summand of twist l on an edge of cover degree d_e, fiber weight
//    u over the 0 end: with m = l d_e, section weights u - k lambda0/d_e
//    (k = 0..m) land in the denominator when m >= 0, and obstruction
//    weights u + j lambda0/d_e (j = 1..-m-1) in the numerator when
//    m <= -2; m = -1 contributes nothing;
//  * gluing the summand across a vertex of valence n contributes
//    u_vertex^(n-1);
//  * base tangent directions on an edge give
//    (-1)^(d_e) d_e^(2 d_e) / ((d_e!)^2 lambda0^(2 d_e));
//  * a free end divides by the edge automorphism weight, i.e. multiplies
//    by s_v/d_e; two edges meeting at a vertex give the node-smoothing
//    factor d_1 d_2/(d_1+d_2); a vertex of valence n >= 3 carries the
//    moduli integral of prod 1/(w_F - psi_F), an integer multinomial sum
//    of psi intersection numbers, times s_v^(n-1).
//
// Everything is a product of integer linear forms times a rational, so each
// contribution stays factored until the final accumulation.

namespace gwdt {

namespace {

struct Summand {
    long long l;                       // twist
    std::array<std::int64_t, 3> u0;    // fiber weight over the fixed point 0
};

// integer multinomial sum over psi exponent tuples at a stable vertex:
// sum_{|a| = n-3} psi(a) * prod_F d_F^(a_F + 1)
BigRational stable_vertex_weight(const std::vector<int>& flag_degrees) {
    int n = static_cast<int>(flag_degrees.size());
    std::vector<int> tuple(static_cast<std::size_t>(n), 0);
    BigRational total;
    // iterate all compositions of n-3 into n nonnegative parts
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            tuple[static_cast<std::size_t>(pos)] = remaining;
            BigRational term = psi_integral(tuple);
            for (int i = 0; i < n; ++i)
                term *= BigRational(BigInt(flag_degrees[static_cast<std::size_t>(i)]))
                            .pow(tuple[static_cast<std::size_t>(i)] + 1);
            total += term;
            return;
        }
        for (int a = 0; a <= remaining; ++a) {
            tuple[static_cast<std::size_t>(pos)] = a;
            self(self, pos + 1, remaining - a);
        }
    };
    rec(rec, 0, n - 3);
    return total;
}

FactoredRational contribution(const LocalCurveGeometry& geom, const LocGraph& g) {
    const std::array<Summand, 3> summands{{{geom.l1, {0, 1, 0}},
                                           {geom.l2, {0, 0, 1}},
                                           {geom.l3(), {0, -1, -1}}}};
    FactoredRational val;

    for (const auto& e : g.edges) {
        const long long de = e.degree;
        // base tangent directions along the cover
        BigRational edge_scalar(int_pow(to_bigint(de), static_cast<unsigned long>(2 * de)),
                                factorial(static_cast<unsigned long>(de)) *
                                    factorial(static_cast<unsigned long>(de)));
        if (de % 2 != 0) edge_scalar = -edge_scalar;
        val.mul_scalar(edge_scalar);
        val.mul_form(1, 0, 0, static_cast<int>(-2 * de));

        for (const auto& s : summands) {
            long long m = s.l * de;
            if (m >= 0) {
                for (long long k = 0; k <= m; ++k) {
                    val.mul_form(de * s.u0[0] - k, de * s.u0[1], de * s.u0[2], -1);
                    val.mul_scalar(BigRational(to_bigint(de)));
                }
            } else if (m <= -2) {
                for (long long j = 1; j <= -m - 1; ++j) {
                    val.mul_form(de * s.u0[0] + j, de * s.u0[1], de * s.u0[2], 1);
                    val.mul_scalar(BigRational(BigInt(1), to_bigint(de)));
                }
            }
        }
    }

    auto adj = g.adjacency();
    for (int v = 0; v < g.vertex_count(); ++v) {
        const bool at_zero = g.labels[static_cast<std::size_t>(v)] == FixedPoint::Zero;
        const int base_sign = at_zero ? 1 : -1;  // s_v = base_sign * lambda0
        std::vector<int> flag_degrees;
        for (int ei : adj[static_cast<std::size_t>(v)])
            flag_degrees.push_back(g.edges[static_cast<std::size_t>(ei)].degree);
        const int n = static_cast<int>(flag_degrees.size());

        for (const auto& s : summands) {
            if (n < 2) continue;
            std::array<std::int64_t, 3> u = s.u0;
            if (!at_zero) u[0] -= s.l;  // shift by the twist times the base weight
            val.mul_form(u[0], u[1], u[2], n - 1);
        }

        if (n == 1) {
            val.mul_form(1, 0, 0, 1);
            val.mul_scalar(BigRational(base_sign, flag_degrees[0]));
        } else if (n == 2) {
            long long d1 = flag_degrees[0], d2 = flag_degrees[1];
            val.mul_scalar(BigRational(to_bigint(d1) * to_bigint(d2), to_bigint(d1 + d2)));
        } else {
            val.mul_form(1, 0, 0, 2 - n);
            BigRational w = stable_vertex_weight(flag_degrees);
            if (base_sign < 0 && n % 2 != 0) w = -w;  // (+-1)^(2-n)
            val.mul_scalar(w);
        }
    }

    val.mul_scalar(BigRational(BigInt(1), to_bigint(automorphism_factor(g))));
    return val;
}

}  // namespace

std::vector<GraphContribution> graph_contributions(const LocalCurveGeometry& geom, int d) {
    std::vector<GraphContribution> out;
    for (LocGraph& g : enumerate_graphs(d)) {
        FactoredRational value = contribution(geom, g);
        out.push_back({std::move(g), std::move(value)});
    }
    return out;
}

RatFun accumulate(const std::vector<GraphContribution>& contributions) {
    if (contributions.empty()) return RatFun();

    std::map<LinearForm, int> common_den;
    for (const auto& c : contributions)
        for (const auto& [form, e] : c.value.factors())
            if (e < 0) {
                int& slot = common_den[form];
                slot = std::max(slot, -e);
            }

    MultiPoly num;
    for (const auto& c : contributions) {
        MultiPoly t(c.value.scalar());
        for (const auto& [form, e] : c.value.factors()) {
            auto it = common_den.find(form);
            int exp = e + (it != common_den.end() ? it->second : 0);
            if (exp > 0) t = t * form.poly().pow(exp);
        }
        for (const auto& [form, m] : common_den)
            if (c.value.factors().find(form) == c.value.factors().end())
                t = t * form.poly().pow(m);
        num += t;
    }
    if (num.is_zero()) return RatFun();

    // split the pure lambda0 power out of the common denominator
    const LinearForm lambda0_form{{1, 0, 0}};
    int base_weight_power = 0;
    if (auto it = common_den.find(lambda0_form); it != common_den.end()) {
        base_weight_power = it->second;
        common_den.erase(it);
    }

    int num_content = num.min_exponent_in(kLambda0);
    if (num_content < base_weight_power)
        throw std::logic_error(
            "accumulate: lambda0 failed to cancel in the graph sum (weight formula bug)");
    MultiPoly reduced_num = num.shift_down(kLambda0, base_weight_power).at_zero(kLambda0);

    MultiPoly den(1L);
    for (const auto& [form, m] : common_den) {
        MultiPoly at0 = form.poly().at_zero(kLambda0);
        if (at0.is_zero())
            throw std::logic_error("accumulate: denominator form supported on lambda0 only");
        den = den * at0.pow(m);
    }

    RatFun result(std::move(reduced_num), std::move(den));
    if (result.depends_on(kLambda0))
        throw std::logic_error("accumulate: result still depends on lambda0");
    return result;
}

RatFun twisted_gw(const LocalCurveGeometry& geom, int d) {
    RatFun result = accumulate(graph_contributions(geom, d));
    if (!result.is_zero()) {
        auto deg = result.homogeneous_degree();
        if (!deg || *deg != -1)
            throw std::logic_error("twisted_gw: result not homogeneous of degree -1");
    }
    return result;
}

}  // namespace gwdt
