#include "gwdt/multipoly.hpp"

// Multivariate gcd over Q: integer-primitive parts, monomial-content
// extraction, a dehomogenization shortcut (the engine's polynomials are
// homogeneous, so the trivariate case collapses to bivariate and then to
// univariate), and a primitive pseudo-remainder sequence for the rest.

namespace gwdt {
namespace {

MultiPoly make_primitive(const MultiPoly& p) {
    if (p.is_zero()) return p;
    MultiPoly q = p;
    q.scale(BigRational(1) / p.content());
    return q;
}

// gcd of integer contents of both polynomials, as a constant polynomial
MultiPoly constant_gcd(const MultiPoly& a, const MultiPoly& b) {
    BigInt g = 0;
    for (const auto& [m, c] : a.terms())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.numerator().get_mpz_t());
    for (const auto& [m, c] : b.terms())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.numerator().get_mpz_t());
    return MultiPoly(BigRational(g));
}

MultiPoly gcd_inner(MultiPoly a, MultiPoly b);

// Univariate view in variable x with MultiPoly coefficients.
std::vector<MultiPoly> coeffs_in(const MultiPoly& p, int x) {
    std::vector<MultiPoly> out(static_cast<std::size_t>(p.degree_in(x)) + 1);
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        int k = rest.e[x];
        rest.e[x] = 0;
        out[static_cast<std::size_t>(k)].add_term(rest, c);
    }
    return out;
}

MultiPoly from_coeffs(const std::vector<MultiPoly>& cs, int x) {
    MultiPoly out;
    for (std::size_t k = 0; k < cs.size(); ++k) {
        Monomial xs;
        xs.e[x] = static_cast<int>(k);
        MultiPoly xk;
        xk.add_term(xs, BigRational(1));
        out += cs[k] * xk;
    }
    return out;
}

int uni_degree(const std::vector<MultiPoly>& cs) {
    for (int k = static_cast<int>(cs.size()) - 1; k >= 0; --k)
        if (!cs[static_cast<std::size_t>(k)].is_zero()) return k;
    return -1;
}

MultiPoly uni_content(const std::vector<MultiPoly>& cs) {
    MultiPoly g;
    for (const auto& c : cs) g = gcd_inner(g, c);
    return g;
}

std::vector<MultiPoly> uni_divide(const std::vector<MultiPoly>& cs, const MultiPoly& d) {
    std::vector<MultiPoly> out(cs.size());
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k].is_zero()) continue;
        auto q = divide_exact(cs[k], d);
        if (!q) throw std::logic_error("poly_gcd: content division failed");
        out[k] = std::move(*q);
    }
    return out;
}

// R := lc(G)^(deg F - deg G + 1) * F  mod  G, computed iteratively.
std::vector<MultiPoly> pseudo_rem(std::vector<MultiPoly> f, const std::vector<MultiPoly>& g) {
    int dg = uni_degree(g);
    const MultiPoly& lg = g[static_cast<std::size_t>(dg)];
    int df = uni_degree(f);
    while (df >= dg) {
        MultiPoly lf = f[static_cast<std::size_t>(df)];
        for (int k = 0; k <= df; ++k) {
            auto& fk = f[static_cast<std::size_t>(k)];
            fk = fk * lg;
            int j = k - (df - dg);
            if (j >= 0 && j <= dg) fk -= lf * g[static_cast<std::size_t>(j)];
        }
        f[static_cast<std::size_t>(df)] = MultiPoly();
        int nd = uni_degree(f);
        if (nd >= df) throw std::logic_error("poly_gcd: pseudo-remainder did not reduce");
        df = nd;
    }
    f.resize(static_cast<std::size_t>(std::max(df, 0)) + 1);
    return f;
}

MultiPoly homogenize_min(const MultiPoly& p, int v) {
    int top = 0;
    for (const auto& [m, c] : p.terms()) top = std::max(top, m.total_degree());
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        Monomial m2 = m;
        m2.e[v] += top - m.total_degree();
        out.add_term(m2, c);
    }
    return out;
}

MultiPoly gcd_inner(MultiPoly a, MultiPoly b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) return constant_gcd(a, b);

    // strip monomial content
    Monomial mono;
    for (int v = 0; v < kNumVars; ++v) {
        int ka = a.min_exponent_in(v), kb = b.min_exponent_in(v);
        mono.e[v] = std::min(ka, kb);
        if (ka) a = a.shift_down(v, ka);
        if (kb) b = b.shift_down(v, kb);
    }
    MultiPoly mono_poly;
    mono_poly.add_term(mono, BigRational(1));

    MultiPoly g;
    int nvars = 0, last_var = -1;
    for (int v = 0; v < kNumVars; ++v)
        if (a.depends_on(v) || b.depends_on(v)) {
            ++nvars;
            last_var = v;
        }

    if (nvars == 0) {
        g = constant_gcd(a, b);
    } else if (a.is_homogeneous() && b.is_homogeneous() && nvars > 1) {
        // both free of monomial factors now, so dehomogenizing loses nothing
        MultiPoly::Assignment at_one;
        at_one.value[last_var] = BigRational(1);
        g = homogenize_min(gcd_inner(a.substitute(at_one), b.substitute(at_one)), last_var);
    } else {
        int x = last_var;
        auto fa = coeffs_in(a, x);
        auto fb = coeffs_in(b, x);
        MultiPoly ca = uni_content(fa), cb = uni_content(fb);
        fa = uni_divide(fa, ca);
        fb = uni_divide(fb, cb);
        if (uni_degree(fa) < uni_degree(fb)) std::swap(fa, fb);
        while (true) {
            auto r = pseudo_rem(fa, fb);
            if (uni_degree(r) < 0) break;
            MultiPoly cr = uni_content(r);
            fa = std::move(fb);
            fb = uni_divide(r, cr);
        }
        g = make_primitive(from_coeffs(fb, x)) * gcd_inner(ca, cb);
    }
    return g * mono_poly;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() && b.is_zero()) return MultiPoly();
    MultiPoly g = gcd_inner(make_primitive(a), make_primitive(b));
    return make_primitive(g);
}

}  // namespace gwdt
