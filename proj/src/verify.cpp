#include "gwdt/verify.hpp"

#include "json.hpp"

#include "gwdt/closed_forms.hpp"
#include "gwdt/delpezzo.hpp"
#include "gwdt/engine.hpp"
#include "gwdt/multicover.hpp"
#include "gwdt/rng.hpp"

namespace gwdt {

CheckReport check_d1_identity(int bound) {
    CheckReport r;
    r.check_id = "d1-identity";
    r.add_param("bound", std::to_string(bound));
    if (bound < 1) throw std::invalid_argument("check_d1_identity: bound >= 1 required");
    int pairs = 0;
    for (long long l1 = -bound; l1 <= bound; ++l1) {
        for (long long l2 = -bound; l2 <= bound; ++l2) {
            if (l1 + l2 < -1) continue;
            ++pairs;
            LocalCurveGeometry geom(l1, l2);
            RatFun engine = twisted_gw(geom, 1);
            RatFun closed = gw01(geom);
            RatFun sheaf = dt01(geom);
            if (engine != closed || closed != sheaf) {
                r.fail("(" + std::to_string(l1) + "," + std::to_string(l2) +
                       "): engine=" + engine.str() + " gw01=" + closed.str() +
                       " dt01=" + sheaf.str());
            }
        }
    }
    r.add_param("pairs", std::to_string(pairs));
    return r;
}

CheckReport check_d2_sweep(int bound) {
    CheckReport r;
    r.check_id = "d2-sweep";
    r.add_param("bound", std::to_string(bound));
    int pairs = 0, dt2_zero = 0;
    for (long long l1 = -bound; l1 <= bound; ++l1) {
        for (long long l2 = -bound; l2 <= bound; ++l2) {
            if (l1 + l2 < -1) continue;
            ++pairs;
            LocalCurveGeometry geom(l1, l2);
            RatFun engine = twisted_gw(geom, 2);
            RatFun closed = gw02(geom);
            if (engine != closed) {
                r.fail("(" + std::to_string(l1) + "," + std::to_string(l2) +
                       "): engine=" + engine.str() + " gw02=" + closed.str());
                continue;
            }
            InvariantSeries<RatFun> gw;
            gw.set(ClassKey::degree(1), twisted_gw(geom, 1));
            gw.set(ClassKey::degree(2), engine);
            RatFun dt2 = extract_dt_local(geom, gw, 2);
            if (dt2.is_zero()) ++dt2_zero;
            if ((l1 == 0 && l2 == -1) || (l1 == 0 && l2 == 0))
                r.add_param("dt2(" + std::to_string(l1) + "," + std::to_string(l2) + ")",
                            dt2.str());
        }
    }
    r.add_param("pairs", std::to_string(pairs));
    r.add_param("dt2_zero", std::to_string(dt2_zero));
    return r;
}

CheckReport check_conifold(int dmax) {
    CheckReport r;
    r.check_id = "conifold";
    r.add_param("dmax", std::to_string(dmax));
    if (dmax < 2) throw std::invalid_argument("check_conifold: dmax >= 2 required");
    LocalCurveGeometry geom(0, -1);
    InvariantSeries<RatFun> gw;
    RatFun lambda1 = RatFun::variable(kLambda1);
    for (int d = 1; d <= dmax; ++d) {
        RatFun value = twisted_gw(geom, d);
        gw.set(ClassKey::degree(d), value);
        RatFun expected = RatFun(1L) / (RatFun(BigRational(static_cast<long>(d) * d * d)) * lambda1);
        if (value != expected)
            r.fail("d=" + std::to_string(d) + ": engine=" + value.str() +
                   " expected=" + expected.str());
        RatFun dt = extract_dt_local(geom, gw, d);
        if (d == 1) {
            if (dt != dt01(geom) || dt != value)
                r.fail("d=1 sheaf count mismatch: " + dt.str());
        } else if (!dt.is_zero()) {
            r.fail("d=" + std::to_string(d) + ": extracted count " + dt.str() + " expected 0");
        }
    }
    return r;
}

CheckReport check_parity(int random_samples, int rmax, std::uint64_t seed) {
    CheckReport r;
    r.check_id = "parity";
    r.add_param("samples", std::to_string(random_samples));
    r.add_param("rmax", std::to_string(rmax));
    r.add_param("seed", std::to_string(seed));

    // exhaustive small box, r <= 4, |coords| <= 3
    for (int rr = 0; rr <= 4; ++rr) {
        DelPezzoLattice lat = DelPezzoLattice::blowup(rr);
        DelPezzoClass beta;
        beta.c.assign(static_cast<std::size_t>(rr) + 1, -3);
        while (true) {
            if (!lat.parity_check(beta)) {
                std::string w = lat.name() + " beta=(";
                for (auto c : beta.c) w += std::to_string(c) + ",";
                r.fail(w + ")");
            }
            std::size_t i = 0;
            while (i < beta.c.size() && beta.c[i] == 3) beta.c[i++] = -3;
            if (i == beta.c.size()) break;
            ++beta.c[i];
        }
    }

    Rng rng(seed);
    DelPezzoLattice lat = DelPezzoLattice::blowup(rmax);
    for (int s = 0; s < random_samples; ++s) {
        DelPezzoClass beta;
        for (int i = 0; i <= rmax; ++i) beta.c.push_back(rng.uniform(-1000000, 1000000));
        if (!lat.parity_check(beta)) r.fail(lat.name() + " random sample " + std::to_string(s));
    }

    DelPezzoLattice quad = DelPezzoLattice::quadric();
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b)
            if (!quad.parity_check(DelPezzoClass{{a, b}}))
                r.fail("P1xP1 beta=(" + std::to_string(a) + "," + std::to_string(b) + ")");
    for (int s = 0; s < random_samples / 10 + 1; ++s) {
        DelPezzoClass beta{{rng.uniform(-1000000, 1000000), rng.uniform(-1000000, 1000000)}};
        if (!quad.parity_check(beta)) r.fail("P1xP1 random sample " + std::to_string(s));
    }
    return r;
}

std::string report_json(const CheckReport& r) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    nlohmann::json j{{"checkId", r.check_id},
                     {"params", params},
                     {"status", r.pass ? "pass" : "fail"},
                     {"witness", r.pass ? nlohmann::json() : nlohmann::json(r.witness)}};
    return j.dump();
}

}  // namespace gwdt
