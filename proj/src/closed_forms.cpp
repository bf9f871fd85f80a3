#include "gwdt/closed_forms.hpp"

namespace gwdt {

BigInt alt_square_sum(long long lbar) {
    if (lbar < 0) throw std::invalid_argument("alt_square_sum: negative argument");
    return to_bigint(lbar) * to_bigint(lbar + 1) / 2;
}

RatFun gw01(const LocalCurveGeometry& geom) {
    FactoredRational f;
    f.mul_form(0, 1, 0, static_cast<int>(-geom.l1 - 1));
    f.mul_form(0, 0, 1, static_cast<int>(-geom.l2 - 1));
    f.mul_form(0, -1, -1, static_cast<int>(geom.l1 + geom.l2 + 1));
    return expand(f);
}

RatFun gw02(const LocalCurveGeometry& geom) {
    const long long l1 = geom.l1, l2 = geom.l2, l3 = geom.l3();

    FactoredRational pref(BigRational(1, 8));
    pref.mul_form(0, 1, 0, static_cast<int>(-2 * l1 - 1));
    pref.mul_form(0, 0, 1, static_cast<int>(-2 * l2 - 1));
    pref.mul_form(0, -1, -1, static_cast<int>(-2 * l3 - 1));

    auto term = [](const BigRational& c, int e1, int e2, int e12, bool neg12) {
        FactoredRational f(c);
        f.mul_form(0, 1, 0, e1);
        f.mul_form(0, 0, 1, e2);
        if (e12) f.mul_form(0, neg12 ? -1 : 1, neg12 ? -1 : 1, e12);
        return expand(f);
    };

    RatFun brace;
    brace += term(BigRational(alt_square_sum(LBar(l1).lbar)), -2, 0, 0, false);
    brace += term(BigRational(alt_square_sum(LBar(l2).lbar)), 0, -2, 0, false);
    brace += term(BigRational(alt_square_sum(LBar(l3).lbar)), 0, 0, -2, false);
    brace += term(BigRational(l1 * l2), -1, -1, 0, false);
    brace += term(BigRational(l2 * l3), 0, -1, -1, true);
    brace += term(BigRational(l1 * l3), -1, 0, -1, true);

    return expand(pref) * brace;
}

RatFun dt01(const LocalCurveGeometry& geom) {
    FactoredRational f(BigRational((geom.l1 + geom.l2 - 1) % 2 == 0 ? 1 : -1));
    f.mul_form(0, 1, 0, static_cast<int>(-geom.l1 - 1));
    f.mul_form(0, 0, 1, static_cast<int>(-geom.l2 - 1));
    f.mul_form(0, 1, 1, static_cast<int>(geom.l1 + geom.l2 + 1));
    return expand(f);
}

int twist_sign(const LocalCurveGeometry& geom, int d) {
    long long e = d * (geom.l1 + geom.l2) - 1;
    return e % 2 == 0 ? 1 : -1;
}

}  // namespace gwdt
