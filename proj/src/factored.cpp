#include "gwdt/factored.hpp"

#include <numeric>
#include <sstream>

namespace gwdt {

std::pair<LinearForm, BigRational> LinearForm::normalize(std::int64_t c0, std::int64_t c1,
                                                         std::int64_t c2) {
    std::array<std::int64_t, 3> c{c0, c1, c2};
    std::int64_t g = 0;
    for (auto x : c) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 0) throw std::invalid_argument("LinearForm: zero form");
    std::int64_t sign = 1;
    for (auto x : c) {
        if (x != 0) {
            if (x < 0) sign = -1;
            break;
        }
    }
    LinearForm f;
    for (int i = 0; i < kNumVars; ++i) f.c[i] = c[i] / (sign * g);
    return {f, BigRational(sign * g)};
}

std::string LinearForm::str() const { return poly().str(); }

void FactoredRational::mul_scalar(const BigRational& s) { scalar_ *= s; }

void FactoredRational::mul_form(std::int64_t c0, std::int64_t c1, std::int64_t c2,
                                int exponent) {
    if (exponent == 0) return;
    auto [form, scale] = LinearForm::normalize(c0, c1, c2);
    scalar_ *= scale.pow(exponent);
    auto it = factors_.find(form);
    if (it == factors_.end()) {
        factors_.emplace(form, exponent);
    } else {
        it->second += exponent;
        if (it->second == 0) factors_.erase(it);
    }
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& o) {
    scalar_ *= o.scalar_;
    for (const auto& [form, e] : o.factors_) {
        auto it = factors_.find(form);
        if (it == factors_.end()) {
            factors_.emplace(form, e);
        } else {
            it->second += e;
            if (it->second == 0) factors_.erase(it);
        }
    }
    return *this;
}

std::string FactoredRational::str() const {
    std::ostringstream os;
    os << scalar_.str();
    for (const auto& [form, e] : factors_) os << " * (" << form.str() << ")^" << e;
    return os.str();
}

}  // namespace gwdt
