#include "gwdt/multicover.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace gwdt {

ClassKey ClassKey::degree(long long d) {
    if (d == 0) throw std::invalid_argument("ClassKey: zero class");
    ClassKey k;
    k.coords_ = {d};
    k.degree_ = true;
    return k;
}

ClassKey ClassKey::lattice(std::vector<long long> coords) {
    if (coords.empty()) throw std::invalid_argument("ClassKey: empty coordinate vector");
    bool all_zero = true;
    for (long long c : coords) all_zero = all_zero && c == 0;
    if (all_zero) throw std::invalid_argument("ClassKey: zero class");
    ClassKey k;
    k.coords_ = std::move(coords);
    k.degree_ = false;
    return k;
}

ClassKey ClassKey::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("ClassKey::parse: empty key");
    if (s.front() == '(') {
        if (s.back() != ')') throw std::invalid_argument("ClassKey::parse: unbalanced '(' in '" + text + "'");
        std::string body = s.substr(1, s.size() - 2);
        for (char& c : body)
            if (c == ';') c = ',';
        std::vector<long long> coords;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ','))
            coords.push_back(std::stoll(item));
        return lattice(std::move(coords));
    }
    return degree(std::stoll(s));
}

bool ClassKey::divisible_by(long long k) const {
    if (k <= 0) return false;
    for (long long c : coords_)
        if (c % k != 0) return false;
    return true;
}

ClassKey ClassKey::divided_by(long long k) const {
    ClassKey out = *this;
    for (long long& c : out.coords_) {
        if (c % k != 0) throw std::invalid_argument("ClassKey: not divisible by " + std::to_string(k));
        c /= k;
    }
    return out;
}

ClassKey ClassKey::scaled(long long k) const {
    ClassKey out = *this;
    for (long long& c : out.coords_) c *= k;
    return out;
}

std::vector<long long> ClassKey::divisors() const {
    long long g = 0;
    for (long long c : coords_) g = std::gcd(g, c < 0 ? -c : c);
    std::vector<long long> out;
    for (long long k = 1; k * k <= g; ++k) {
        if (g % k != 0) continue;
        out.push_back(k);
        if (k != g / k) out.push_back(g / k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string ClassKey::str() const {
    if (degree_) return std::to_string(coords_[0]);
    std::string s = "(" + std::to_string(coords_[0]) + ";";
    for (std::size_t i = 1; i < coords_.size(); ++i) {
        if (i > 1) s += ",";
        s += std::to_string(coords_[i]);
    }
    return s + ")";
}

template <typename V>
const V& InvariantSeries<V>::at(const ClassKey& k) const {
    auto it = entries.find(k);
    if (it == entries.end())
        throw std::out_of_range("InvariantSeries: no entry for class " + k.str());
    return it->second;
}

long long mobius(long long k) {
    if (k <= 0) throw std::invalid_argument("mobius: positive argument required");
    long long mu = 1;
    for (long long p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        k /= p;
        if (k % p == 0) return 0;
        mu = -mu;
    }
    if (k > 1) mu = -mu;
    return mu;
}

namespace {

template <typename V>
V scale_value(const V& v, const BigRational& c);

template <>
BigRational scale_value(const BigRational& v, const BigRational& c) {
    return v * c;
}

template <>
RatFun scale_value(const RatFun& v, const BigRational& c) {
    return v * RatFun(c);
}

}  // namespace

template <typename V>
V assemble(const InvariantSeries<V>& gv, const CoverExponent& e, const ClassKey& beta) {
    V total{};
    for (long long k : beta.divisors())
        total += scale_value(gv.at(beta.divided_by(k)), BigRational(k).pow(e.exponent()));
    return total;
}

template <typename V>
InvariantSeries<V> invert(const InvariantSeries<V>& gw, const CoverExponent& e) {
    // Triangular recursion. Sorting by coordinate gcd puts every proper
    // divisor class before its multiples, since gcd(beta/k) = gcd(beta)/k.
    std::vector<ClassKey> keys;
    for (const auto& [beta, value] : gw.entries) keys.push_back(beta);
    std::sort(keys.begin(), keys.end(), [](const ClassKey& a, const ClassKey& b) {
        long long ga = 0, gb = 0;
        for (long long c : a.coords()) ga = std::gcd(ga, c < 0 ? -c : c);
        for (long long c : b.coords()) gb = std::gcd(gb, c < 0 ? -c : c);
        if (ga != gb) return ga < gb;
        return a < b;
    });
    InvariantSeries<V> out;
    for (const ClassKey& beta : keys) {
        V n = gw.at(beta);
        for (long long k : beta.divisors()) {
            if (k == 1) continue;
            n += scale_value(out.at(beta.divided_by(k)), -BigRational(k).pow(e.exponent()));
        }
        out.set(beta, std::move(n));
    }
    return out;
}

template <typename V>
InvariantSeries<V> invert_mobius(const InvariantSeries<V>& gw, const CoverExponent& e) {
    InvariantSeries<V> out;
    for (const auto& [beta, value] : gw.entries) {
        V n{};
        for (long long k : beta.divisors()) {
            BigRational c = BigRational(mobius(k)) * BigRational(k).pow(e.exponent());
            if (!c.is_zero()) n += scale_value(gw.at(beta.divided_by(k)), c);
        }
        out.set(beta, std::move(n));
    }
    return out;
}

RatFun extract_dt_local(const LocalCurveGeometry& geom, const InvariantSeries<RatFun>& gw_values,
                        long long d) {
    (void)geom;  // validated at construction; extraction is pure arithmetic
    if (d <= 0) throw std::invalid_argument("extract_dt_local: positive degree required");
    RatFun dt = gw_values.at(ClassKey::degree(d));
    for (long long k = 2; k <= d; ++k) {
        if (d % k != 0) continue;
        RatFun sub = extract_dt_local(geom, gw_values, d / k);
        dt -= sub * RatFun(BigRational(1, k * k * k));
    }
    return dt;
}

std::vector<ClassKey> integrality_report(const InvariantSeries<BigRational>& series) {
    std::vector<ClassKey> bad;
    for (const auto& [beta, value] : series.entries)
        if (!value.is_integer()) bad.push_back(beta);
    return bad;
}

InvariantSeries<BigRational> read_series(std::istream& in) {
    InvariantSeries<BigRational> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line) blank = blank && std::isspace(static_cast<unsigned char>(c));
        if (blank) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("series line " + std::to_string(lineno) + ": missing ':'");
        std::string key = line.substr(0, colon);
        std::string val = line.substr(colon + 1);
        std::string compact;
        for (char c : val)
            if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
        out.set(ClassKey::parse(key), BigRational::parse(compact));
    }
    return out;
}

void write_series(std::ostream& out, const InvariantSeries<BigRational>& series) {
    for (const auto& [beta, value] : series.entries)
        out << beta.str() << " : " << value.str() << "\n";
}

template BigRational assemble(const InvariantSeries<BigRational>&, const CoverExponent&,
                              const ClassKey&);
template RatFun assemble(const InvariantSeries<RatFun>&, const CoverExponent&, const ClassKey&);
template InvariantSeries<BigRational> invert(const InvariantSeries<BigRational>&,
                                             const CoverExponent&);
template InvariantSeries<RatFun> invert(const InvariantSeries<RatFun>&, const CoverExponent&);
template InvariantSeries<BigRational> invert_mobius(const InvariantSeries<BigRational>&,
                                                    const CoverExponent&);
template InvariantSeries<RatFun> invert_mobius(const InvariantSeries<RatFun>&,
                                               const CoverExponent&);
template struct InvariantSeries<BigRational>;
template struct InvariantSeries<RatFun>;

}  // namespace gwdt
