#ifndef GWDT_MULTICOVER_HPP
#define GWDT_MULTICOVER_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "gwdt/geometry.hpp"
#include "gwdt/ratfun.hpp"

namespace gwdt {

// Effective class key: a positive integer degree, or an integer vector on a
// lattice. Divisibility is coordinatewise.
class ClassKey {
public:
    static ClassKey degree(long long d);
    static ClassKey lattice(std::vector<long long> coords);
    static ClassKey parse(const std::string& text);  // "d" or "(d;d1,...,dr)"

    bool is_degree() const { return degree_; }
    const std::vector<long long>& coords() const { return coords_; }

    bool divisible_by(long long k) const;
    ClassKey divided_by(long long k) const;
    ClassKey scaled(long long k) const;
    // divisors k >= 1 with k | beta, ascending
    std::vector<long long> divisors() const;

    std::string str() const;

    friend bool operator<(const ClassKey& a, const ClassKey& b) {
        if (a.degree_ != b.degree_) return a.degree_ && !b.degree_;
        return a.coords_ < b.coords_;
    }
    friend bool operator==(const ClassKey& a, const ClassKey& b) {
        return a.degree_ == b.degree_ && a.coords_ == b.coords_;
    }

private:
    std::vector<long long> coords_;
    bool degree_ = true;
};

template <typename V>
struct InvariantSeries {
    std::map<ClassKey, V> entries;

    void set(const ClassKey& k, V v) { entries[k] = std::move(v); }
    bool contains(const ClassKey& k) const { return entries.find(k) != entries.end(); }
    // throws std::out_of_range naming the class when absent
    const V& at(const ClassKey& k) const;
};

// Multiple-cover exponent: n insertions give per-cover weight k^(n-3).
struct CoverExponent {
    int n_insertions = 0;
    int exponent() const { return n_insertions - 3; }
};

long long mobius(long long k);

// GW(beta) = sum over k | beta of k^(n-3) gv(beta/k)
template <typename V>
V assemble(const InvariantSeries<V>& gv, const CoverExponent& e, const ClassKey& beta);

// Unique series n with assemble(n, e, .) = gw on every class of gw.
// Triangular recursion; invert_mobius is the Moebius-summation route and
// must agree.
template <typename V>
InvariantSeries<V> invert(const InvariantSeries<V>& gw, const CoverExponent& e);
template <typename V>
InvariantSeries<V> invert_mobius(const InvariantSeries<V>& gw, const CoverExponent& e);

// Local-curve extraction: DT(d) = GW(d) - sum_{k|d, k>1} DT(d/k)/k^3.
RatFun extract_dt_local(const LocalCurveGeometry& geom, const InvariantSeries<RatFun>& gw_values,
                        long long d);

// Classes carrying non-integer values; empty means integrality holds.
std::vector<ClassKey> integrality_report(const InvariantSeries<BigRational>& series);

// Series file format: one `classKey : value` per line, '#' comments,
// whitespace-insensitive, values exact rationals p/q.
InvariantSeries<BigRational> read_series(std::istream& in);
void write_series(std::ostream& out, const InvariantSeries<BigRational>& series);

}  // namespace gwdt

#endif
