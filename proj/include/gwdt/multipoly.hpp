#ifndef GWDT_MULTIPOLY_HPP
#define GWDT_MULTIPOLY_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwdt/rational.hpp"

namespace gwdt {

// The fixed variable set of the whole engine.
inline constexpr int kNumVars = 3;
inline const char* const kVarNames[kNumVars] = {"lambda0", "lambda1", "lambda2"};
enum Var : int { kLambda0 = 0, kLambda1 = 1, kLambda2 = 2 };

// Exponent triple (e0, e1, e2) for (lambda0, lambda1, lambda2).
struct Monomial {
    std::array<int, kNumVars> e{0, 0, 0};

    int total_degree() const { return e[0] + e[1] + e[2]; }

    // Canonical order: graded, then lexicographic with lambda0 > lambda1 > lambda2.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
};

// Sparse multivariate polynomial over Q in (lambda0, lambda1, lambda2).
// Invariant: no stored zero coefficients; term map ordered by the canonical
// monomial order, so the leading term is the last entry.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, BigRational>;

    MultiPoly() = default;
    explicit MultiPoly(const BigRational& c) { add_term(Monomial{}, c); }
    explicit MultiPoly(long c) : MultiPoly(BigRational(c)) {}

    static MultiPoly variable(int v, int exponent = 1);
    // c0*lambda0 + c1*lambda1 + c2*lambda2 (+ constant c).
    static MultiPoly linear(const BigRational& c0, const BigRational& c1,
                            const BigRational& c2, const BigRational& c = BigRational());

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const BigRational& c);
    BigRational coefficient(const Monomial& m) const;
    BigRational constant_term() const { return coefficient(Monomial{}); }

    const Monomial& leading_monomial() const;   // largest in canonical order
    const BigRational& leading_coefficient() const;
    int total_degree() const;                   // degree of leading term; -1 for zero
    int degree_in(int v) const;                 // max exponent of variable v; -1 for zero
    int min_exponent_in(int v) const;           // content power of variable v; 0 for zero

    bool is_homogeneous() const;                // every term has equal total degree (zero counts)
    bool depends_on(int v) const { return degree_in(v) > 0; }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly& scale(const BigRational& c);
    MultiPoly pow(int e) const;                 // e >= 0

    // Divide every term by v^k (each term must have exponent >= k in v).
    MultiPoly shift_down(int v, int k) const;
    // Substitute variable v := 0 (drops all terms depending on v).
    MultiPoly at_zero(int v) const;

    // Substitution: each assigned variable maps either to a rational constant
    // or to another variable; unassigned variables stay put. Applied
    // simultaneously to the original exponents.
    struct Assignment {
        std::optional<BigRational> value[kNumVars];
        std::optional<int> rename[kNumVars];
        bool assigned(int v) const { return value[v].has_value() || rename[v].has_value(); }
    };
    MultiPoly substitute(const Assignment& a) const;

    // Rational content: c such that (*this)/c has coprime integer coefficients
    // with positive leading coefficient. Zero polynomial has content 0.
    BigRational content() const;

    std::string str() const;  // sum of terms, canonical order, descending

private:
    TermMap terms_;
};

// Exact multivariate division: returns a/b if b divides a, nullopt otherwise.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

// Gcd over Q, normalized primitive with positive leading coefficient.
// gcd(0,0) = 0. The result is defined up to the stated normalization.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace gwdt

#endif
