#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pbent/fields.hpp"

namespace pbent {

/// A function GF(p)^n -> GF(p) stored as a full value table in point-index
/// order.
class PAryFunction {
public:
    PAryFunction(PrimeModulus p, int n, std::vector<int> values);

    int p() const noexcept { return domain_.p(); }
    int n() const noexcept { return domain_.n(); }
    Index size() const noexcept { return domain_.size(); }
    const Domain& domain() const noexcept { return domain_; }
    const std::vector<int>& values() const noexcept { return values_; }

    int value(Index x) const { return values_[static_cast<std::size_t>(x)]; }
    int operator()(Index x) const { return value(x); }

    friend bool operator==(const PAryFunction& a, const PAryFunction& b) {
        return a.p() == b.p() && a.n() == b.n() && a.values_ == b.values_;
    }

private:
    Domain domain_;
    std::vector<int> values_;
};

bool is_even(const PAryFunction& f);

/// The partition of GF(p)^n induced by f with f(0) = 0: classes[0] = {0},
/// classes[i] = f^{-1}(i) for 1 <= i <= p-1, and classes[p] = f^{-1}(0)
/// minus the origin.  Each class is sorted by point index.
struct LevelSets {
    std::vector<std::vector<Index>> classes;

    std::vector<long long> sizes() const; // |D_1| .. |D_p|
};

LevelSets level_sets(const PAryFunction& f); // requires f(0) = 0

/// Level-set sizes a bent function on GF(p)^{2m} must realize for its
/// component graphs to carry square-type parameters: |D_i| = (N - 1) r_i
/// with r_i = N/p for i < p and r_p = N/p + 1, where N = p^m for the Latin
/// square side and N = -p^m for the negative Latin square side.  `feasible`
/// is false when the prescribed graph parameters would be negative, which
/// rules the profile out entirely.
struct SizeProfile {
    long long N = 0;
    std::vector<long long> r;      // r_1 .. r_p
    std::vector<long long> sizes;  // |D_1| .. |D_p|
    bool feasible = false;

    bool matches(const LevelSets& ls) const;
};

struct SizeProfilePair {
    SizeProfile lst;
    SizeProfile nlst;
};

SizeProfilePair feasible_sizes(PrimeModulus p, int m);

/// Sparse algebraic normal form: exponent tuple (per variable, each in
/// 0 .. p-1 after reduction by x^p = x) -> coefficient in 1 .. p-1.
struct Anf {
    int p = 0;
    int n = 0;
    std::map<std::vector<int>, int> terms;

    /// Renders with coefficients in the symmetric range, so p-1 prints as a
    /// subtraction; terms are ordered by total degree, then reverse
    /// lexicographically on the exponent tuple.
    std::string to_string() const;

    friend bool operator==(const Anf& a, const Anf& b) {
        return a.p == b.p && a.n == b.n && a.terms == b.terms;
    }
};

Anf anf_interpolate(const PAryFunction& f);
PAryFunction anf_evaluate(const Anf& a);

/// Parses a polynomial in variables x0 .. x{n-1} over GF(p).  Terms are
/// joined by '+' or '-'; each term is an optional integer coefficient and
/// '*'-separated powers like x0^2.  Exponents e >= 1 reduce by x^p = x and
/// coefficients reduce mod p.  Whitespace is insignificant.
Anf parse_poly(std::string_view source, PrimeModulus p, int n);

/// Function-table document: a single JSON object {"p": .., "n": ..,
/// "values": [..]} with p^n values in point-index order.
std::string table_to_json(const PAryFunction& f);
PAryFunction table_from_json(std::string_view text);

} // namespace pbent
