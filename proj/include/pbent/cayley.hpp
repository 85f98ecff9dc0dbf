#pragma once

#include "pbent/spectral.hpp"

namespace pbent {

/// Cayley graph on GF(p)^n: x ~ y iff x - y lies in the connection set,
/// which excludes 0 and is closed under negation.
class CayleyGraph {
public:
    CayleyGraph(PrimeModulus p, int n, std::vector<Index> connection);

    int p() const noexcept { return domain_.p(); }
    int n() const noexcept { return domain_.n(); }
    const Domain& domain() const noexcept { return domain_; }
    Index vertices() const noexcept { return domain_.size(); }
    long long degree() const noexcept { return static_cast<long long>(connection_.size()); }
    const std::vector<Index>& connection() const noexcept { return connection_; }
    bool connected_to_origin(Index z) const { return member_[static_cast<std::size_t>(z)] != 0; }

private:
    Domain domain_;
    std::vector<Index> connection_;
    std::vector<char> member_;
};

/// The component graphs Gamma_1 .. Gamma_p of an even f with f(0) = 0,
/// with connection sets D_1 .. D_p.
std::vector<CayleyGraph> component_graphs(const PAryFunction& f);

CayleyGraph union_graph(const CayleyGraph& a, const CayleyGraph& b);

struct SrgParams {
    long long nu = 0, k = 0, lambda = 0, mu = 0;
    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

enum class SrgStatus { srg, not_srg, empty };

struct SrgVerdict {
    SrgStatus status = SrgStatus::not_srg;
    std::optional<SrgParams> params;  // present iff status == srg
    std::optional<Index> witness;     // a z where common-neighbor counts break
    bool complete = false;            // complete graphs report not_srg

    bool is_srg() const { return status == SrgStatus::srg; }
};

/// Combinatorial check via the translation-invariant common-neighbor count
/// c(z) = |D and (z + D)|: c must be constant on the connection set (lambda)
/// and on the complement of D + {0} (mu).  The empty graph gets its own
/// status; the complete graph is not strongly regular.
SrgVerdict srg_check(const CayleyGraph& g);

/// Distinct Cayley eigenvalues lambda(x) = fourier(D)(x) with
/// multiplicities, ordered by canonical coefficients.
struct EigenvalueCensus {
    std::vector<std::pair<CycInt, long long>> entries;
    bool all_rational = true;

    std::size_t distinct_count() const { return entries.size(); }
};

EigenvalueCensus eigenvalue_census(const CayleyGraph& g);

/// Derives (lambda, mu) from a census with at most three distinct rational
/// eigenvalues using mu = k + theta tau and lambda = mu + theta + tau;
/// returns nothing when the census shape already rules strong regularity
/// out.  Cross-checks the combinatorial route.
std::optional<SrgParams> srg_params_from_census(const EigenvalueCensus& census, Index nu,
                                                long long degree);

/// A square-type parameter solution: (nu, k, lambda, mu) =
/// (N^2, (N-1)r, N + r^2 - 3r, r^2 - r).  N > 0, r > 0 is Latin square
/// type; N < 0, r < 0 is negative Latin square type.
struct LstSolution {
    long long N = 0, r = 0;
    friend bool operator==(const LstSolution&, const LstSolution&) = default;
};

struct LstClassification {
    std::vector<LstSolution> solutions;

    bool lst() const {
        for (const auto& s : solutions)
            if (s.N > 0) return true;
        return false;
    }
    bool nlst() const {
        for (const auto& s : solutions)
            if (s.N < 0) return true;
        return false;
    }
};

LstClassification classify_lst(const SrgParams& params);

enum class FeasibilityKind { lst, nlst, neither };

/// Whole-function test: level-set sizes match a square-type profile and
/// every component graph is strongly regular with exactly the prescribed
/// parameters (a prescribed-empty class must be empty).
struct FeasibilityVerdict {
    FeasibilityKind kind = FeasibilityKind::neither;
    SizeProfilePair profiles;
    bool lst_sizes_match = false, nlst_sizes_match = false;
    std::vector<SrgVerdict> graph_verdicts; // Gamma_1 .. Gamma_p

    const SizeProfile& profile() const; // the matched side; throws on neither
};

FeasibilityVerdict feasibility_verdict(const PAryFunction& f);

/// For feasible square-type f, the unique j with lambda_j(x) = N - r_j for
/// each x != 0 (other classes give -r_i).  Entry 0 of the result is unused.
std::vector<int> distinguished_index(const PAryFunction& f);
std::vector<int> distinguished_index(const PAryFunction& f, const FeasibilityVerdict& feas);

} // namespace pbent
