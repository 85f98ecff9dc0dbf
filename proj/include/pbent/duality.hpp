#pragma once

#include "pbent/cayley.hpp"

namespace pbent {

enum class RegularityKind { regular, weakly_regular_minus, not_weakly_regular };

/// Outcome of factoring every Walsh value as sign * p^{n/2} * zeta^j.
/// `dual` holds the exponent function when the sign is constant.
struct RegularityReport {
    RegularityKind kind = RegularityKind::not_weakly_regular;
    int unit_sign = 0;                 // +1 or -1 when weakly regular, else 0
    std::optional<PAryFunction> dual;
    std::optional<Index> witness;      // first x breaking the factorization

    bool weakly_regular() const { return kind != RegularityKind::not_weakly_regular; }
};

/// Requires a bent function on an even number of variables.  A mixed sign or
/// a Walsh value that is not a root of unity times p^{n/2} means the function
/// is bent but not weakly regular.
RegularityReport classify_regularity(const PAryFunction& f);

/// "regular", "(-1)-weakly regular", or "not weakly regular".
std::string regularity_label(RegularityKind kind);

/// The dual read off the eigenvalue pattern: each nonzero x has exactly one
/// class j with lambda_j(x) = N - r_j, and f^*(x) is that j taken mod p.
/// Requires the feasibility structure.
PAryFunction dual_by_distinguished_index(const PAryFunction& f);

/// Structural comparison between a feasible function and its dual:
/// equal level-set sizes, the two linear identities connecting indicators
/// and eigenvalues across the pair, and matching strong-regularity verdicts
/// per class.  `set_match[i-1]` is the class j with D_i^* = D_j, or -1.
struct DualStructureReport {
    bool sizes_ok = false;
    bool component_identity_ok = false;
    bool fourier_identity_ok = false;
    bool srg_match_ok = false;
    std::vector<int> set_match;
    std::optional<Index> witness;  // a point where an identity fails

    bool all_ok() const {
        return sizes_ok && component_identity_ok && fourier_identity_ok && srg_match_ok;
    }
};

DualStructureReport verify_dual_structure(const PAryFunction& f);

} // namespace pbent
