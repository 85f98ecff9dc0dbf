#pragma once

#include "pbent/cayley.hpp"

namespace pbent {

/// Intersection numbers rho_{ij}^k of the translation scheme candidate with
/// classes D_0 = {0}, D_1, ..., D_p.  Entries touching an empty class are 0
/// and such classes are left out of `nonempty`.
struct SchemeConstants {
    int p = 0;
    std::vector<long long> rho;  // (p+1)^3 entries
    std::vector<int> nonempty;   // ascending class ids, always starting at 0

    long long at(int i, int j, int k) const {
        return rho[(static_cast<std::size_t>(i) * (p + 1) + j) * (p + 1) + k];
    }
    void set(int i, int j, int k, long long v) {
        rho[(static_cast<std::size_t>(i) * (p + 1) + j) * (p + 1) + k] = v;
    }

    friend bool operator==(const SchemeConstants&, const SchemeConstants&) = default;
};

/// Two z in the same class with different counts |{w in D_i : z - w in D_j}|.
struct SchemeWitness {
    int i = 0, j = 0, k = 0;
    Index z1 = 0, z2 = 0;
    long long count1 = 0, count2 = 0;
};

struct SchemeCheck {
    std::optional<SchemeConstants> constants;
    std::optional<SchemeWitness> witness;

    bool is_scheme() const { return constants.has_value(); }
};

/// Tests whether the level-set partition forms an association scheme by
/// counting difference representations directly; requires f even with
/// f(0) = 0.
SchemeCheck scheme_check(const PAryFunction& f);

/// The same constants through the eigenvalue route: rho_{ij}^k =
/// sum_x lambda_i lambda_j lambda_k / (p^n |D_k|), with lambda_0 = 1.
/// Inexact division means the partition was not a scheme.
SchemeConstants constants_by_trace(const PAryFunction& f);

/// Number of x with f(x+b) - f(x) = j for any b in class i, evaluated purely
/// from the constants; i in 1..p, j in 1..p-1.
long long derivative_count_by_constants(const SchemeConstants& c, int i, int j);

struct ConstantsBentVerdict {
    bool bent = false;
    std::optional<std::pair<int, int>> witness; // failing (i, j)
};

/// Bent iff every derivative count equals p^{n-1}; requires the scheme
/// property.
ConstantsBentVerdict is_bent_by_constants(const PAryFunction& f);

enum class AmorphicMode { automatic, fusion };
enum class AmorphicMethod { spectral_srg, fusion_exhaustive };
enum class SquareType { lst, nlst, none };

struct AmorphicVerdict {
    bool scheme = false;
    bool amorphic = false;
    SquareType type = SquareType::none;
    AmorphicMethod method = AmorphicMethod::spectral_srg;
};

/// Amorphic = every fusion of the (nonempty) classes is again a scheme.
/// The automatic mode decides spectrally: a scheme with at most two classes
/// is trivially amorphic, and one with more is amorphic exactly when every
/// class graph is strongly regular of square type with a common sign.  For
/// p <= 5 the automatic mode also replays the exhaustive fusion route and
/// insists the answers agree.  Fusion mode is refused for p > 7.
AmorphicVerdict amorphic_check(const PAryFunction& f, AmorphicMode mode = AmorphicMode::automatic);

/// Constants a square-type decomposition must produce: diagonal entries
/// N + r_i^2 - 3 r_i, same-class pairs (r_j - 1) r_j, mixed pairs with the
/// target class on one side (r_i - 1) r_j, and r_j r_k for three distinct
/// classes.  `r` lists r_1 .. r_p; classes with r_i = 0 are treated as
/// empty.
SchemeConstants imy_predicted(PrimeModulus p, long long N, const std::vector<long long>& r);

/// Fixed text layout of the constants, one matrix block per class.
std::string render_constants(const SchemeConstants& c);

} // namespace pbent
