#pragma once

#include <optional>

#include "pbent/cyclotomic.hpp"
#include "pbent/function.hpp"

namespace pbent {

/// Exact cyclotomic spectrum indexed by point: either Walsh coefficients
/// W_f(x) = sum_y zeta^{f(y) - <x,y>} or Fourier coefficients of an
/// indicator, sum_{y in D} zeta^{-<x,y>}.
struct Spectrum {
    PrimeModulus p;
    int n;
    std::vector<CycInt> values;

    const CycInt& at(Index x) const { return values[static_cast<std::size_t>(x)]; }
};

enum class TransformMethod { naive, fast };

/// The naive method sums p^n roots per point; the fast method factors the
/// transform axis by axis.  Both are kept callable so they can check each
/// other.
Spectrum walsh_transform(const PAryFunction& f, TransformMethod method = TransformMethod::fast);

Spectrum fourier_indicator(const std::vector<Index>& set, PrimeModulus p, int n);

struct BentVerdict {
    bool bent = false;
    std::optional<Index> witness; // a point violating the criterion
};

/// Exact test: norm_sq(W_f(x)) = p^n for every x.
BentVerdict is_bent(const PAryFunction& f);

/// The difference function x -> f(x + b) - f(x).
PAryFunction derivative(const PAryFunction& f, Index b);

/// Exact test via balanced derivatives: every b != 0 must give a derivative
/// taking each value exactly p^{n-1} times.  The witness is a failing b.
BentVerdict is_bent_by_derivatives(const PAryFunction& f);

/// Reassembles the Walsh spectrum from the component indicator spectra as
/// 1 + sum_i zeta^i fourier(D_i); requires f even with f(0) = 0.
Spectrum walsh_from_eigenvalues(const PAryFunction& f);

/// One line per point: the canonical coefficients of the value, space
/// separated.
std::string spectrum_dump(const Spectrum& s);

} // namespace pbent
