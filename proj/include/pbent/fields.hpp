#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pbent/errors.hpp"

namespace pbent {

using Index = std::int64_t;

/// An odd prime p >= 3, validated at construction.
class PrimeModulus {
public:
    explicit PrimeModulus(int p);

    int value() const noexcept { return p_; }

    friend bool operator==(PrimeModulus a, PrimeModulus b) noexcept { return a.p_ == b.p_; }
    friend bool operator!=(PrimeModulus a, PrimeModulus b) noexcept { return a.p_ != b.p_; }

private:
    int p_;
};

/// The group GF(p)^n together with the fixed point enumeration used
/// everywhere in this library: point x = (x_0, ..., x_{n-1}) has index
/// sum_a x_a * p^{n-1-a}, so x_0 is the most significant digit and index 0
/// is the origin.  All arithmetic helpers work on indices.
class Domain {
public:
    Domain(PrimeModulus p, int n);

    int p() const noexcept { return p_.value(); }
    PrimeModulus modulus() const noexcept { return p_; }
    int n() const noexcept { return n_; }
    Index size() const noexcept { return size_; }

    std::vector<int> point(Index index) const;
    Index index_of(std::span<const int> coords) const;

    Index negate(Index a) const;
    Index add(Index a, Index b) const;
    Index sub(Index a, Index b) const;

    /// Standard inner product <x, y> = sum_a x_a y_a mod p.
    int inner(Index a, Index b) const;

    int digit(Index a, int axis) const { return digits_[static_cast<std::size_t>(a) * n_ + axis]; }

private:
    PrimeModulus p_;
    int n_;
    Index size_;
    std::vector<int> digits_; // size_ * n_, row-major, big-endian per point
};

std::vector<int> index_to_point(PrimeModulus p, int n, Index index);
Index point_to_index(PrimeModulus p, int n, std::span<const int> coords);
int inner_product(PrimeModulus p, std::span<const int> x, std::span<const int> y);

/// The finite field GF(p^m), represented on element indices 0 .. p^m - 1.
/// Index k has big-endian base-p digits (c_0, ..., c_{m-1}) which are read
/// as the polynomial c_0 t^{m-1} + ... + c_{m-2} t + c_{m-1}, so indices
/// 0 .. p-1 are the prime subfield.  The modulus is the lexicographically
/// smallest monic irreducible polynomial of degree m, comparing coefficient
/// tuples from the constant term upward.
class ExtField {
public:
    ExtField(PrimeModulus p, int m);

    int p() const noexcept { return p_.value(); }
    int m() const noexcept { return m_; }
    Index order() const noexcept { return order_; }

    /// Modulus coefficients in ascending degree, length m + 1, monic.
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    Index add(Index a, Index b) const;
    Index neg(Index a) const;
    Index mul(Index a, Index b) const;
    Index inv(Index a) const; // throws PreconditionError on 0

    std::vector<int> coords(Index a) const;
    Index element(std::span<const int> coords) const;

private:
    PrimeModulus p_;
    int m_;
    Index order_;
    std::vector<int> modulus_;
};

} // namespace pbent
