#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pbent/fields.hpp"

namespace pbent {

using BigInt = boost::multiprecision::cpp_int;

/// An element of Z[zeta] for zeta a primitive p-th root of unity, stored on
/// the power basis 1, zeta, ..., zeta^{p-2} with arbitrary-precision integer
/// coefficients.  The representation is canonical: any multiple of
/// 1 + zeta + ... + zeta^{p-1} (which is 0) has been removed, so equality is
/// coefficient equality.
class CycInt {
public:
    explicit CycInt(PrimeModulus p);               // zero
    CycInt(PrimeModulus p, BigInt integer);

    /// zeta^k for any integer k (reduced mod p).
    static CycInt zeta_pow(PrimeModulus p, long long k);

    /// Builds from raw coefficients of 1, zeta, ..., zeta^{p-1} (length p),
    /// folding away the zeta^{p-1} component.
    static CycInt from_power_coeffs(PrimeModulus p, std::vector<BigInt> raw);

    int p() const noexcept { return p_.value(); }
    PrimeModulus modulus() const noexcept { return p_; }

    /// Canonical coefficients c_0 .. c_{p-2}.
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }

    bool is_zero() const;

    /// The coefficient c_0 when the value is a rational integer, else empty.
    std::optional<BigInt> as_integer() const;

    CycInt conj() const;

    /// this * conj(this).  A rational integer in the cases this library
    /// compares against (p = 3, or Walsh values of bent functions), but
    /// returned unreduced so the comparison stays exact in general.
    CycInt norm_sq() const;

    std::string to_string() const;

    CycInt operator-() const;
    friend CycInt operator+(const CycInt& a, const CycInt& b);
    friend CycInt operator-(const CycInt& a, const CycInt& b);
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    CycInt& operator+=(const CycInt& b);
    CycInt& operator-=(const CycInt& b);

    friend bool operator==(const CycInt& a, const CycInt& b);
    friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

    /// Lexicographic order on canonical coefficients; used only to make
    /// reported eigenvalue lists deterministic.
    friend bool operator<(const CycInt& a, const CycInt& b);

private:
    PrimeModulus p_;
    std::vector<BigInt> c_;
};

/// Scales by a plain integer.
CycInt operator*(const BigInt& s, const CycInt& a);

struct RootMultiple {
    int sign;  // +1 or -1
    int power; // j in 0 .. p-1
};

/// Decides whether a = sign * zeta^power * p^m and returns the factorization
/// if so.  Used to put Walsh values of bent functions into the form the
/// classification theorems prescribe.
std::optional<RootMultiple> classify_root_multiple(const CycInt& a, int m);

} // namespace pbent
