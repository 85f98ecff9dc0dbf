#include "pbent/cyclotomic.hpp"

#include <sstream>

namespace pbent {

namespace {

void require_same_p(const CycInt& a, const CycInt& b) {
    if (a.p() != b.p())
        throw PreconditionError("cyclotomic operands belong to different rings");
}

BigInt pow_big(int base, int exp) {
    BigInt v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

} // namespace

CycInt::CycInt(PrimeModulus p) : p_(p), c_(p.value() - 1) {}

CycInt::CycInt(PrimeModulus p, BigInt integer) : p_(p), c_(p.value() - 1) {
    c_[0] = std::move(integer);
}

CycInt CycInt::zeta_pow(PrimeModulus p, long long k) {
    CycInt out(p);
    long long r = k % p.value();
    if (r < 0) r += p.value();
    if (r == p.value() - 1) {
        // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
        for (auto& c : out.c_) c = -1;
    } else {
        out.c_[static_cast<std::size_t>(r)] = 1;
    }
    return out;
}

CycInt CycInt::from_power_coeffs(PrimeModulus p, std::vector<BigInt> raw) {
    if (static_cast<int>(raw.size()) != p.value())
        throw PreconditionError("raw coefficient vector must have length p");
    CycInt out(p);
    const BigInt& top = raw.back();
    for (int i = 0; i < p.value() - 1; ++i)
        out.c_[i] = raw[i] - top;
    return out;
}

bool CycInt::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

std::optional<BigInt> CycInt::as_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return std::nullopt;
    return c_[0];
}

CycInt CycInt::conj() const {
    // Complex conjugation sends zeta^k to zeta^{p-k}.
    std::vector<BigInt> raw(p(), BigInt{0});
    raw[0] = c_[0];
    for (int k = 1; k < p() - 1; ++k)
        raw[static_cast<std::size_t>(p() - k)] = c_[k];
    return from_power_coeffs(p_, std::move(raw));
}

CycInt CycInt::norm_sq() const {
    return *this * conj();
}

std::string CycInt::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        BigInt a = c_[i];
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0) {
            out << a;
        } else {
            if (a != 1) out << a << "*";
            out << "z";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

CycInt CycInt::operator-() const {
    CycInt out(p_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
    return out;
}

CycInt operator+(const CycInt& a, const CycInt& b) {
    require_same_p(a, b);
    CycInt out(a.p_);
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
}

CycInt operator-(const CycInt& a, const CycInt& b) {
    require_same_p(a, b);
    CycInt out(a.p_);
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
    return out;
}

CycInt& CycInt::operator+=(const CycInt& b) {
    require_same_p(*this, b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& b) {
    require_same_p(*this, b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
    return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    require_same_p(a, b);
    const int p = a.p();
    // Convolve on exponents, fold by zeta^p = 1, then canonicalize.
    std::vector<BigInt> raw(p, BigInt{0});
    for (int i = 0; i < p - 1; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < p - 1; ++j) {
            if (b.c_[j] == 0) continue;
            raw[(i + j) % p] += a.c_[i] * b.c_[j];
        }
    }
    return CycInt::from_power_coeffs(a.p_, std::move(raw));
}

CycInt operator*(const BigInt& s, const CycInt& a) {
    CycInt out(a.modulus());
    std::vector<BigInt> scaled(a.coeffs());
    for (auto& c : scaled) c *= s;
    scaled.push_back(BigInt{0});
    return CycInt::from_power_coeffs(a.modulus(), std::move(scaled));
}

bool operator==(const CycInt& a, const CycInt& b) {
    require_same_p(a, b);
    return a.c_ == b.c_;
}

bool operator<(const CycInt& a, const CycInt& b) {
    require_same_p(a, b);
    return a.c_ < b.c_;
}

std::optional<RootMultiple> classify_root_multiple(const CycInt& a, int m) {
    const int p = a.p();
    const BigInt mag = pow_big(p, m);
    const auto& c = a.coeffs();
    // sign * zeta^j * p^m has canonical form: a single coefficient equal to
    // sign * p^m when j <= p-2, and all coefficients equal to -sign * p^m
    // when j = p-1.
    bool all_equal = true;
    int nonzero = 0, where = -1;
    for (int i = 0; i < p - 1; ++i) {
        if (c[i] != c[0]) all_equal = false;
        if (c[i] != 0) { ++nonzero; where = i; }
    }
    if (all_equal && c[0] == mag) return RootMultiple{-1, p - 1};
    if (all_equal && c[0] == -mag) return RootMultiple{+1, p - 1};
    if (nonzero == 1 && c[where] == mag) return RootMultiple{+1, where};
    if (nonzero == 1 && c[where] == -mag) return RootMultiple{-1, where};
    return std::nullopt;
}

} // namespace pbent
