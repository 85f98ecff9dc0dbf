#include "pbent/fields.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace pbent {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Index checked_pow(int p, int n) {
    Index v = 1;
    for (int i = 0; i < n; ++i) {
        if (v > std::numeric_limits<Index>::max() / p)
            throw PreconditionError("domain size p^n overflows");
        v *= p;
    }
    return v;
}

// Polynomials over GF(p) as ascending coefficient vectors; the degree is the
// position of the last nonzero entry.

int poly_deg(const std::vector<int>& f) {
    for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d)
        if (f[d] != 0) return d;
    return -1;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    return out;
}

// Remainder of f by monic g.
std::vector<int> poly_rem(std::vector<int> f, const std::vector<int>& g, int p) {
    int dg = poly_deg(g);
    for (int d = poly_deg(f); d >= dg && dg >= 0; d = poly_deg(f)) {
        int c = f[d];
        for (int j = 0; j <= dg; ++j) {
            int k = d - dg + j;
            f[k] = ((f[k] - c * g[j]) % p + p) % p;
        }
    }
    return f;
}

bool is_irreducible(const std::vector<int>& f, int p) {
    int m = poly_deg(f);
    // Trial division by every monic polynomial of degree 1 .. m/2.
    for (int d = 1; 2 * d <= m; ++d) {
        Index count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (Index k = 0; k < count; ++k) {
            std::vector<int> g(d + 1, 0);
            Index t = k;
            for (int j = 0; j < d; ++j) { g[j] = static_cast<int>(t % p); t /= p; }
            g[d] = 1;
            if (poly_deg(poly_rem(f, g, p)) < 0) return false;
        }
    }
    return true;
}

} // namespace

PrimeModulus::PrimeModulus(int p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw PreconditionError("modulus must be an odd prime >= 3, got " + std::to_string(p));
}

Domain::Domain(PrimeModulus p, int n) : p_(p), n_(n) {
    if (n < 1) throw PreconditionError("dimension must be >= 1");
    size_ = checked_pow(p.value(), n);
    if (size_ > (Index{1} << 26))
        throw PreconditionError("domain too large");
    digits_.resize(static_cast<std::size_t>(size_) * n_);
    for (Index i = 0; i < size_; ++i) {
        Index t = i;
        for (int a = n_ - 1; a >= 0; --a) {
            digits_[static_cast<std::size_t>(i) * n_ + a] = static_cast<int>(t % p.value());
            t /= p.value();
        }
    }
}

std::vector<int> Domain::point(Index index) const {
    if (index < 0 || index >= size_) throw PreconditionError("point index out of range");
    auto base = digits_.begin() + static_cast<std::ptrdiff_t>(index) * n_;
    return std::vector<int>(base, base + n_);
}

Index Domain::index_of(std::span<const int> coords) const {
    return point_to_index(p_, n_, coords);
}

Index Domain::negate(Index a) const {
    Index out = 0;
    for (int i = 0; i < n_; ++i)
        out = out * p() + (p() - digit(a, i)) % p();
    return out;
}

Index Domain::add(Index a, Index b) const {
    Index out = 0;
    for (int i = 0; i < n_; ++i)
        out = out * p() + (digit(a, i) + digit(b, i)) % p();
    return out;
}

Index Domain::sub(Index a, Index b) const {
    Index out = 0;
    for (int i = 0; i < n_; ++i)
        out = out * p() + (digit(a, i) - digit(b, i) + p()) % p();
    return out;
}

int Domain::inner(Index a, Index b) const {
    int s = 0;
    for (int i = 0; i < n_; ++i)
        s += digit(a, i) * digit(b, i);
    return s % p();
}

std::vector<int> index_to_point(PrimeModulus p, int n, Index index) {
    std::vector<int> out(n);
    for (int a = n - 1; a >= 0; --a) {
        out[a] = static_cast<int>(index % p.value());
        index /= p.value();
    }
    if (index != 0) throw PreconditionError("point index out of range");
    return out;
}

Index point_to_index(PrimeModulus p, int n, std::span<const int> coords) {
    if (static_cast<int>(coords.size()) != n)
        throw PreconditionError("coordinate count does not match dimension");
    Index out = 0;
    for (int a = 0; a < n; ++a) {
        if (coords[a] < 0 || coords[a] >= p.value())
            throw PreconditionError("coordinate out of range");
        out = out * p.value() + coords[a];
    }
    return out;
}

int inner_product(PrimeModulus p, std::span<const int> x, std::span<const int> y) {
    if (x.size() != y.size()) throw PreconditionError("inner product length mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += static_cast<long long>(x[i]) * y[i];
    return static_cast<int>(s % p.value());
}

ExtField::ExtField(PrimeModulus p, int m) : p_(p), m_(m) {
    if (m < 1) throw PreconditionError("extension degree must be >= 1");
    order_ = checked_pow(p.value(), m);
    // Candidates are ordered by the coefficient tuple (constant term first);
    // the first irreducible monic polynomial wins.  For m = 1 this yields the
    // degenerate modulus t.
    Index count = order_;
    for (Index k = 0; k < count; ++k) {
        std::vector<int> f(m + 1, 0);
        Index t = k;
        // Big-endian digits of k are read as (constant, t^1, ..., t^{m-1}).
        for (int j = m - 1; j >= 0; --j) { f[j] = static_cast<int>(t % p.value()); t /= p.value(); }
        f[m] = 1;
        if (is_irreducible(f, p.value())) { modulus_ = f; break; }
    }
}

Index ExtField::add(Index a, Index b) const {
    Index out = 0;
    for (int i = m_ - 1, shift = 1; i >= 0; --i, shift *= p()) {
        int da = static_cast<int>((a / shift) % p());
        int db = static_cast<int>((b / shift) % p());
        out += static_cast<Index>((da + db) % p()) * shift;
    }
    return out;
}

Index ExtField::neg(Index a) const {
    Index out = 0;
    for (int i = m_ - 1, shift = 1; i >= 0; --i, shift *= p()) {
        int da = static_cast<int>((a / shift) % p());
        out += static_cast<Index>((p() - da) % p()) * shift;
    }
    return out;
}

Index ExtField::mul(Index a, Index b) const {
    // Ascending coefficient arrays: digit c_{m-1} (least significant) is the
    // constant term.
    std::vector<int> fa(m_, 0), fb(m_, 0);
    Index t = a;
    for (int j = 0; j < m_; ++j) { fa[j] = static_cast<int>(t % p()); t /= p(); }
    t = b;
    for (int j = 0; j < m_; ++j) { fb[j] = static_cast<int>(t % p()); t /= p(); }
    std::vector<int> prod = poly_mul(fa, fb, p());
    prod = poly_rem(std::move(prod), modulus_, p());
    Index out = 0;
    for (int j = m_ - 1; j >= 0; --j)
        out = out * p() + (j < static_cast<int>(prod.size()) ? prod[j] : 0);
    return out;
}

Index ExtField::inv(Index a) const {
    if (a == 0) throw PreconditionError("zero has no inverse");
    Index e = order_ - 2;
    Index acc = 1, base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::vector<int> ExtField::coords(Index a) const {
    return index_to_point(p_, m_, a);
}

Index ExtField::element(std::span<const int> coords) const {
    return point_to_index(p_, m_, coords);
}

} // namespace pbent
