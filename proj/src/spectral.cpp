#include "pbent/spectral.hpp"

#include <sstream>

namespace pbent {

namespace {

BigInt pow_big(int base, int exp) {
    BigInt v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

Spectrum walsh_naive(const PAryFunction& f) {
    const Domain& d = f.domain();
    const int p = f.p();
    Spectrum out{d.modulus(), f.n(), {}};
    out.values.reserve(static_cast<std::size_t>(d.size()));
    std::vector<long long> counts(p);
    for (Index x = 0; x < d.size(); ++x) {
        std::fill(counts.begin(), counts.end(), 0);
        for (Index y = 0; y < d.size(); ++y) {
            int e = f(y) - d.inner(x, y);
            ++counts[static_cast<std::size_t>(((e % p) + p) % p)];
        }
        std::vector<BigInt> raw(counts.begin(), counts.end());
        out.values.push_back(CycInt::from_power_coeffs(d.modulus(), std::move(raw)));
    }
    return out;
}

Spectrum walsh_fast(const PAryFunction& f) {
    const Domain& d = f.domain();
    const int p = f.p();
    const Index size = d.size();
    // Values travel as raw length-p exponent blocks; multiplying by
    // zeta^{-x_a y_a} is an exponent rotation, so each axis pass is a p-point
    // transform of blocks.
    std::vector<BigInt> cur(static_cast<std::size_t>(size) * p), next(cur.size());
    for (Index y = 0; y < size; ++y)
        cur[static_cast<std::size_t>(y) * p + f(y)] = 1;
    Index stride = size / p;
    for (int axis = 0; axis < f.n(); ++axis) {
        for (Index base = 0; base < size; ++base) {
            if ((base / stride) % p != 0) continue;
            for (int xd = 0; xd < p; ++xd) {
                auto* out_block = &next[static_cast<std::size_t>(base + xd * stride) * p];
                for (int e = 0; e < p; ++e) out_block[e] = 0;
                for (int yd = 0; yd < p; ++yd) {
                    const auto* in_block = &cur[static_cast<std::size_t>(base + yd * stride) * p];
                    const int shift = xd * yd % p;
                    for (int e = 0; e < p; ++e)
                        out_block[e] += in_block[(e + shift) % p];
                }
            }
        }
        cur.swap(next);
        stride /= p;
    }
    Spectrum out{d.modulus(), f.n(), {}};
    out.values.reserve(static_cast<std::size_t>(size));
    for (Index x = 0; x < size; ++x) {
        std::vector<BigInt> raw(cur.begin() + static_cast<std::ptrdiff_t>(x) * p,
                                cur.begin() + static_cast<std::ptrdiff_t>(x + 1) * p);
        out.values.push_back(CycInt::from_power_coeffs(d.modulus(), std::move(raw)));
    }
    return out;
}

} // namespace

Spectrum walsh_transform(const PAryFunction& f, TransformMethod method) {
    return method == TransformMethod::naive ? walsh_naive(f) : walsh_fast(f);
}

Spectrum fourier_indicator(const std::vector<Index>& set, PrimeModulus p, int n) {
    Domain d(p, n);
    for (Index y : set)
        if (y < 0 || y >= d.size()) throw PreconditionError("set member out of range");
    Spectrum out{p, n, {}};
    out.values.reserve(static_cast<std::size_t>(d.size()));
    std::vector<long long> counts(p.value());
    for (Index x = 0; x < d.size(); ++x) {
        std::fill(counts.begin(), counts.end(), 0);
        for (Index y : set)
            ++counts[static_cast<std::size_t>((p.value() - d.inner(x, y)) % p.value())];
        std::vector<BigInt> raw(counts.begin(), counts.end());
        out.values.push_back(CycInt::from_power_coeffs(p, std::move(raw)));
    }
    return out;
}

BentVerdict is_bent(const PAryFunction& f) {
    Spectrum w = walsh_transform(f);
    CycInt target(f.domain().modulus(), pow_big(f.p(), f.n()));
    for (Index x = 0; x < f.size(); ++x)
        if (w.at(x).norm_sq() != target) return {false, x};
    return {true, std::nullopt};
}

PAryFunction derivative(const PAryFunction& f, Index b) {
    const Domain& d = f.domain();
    std::vector<int> values(static_cast<std::size_t>(d.size()));
    for (Index x = 0; x < d.size(); ++x) {
        int v = (f(d.add(x, b)) - f(x)) % f.p();
        values[static_cast<std::size_t>(x)] = (v + f.p()) % f.p();
    }
    return PAryFunction(d.modulus(), f.n(), std::move(values));
}

BentVerdict is_bent_by_derivatives(const PAryFunction& f) {
    const Domain& d = f.domain();
    const Index balanced = d.size() / f.p();
    std::vector<Index> counts(f.p());
    for (Index b = 1; b < d.size(); ++b) {
        std::fill(counts.begin(), counts.end(), 0);
        for (Index x = 0; x < d.size(); ++x) {
            int v = (f(d.add(x, b)) - f(x)) % f.p();
            ++counts[static_cast<std::size_t>((v + f.p()) % f.p())];
        }
        for (int v = 0; v < f.p(); ++v)
            if (counts[static_cast<std::size_t>(v)] != balanced) return {false, b};
    }
    return {true, std::nullopt};
}

Spectrum walsh_from_eigenvalues(const PAryFunction& f) {
    if (!is_even(f)) throw PreconditionError("eigenvalue route requires an even function");
    LevelSets ls = level_sets(f); // also enforces f(0) = 0
    const PrimeModulus p = f.domain().modulus();
    Spectrum out{p, f.n(), {}};
    out.values.assign(static_cast<std::size_t>(f.size()), CycInt(p, 1));
    for (int i = 1; i <= f.p(); ++i) {
        Spectrum lam = fourier_indicator(ls.classes[static_cast<std::size_t>(i)], p, f.n());
        CycInt zi = CycInt::zeta_pow(p, i);
        for (Index x = 0; x < f.size(); ++x)
            out.values[static_cast<std::size_t>(x)] += zi * lam.at(x);
    }
    return out;
}

std::string spectrum_dump(const Spectrum& s) {
    std::ostringstream out;
    for (const CycInt& v : s.values) {
        bool first = true;
        for (const BigInt& c : v.coeffs()) {
            if (!first) out << ' ';
            out << c;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace pbent
