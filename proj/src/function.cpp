#include "pbent/function.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace pbent {

PAryFunction::PAryFunction(PrimeModulus p, int n, std::vector<int> values)
    : domain_(p, n), values_(std::move(values)) {
    if (static_cast<Index>(values_.size()) != domain_.size())
        throw PreconditionError("value table must have p^n entries");
    for (int v : values_)
        if (v < 0 || v >= p.value())
            throw PreconditionError("function value out of range");
}

bool is_even(const PAryFunction& f) {
    const Domain& d = f.domain();
    for (Index x = 0; x < d.size(); ++x)
        if (f(x) != f(d.negate(x))) return false;
    return true;
}

std::vector<long long> LevelSets::sizes() const {
    std::vector<long long> out;
    for (std::size_t i = 1; i < classes.size(); ++i)
        out.push_back(static_cast<long long>(classes[i].size()));
    return out;
}

LevelSets level_sets(const PAryFunction& f) {
    if (f(0) != 0)
        throw PreconditionError("level sets require f(0) = 0");
    LevelSets out;
    out.classes.assign(f.p() + 1, {});
    out.classes[0].push_back(0);
    for (Index x = 1; x < f.size(); ++x) {
        int v = f(x);
        out.classes[v == 0 ? f.p() : v].push_back(x);
    }
    return out;
}

bool SizeProfile::matches(const LevelSets& ls) const {
    auto got = ls.sizes();
    if (got.size() != sizes.size()) return false;
    return std::equal(got.begin(), got.end(), sizes.begin());
}

SizeProfilePair feasible_sizes(PrimeModulus p, int m) {
    if (m < 1) throw PreconditionError("m must be >= 1");
    long long pm = 1;
    for (int i = 0; i < m; ++i) pm *= p.value();
    SizeProfilePair out;
    for (long long N : {pm, -pm}) {
        SizeProfile prof;
        prof.N = N;
        prof.feasible = true;
        for (int i = 1; i <= p.value(); ++i) {
            long long r = N / p.value() + (i == p.value() ? 1 : 0);
            prof.r.push_back(r);
            prof.sizes.push_back((N - 1) * r);
            if (r != 0) {
                long long lambda = N + r * r - 3 * r;
                long long mu = r * r - r;
                if (lambda < 0 || mu < 0) prof.feasible = false;
            }
        }
        (N > 0 ? out.lst : out.nlst) = prof;
    }
    return out;
}

namespace {

// Vandermonde matrix V[x][e] = x^e mod p and its inverse; applying V to a
// coefficient tensor axis by axis evaluates, applying the inverse
// interpolates.
struct PowerMatrix {
    int p;
    std::vector<int> fwd, inv;

    explicit PowerMatrix(int p_) : p(p_), fwd(p_ * p_), inv(p_ * p_) {
        for (int x = 0; x < p; ++x) {
            int v = 1;
            for (int e = 0; e < p; ++e) {
                fwd[x * p + e] = v;
                v = v * x % p;
            }
        }
        invert();
    }

    void invert() {
        std::vector<int> a(fwd), id(p * p, 0);
        for (int i = 0; i < p; ++i) id[i * p + i] = 1;
        for (int col = 0; col < p; ++col) {
            int pivot = col;
            while (a[pivot * p + col] == 0) ++pivot;
            std::swap_ranges(a.begin() + pivot * p, a.begin() + (pivot + 1) * p, a.begin() + col * p);
            std::swap_ranges(id.begin() + pivot * p, id.begin() + (pivot + 1) * p, id.begin() + col * p);
            int piv = a[col * p + col];
            int piv_inv = 1;
            for (int k = 1; k < p; ++k)
                if (piv * k % p == 1) { piv_inv = k; break; }
            for (int j = 0; j < p; ++j) {
                a[col * p + j] = a[col * p + j] * piv_inv % p;
                id[col * p + j] = id[col * p + j] * piv_inv % p;
            }
            for (int row = 0; row < p; ++row) {
                if (row == col || a[row * p + col] == 0) continue;
                int factor = a[row * p + col];
                for (int j = 0; j < p; ++j) {
                    a[row * p + j] = ((a[row * p + j] - factor * a[col * p + j]) % p + p) % p;
                    id[row * p + j] = ((id[row * p + j] - factor * id[col * p + j]) % p + p) % p;
                }
            }
        }
        inv = std::move(id);
    }
};

// Applies the p x p matrix along every axis of the length-p^n tensor.
std::vector<int> apply_axiswise(const std::vector<int>& matrix, std::vector<int> tensor, int p, int n) {
    Index size = static_cast<Index>(tensor.size());
    std::vector<int> next(tensor.size());
    Index stride = size / p; // axis 0 is the most significant digit
    for (int axis = 0; axis < n; ++axis) {
        for (Index base = 0; base < size; ++base) {
            Index digit = (base / stride) % p;
            Index line_start = base - digit * stride;
            if (digit != 0) continue;
            for (int out_d = 0; out_d < p; ++out_d) {
                int acc = 0;
                for (int in_d = 0; in_d < p; ++in_d)
                    acc += matrix[out_d * p + in_d] * tensor[static_cast<std::size_t>(line_start + in_d * stride)];
                next[static_cast<std::size_t>(line_start + out_d * stride)] = acc % p;
            }
        }
        tensor.swap(next);
        stride /= p;
    }
    return tensor;
}

} // namespace

Anf anf_interpolate(const PAryFunction& f) {
    PowerMatrix pm(f.p());
    std::vector<int> coeffs = apply_axiswise(pm.inv, f.values(), f.p(), f.n());
    Anf out;
    out.p = f.p();
    out.n = f.n();
    for (Index i = 0; i < f.size(); ++i) {
        if (coeffs[static_cast<std::size_t>(i)] == 0) continue;
        out.terms[index_to_point(f.domain().modulus(), f.n(), i)] = coeffs[static_cast<std::size_t>(i)];
    }
    return out;
}

PAryFunction anf_evaluate(const Anf& a) {
    PrimeModulus p(a.p);
    Domain d(p, a.n);
    std::vector<int> coeffs(static_cast<std::size_t>(d.size()), 0);
    for (const auto& [expo, c] : a.terms) {
        if (c <= 0 || c >= a.p) throw PreconditionError("coefficient out of range");
        for (int e : expo)
            if (e < 0 || e >= a.p) throw PreconditionError("exponent out of range");
        coeffs[static_cast<std::size_t>(point_to_index(p, a.n, expo))] = c;
    }
    PowerMatrix pm(a.p);
    return PAryFunction(p, a.n, apply_axiswise(pm.fwd, std::move(coeffs), a.p, a.n));
}

std::string Anf::to_string() const {
    if (terms.empty()) return "0";
    std::vector<std::pair<std::vector<int>, int>> ordered(terms.begin(), terms.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (int e : a.first) da += e;
        for (int e : b.first) db += e;
        if (da != db) return da < db;
        return a.first > b.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [expo, c] : ordered) {
        int display = c <= p / 2 ? c : c - p; // symmetric residue
        bool neg = display < 0;
        int mag = neg ? -display : display;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        std::string vars;
        for (std::size_t i = 0; i < expo.size(); ++i) {
            if (expo[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(i);
            if (expo[i] > 1) vars += "^" + std::to_string(expo[i]);
        }
        if (vars.empty()) {
            out << mag;
        } else {
            if (mag != 1) out << mag << "*";
            out << vars;
        }
    }
    return out.str();
}

namespace {

struct PolyParser {
    std::string_view src;
    std::size_t pos = 0;
    int p, n;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= src.size();
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    // Reads digits, returning the value mod `mod` (and whether the true value
    // is zero), so arbitrarily long literals never overflow.
    std::pair<int, bool> digits_mod(int mod) {
        skip_ws();
        if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
            throw ParseError("expected a number", pos);
        long long acc = 0;
        bool zero = true;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            int d = src[pos] - '0';
            if (d != 0) zero = false;
            acc = (acc * 10 + d) % mod;
            ++pos;
        }
        return {static_cast<int>(acc), zero};
    }

    // x<k>[^e]; adds the reduced exponent for variable k into `expo`.
    void parse_power(std::vector<int>& expo) {
        skip_ws();
        std::size_t at = pos;
        if (peek() != 'x') throw ParseError("expected a variable like x0", pos);
        ++pos;
        if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
            throw ParseError("expected a variable index after 'x'", pos);
        long long k = 0;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            k = k * 10 + (src[pos] - '0');
            if (k > n) break;
            ++pos;
        }
        if (k >= n) throw ParseError("variable index " + std::to_string(k) + " out of range for n = " + std::to_string(n), at);
        int e = 1;
        if (peek() == '^') {
            ++pos;
            auto [em, zero] = digits_mod(p - 1);
            // x^e = x^{((e-1) mod (p-1)) + 1} for e >= 1; e = 0 gives the
            // empty factor.
            e = zero ? 0 : (em + p - 2) % (p - 1) + 1;
        }
        if (e > 0) {
            int total = expo[static_cast<std::size_t>(k)] + e;
            expo[static_cast<std::size_t>(k)] = total == 0 ? 0 : (total - 1) % (p - 1) + 1;
        }
    }

    // [coefficient] ['*' power]* | power ['*' power]*
    std::pair<std::vector<int>, int> parse_term() {
        std::vector<int> expo(n, 0);
        int coeff = 1;
        bool have_factor = false;
        skip_ws();
        if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            coeff = digits_mod(p).first;
            have_factor = true;
            while (peek() == '*') {
                ++pos;
                parse_power(expo);
            }
        } else {
            parse_power(expo);
            have_factor = true;
            while (peek() == '*') {
                ++pos;
                parse_power(expo);
            }
        }
        if (!have_factor) throw ParseError("empty term", pos);
        return {std::move(expo), coeff};
    }

    Anf parse() {
        Anf out;
        out.p = p;
        out.n = n;
        if (at_end()) throw ParseError("empty polynomial", pos);
        int sign = 1;
        if (peek() == '+') { ++pos; }
        else if (peek() == '-') { sign = -1; ++pos; }
        while (true) {
            auto [expo, coeff] = parse_term();
            int c = (sign * coeff % p + p) % p;
            if (c != 0) {
                auto it = out.terms.find(expo);
                int merged = ((it == out.terms.end() ? 0 : it->second) + c) % p;
                if (merged == 0) {
                    if (it != out.terms.end()) out.terms.erase(it);
                } else {
                    out.terms[expo] = merged;
                }
            }
            if (at_end()) break;
            char op = peek();
            if (op == '+') sign = 1;
            else if (op == '-') sign = -1;
            else throw ParseError(std::string("unexpected character '") + op + "'", pos);
            ++pos;
        }
        return out;
    }
};

} // namespace

Anf parse_poly(std::string_view source, PrimeModulus p, int n) {
    if (n < 1) throw PreconditionError("dimension must be >= 1");
    PolyParser parser{source, 0, p.value(), n};
    return parser.parse();
}

std::string table_to_json(const PAryFunction& f) {
    nlohmann::json doc;
    doc["p"] = f.p();
    doc["n"] = f.n();
    doc["values"] = f.values();
    return doc.dump();
}

PAryFunction table_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    if (!doc.is_object() || !doc.contains("p") || !doc.contains("n") || !doc.contains("values"))
        throw ParseError("function table needs fields p, n, values", 0);
    if (!doc["p"].is_number_integer() || !doc["n"].is_number_integer() || !doc["values"].is_array())
        throw ParseError("function table fields have wrong types", 0);
    int p = doc["p"].get<int>();
    int n = doc["n"].get<int>();
    std::vector<int> values;
    for (const auto& v : doc["values"]) {
        if (!v.is_number_integer()) throw ParseError("values must be integers", 0);
        values.push_back(v.get<int>());
    }
    PrimeModulus pm(p); // a non-prime p is a precondition failure, not a parse failure
    try {
        return PAryFunction(pm, n, std::move(values));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), 0);
    }
}

} // namespace pbent
