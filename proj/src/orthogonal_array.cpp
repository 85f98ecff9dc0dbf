#include "pbent/orthogonal_array.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace pbent {

namespace {

constexpr Index kMaxSymbols = 256;  // keeps the grid and the N^2-point domain small

void require_well_formed(const OrthogonalArray& oa) {
    if (oa.N <= 0 || oa.grid.empty())
        throw PreconditionError("orthogonal array has no rows");
    for (const auto& row : oa.grid) {
        if (static_cast<Index>(row.size()) != oa.columns())
            throw PreconditionError("orthogonal array row has the wrong length");
        for (int s : row)
            if (s < 0 || s >= oa.N)
                throw PreconditionError("orthogonal array symbol out of range");
    }
}

} // namespace

std::optional<OaViolation> validate_oa(const OrthogonalArray& oa) {
    require_well_formed(oa);
    const Index cols = oa.columns();
    std::vector<Index> seen(static_cast<std::size_t>(oa.N) * oa.N);
    for (int a = 0; a < oa.rows(); ++a)
        for (int b = a + 1; b < oa.rows(); ++b) {
            std::fill(seen.begin(), seen.end(), Index{-1});
            for (Index c = 0; c < cols; ++c) {
                const std::size_t pair =
                    static_cast<std::size_t>(oa.grid[a][c]) * oa.N + oa.grid[b][c];
                if (seen[pair] >= 0) return OaViolation{a, b, seen[pair], c};
                seen[pair] = c;
            }
        }
    return std::nullopt;
}

OrthogonalArray bush_construct(PrimeModulus p, int m) {
    ExtField field(p, m);
    const Index N = field.order();
    if (N > kMaxSymbols) throw PreconditionError("field too large for the array");

    OrthogonalArray oa;
    oa.p = p.value();
    oa.m = m;
    oa.N = N;
    oa.grid.assign(static_cast<std::size_t>(N) + 1,
                   std::vector<int>(static_cast<std::size_t>(N) * N));
    for (Index a = 0; a < N; ++a) {
        for (Index b = 0; b < N; ++b)
            oa.grid[0][static_cast<std::size_t>(a * N + b)] = static_cast<int>(a);
        for (Index c = 0; c < N; ++c) {
            const Index ac = field.mul(a, c);
            auto& row = oa.grid[static_cast<std::size_t>(c) + 1];
            for (Index b = 0; b < N; ++b)
                row[static_cast<std::size_t>(a * N + b)] = static_cast<int>(field.add(ac, b));
        }
    }
    return oa;
}

std::string oa_to_text(const OrthogonalArray& oa) {
    if (oa.p > 9) throw PreconditionError("the text format writes symbols in single digits");
    std::ostringstream out;
    out << oa.p << ' ' << oa.m << ' ' << oa.rows() << '\n';
    std::string token(static_cast<std::size_t>(oa.m), '0');
    for (const auto& row : oa.grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            int s = row[c];
            for (int d = oa.m - 1; d >= 0; --d) {
                token[static_cast<std::size_t>(d)] = static_cast<char>('0' + s % oa.p);
                s /= oa.p;
            }
            if (c) out << ' ';
            out << token;
        }
        out << '\n';
    }
    return out.str();
}

namespace {

struct IntScanner {
    const std::string& text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    long long next(const char* what) {
        skip_space();
        const std::size_t start = pos;
        if (pos >= text.size())
            throw ParseError(std::string("expected ") + what, start);
        bool neg = false;
        if (text[pos] == '-') { neg = true; ++pos; }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError(std::string("expected ") + what, start);
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > (1ll << 40)) throw ParseError("number too large", start);
            ++pos;
        }
        return neg ? -v : v;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
};

} // namespace

OrthogonalArray oa_from_text(const std::string& text) {
    IntScanner in{text};
    const long long p = in.next("prime");
    if (p < 2 || p > 9) throw PreconditionError("prime out of range for single-digit symbols");
    PrimeModulus pm(static_cast<int>(p));  // non-prime p is a precondition failure
    const std::size_t mpos = in.pos;
    const long long m = in.next("extension degree");
    const std::size_t rpos = in.pos;
    const long long rows = in.next("row count");

    OrthogonalArray oa;
    oa.p = pm.value();
    oa.m = static_cast<int>(m);
    oa.N = 1;
    if (m < 1 || m > 8) throw ParseError("extension degree out of range", mpos);
    for (int i = 0; i < m; ++i) {
        oa.N *= p;
        if (oa.N > kMaxSymbols) throw ParseError("symbol set too large", mpos);
    }
    // too many rows for index 1 is caught by validation, not by the parser
    if (rows < 1 || rows > 1024) throw ParseError("row count out of range", rpos);

    oa.grid.assign(static_cast<std::size_t>(rows),
                   std::vector<int>(static_cast<std::size_t>(oa.columns())));
    // each symbol is a run of exactly m digits, every digit below p
    for (auto& row : oa.grid)
        for (auto& cell : row) {
            in.skip_space();
            const std::size_t at = in.pos;
            int s = 0;
            for (int d = 0; d < oa.m; ++d) {
                if (in.pos >= text.size() ||
                    !std::isdigit(static_cast<unsigned char>(text[in.pos])))
                    throw ParseError("expected a symbol of " + std::to_string(oa.m) + " digits",
                                     at);
                const int digit = text[in.pos] - '0';
                if (digit >= oa.p) throw ParseError("symbol digit out of range", in.pos);
                s = s * oa.p + digit;
                ++in.pos;
            }
            if (in.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[in.pos])))
                throw ParseError("symbol has too many digits", at);
            cell = s;
        }
    if (!in.done()) throw ParseError("trailing input after the last row", in.pos);
    return oa;
}

RowPartition default_partition(const OrthogonalArray& oa) {
    if (oa.rows() != oa.N + 1)
        throw PreconditionError("default partition needs all N + 1 rows");
    const int per = static_cast<int>(oa.N) / oa.p;
    RowPartition out;
    int next = 0;
    for (int v = 1; v < oa.p; ++v) {
        RowGroup g;
        g.value = v;
        for (int i = 0; i < per; ++i) g.rows.push_back(next++);
        out.groups.push_back(std::move(g));
    }
    RowGroup zero;
    zero.value = 0;
    while (next < oa.rows()) zero.rows.push_back(next++);
    out.groups.push_back(std::move(zero));
    return out;
}

RowPartition parse_partition(const std::string& text, const OrthogonalArray& oa) {
    RowPartition out;
    std::vector<char> row_used(static_cast<std::size_t>(oa.rows()), 0);
    std::vector<char> value_used(static_cast<std::size_t>(oa.p), 0);
    std::vector<std::size_t> unvalued;  // group indices awaiting a value

    IntScanner in{text};
    bool group_open = true;
    while (group_open) {
        RowGroup g;
        bool rows_open = true;
        while (rows_open) {
            const std::size_t at = in.pos;
            const long long r = in.next("row index");
            if (r < 0 || r >= oa.rows()) throw ParseError("row index out of range", at);
            if (row_used[static_cast<std::size_t>(r)])
                throw ParseError("row listed twice", at);
            row_used[static_cast<std::size_t>(r)] = 1;
            g.rows.push_back(static_cast<int>(r));
            in.skip_space();
            if (in.pos < in.text.size() && in.text[in.pos] == ',') ++in.pos;
            else rows_open = false;
        }
        g.value = -1;
        in.skip_space();
        if (in.pos < in.text.size() && in.text[in.pos] == ':') {
            ++in.pos;
            const std::size_t at = in.pos;
            const long long v = in.next("group value");
            if (v < 0 || v >= oa.p) throw ParseError("group value out of range", at);
            if (value_used[static_cast<std::size_t>(v)])
                throw ParseError("group value used twice", at);
            value_used[static_cast<std::size_t>(v)] = 1;
            g.value = static_cast<int>(v);
        } else {
            unvalued.push_back(out.groups.size());
        }
        out.groups.push_back(std::move(g));
        in.skip_space();
        if (in.pos < in.text.size() && in.text[in.pos] == '|') ++in.pos;
        else group_open = false;
    }
    if (!in.done()) throw ParseError("unexpected character in partition", in.pos);
    if (static_cast<int>(out.groups.size()) > oa.p)
        throw ParseError("more groups than values", in.pos);

    for (std::size_t gi : unvalued) {
        int v = 1;
        while (v < oa.p && value_used[static_cast<std::size_t>(v)]) ++v;
        if (v == oa.p) v = 0;
        if (value_used[static_cast<std::size_t>(v)])
            throw ParseError("no value left for a group", in.pos);
        value_used[static_cast<std::size_t>(v)] = 1;
        out.groups[gi].value = v;
    }
    return out;
}

PAryFunction bent_from_oa(const OrthogonalArray& oa, const RowPartition& partition) {
    require_well_formed(oa);
    const Index cols = oa.columns();
    std::vector<int> values(static_cast<std::size_t>(cols), 0);
    std::vector<char> covered(static_cast<std::size_t>(cols), 0);
    for (const RowGroup& g : partition.groups)
        for (int r : g.rows) {
            if (r < 0 || r >= oa.rows())
                throw PreconditionError("partition row out of range");
            const auto& row = oa.grid[static_cast<std::size_t>(r)];
            for (Index v = 1; v < cols; ++v)
                if (row[static_cast<std::size_t>(v)] == row[0]) {
                    if (covered[static_cast<std::size_t>(v)])
                        throw PreconditionError("a column meets column 0 in two chosen rows");
                    covered[static_cast<std::size_t>(v)] = 1;
                    values[static_cast<std::size_t>(v)] = g.value;
                }
        }
    for (Index v = 1; v < cols; ++v)
        if (!covered[static_cast<std::size_t>(v)])
            throw PreconditionError("a column never meets column 0 in the chosen rows");
    return PAryFunction(PrimeModulus{oa.p}, 2 * oa.m, std::move(values));
}

DenseGraph::DenseGraph(Index vertices) : vertices_(vertices) {
    if (vertices <= 0 || vertices > (Index{1} << 14))
        throw PreconditionError("dense graph size out of range");
    stride_ = (static_cast<std::size_t>(vertices) + 63) / 64;
    bits_.assign(stride_ * static_cast<std::size_t>(vertices), 0);
}

void DenseGraph::add_edge(Index u, Index v) {
    if (u == v) throw PreconditionError("loops are not allowed");
    bits_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v >> 6)] |=
        std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * stride_ + static_cast<std::size_t>(u >> 6)] |=
        std::uint64_t{1} << (u & 63);
}

long long DenseGraph::degree(Index v) const {
    long long total = 0;
    const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(v) * stride_;
    for (std::size_t i = 0; i < stride_; ++i) total += std::popcount(row[i]);
    return total;
}

long long DenseGraph::common_neighbors(Index u, Index v) const {
    long long total = 0;
    const std::uint64_t* a = bits_.data() + static_cast<std::size_t>(u) * stride_;
    const std::uint64_t* b = bits_.data() + static_cast<std::size_t>(v) * stride_;
    for (std::size_t i = 0; i < stride_; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

DenseGraph oa_graph(const OrthogonalArray& oa, const std::vector<int>& rows) {
    require_well_formed(oa);
    DenseGraph g(oa.columns());
    std::vector<std::vector<Index>> bucket(static_cast<std::size_t>(oa.N));
    for (int r : rows) {
        if (r < 0 || r >= oa.rows()) throw PreconditionError("row index out of range");
        for (auto& b : bucket) b.clear();
        for (Index c = 0; c < oa.columns(); ++c)
            bucket[static_cast<std::size_t>(oa.grid[static_cast<std::size_t>(r)]
                                                   [static_cast<std::size_t>(c)])]
                .push_back(c);
        for (const auto& b : bucket)
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = i + 1; j < b.size(); ++j) g.add_edge(b[i], b[j]);
    }
    return g;
}

SrgVerdict srg_check(const DenseGraph& g) {
    const Index v = g.vertices();
    SrgVerdict out;
    const long long k = g.degree(0);
    for (Index x = 1; x < v; ++x)
        if (g.degree(x) != k) {
            out.witness = x;
            return out;
        }
    if (k == 0) {
        out.status = SrgStatus::empty;
        return out;
    }
    if (k == v - 1) {
        out.complete = true;
        return out;
    }
    long long lambda = -1, mu = -1;
    for (Index a = 0; a < v; ++a)
        for (Index b = a + 1; b < v; ++b) {
            const long long c = g.common_neighbors(a, b);
            long long& want = g.adjacent(a, b) ? lambda : mu;
            if (want < 0) want = c;
            else if (want != c) {
                out.witness = b;
                return out;
            }
        }
    out.status = SrgStatus::srg;
    out.params = SrgParams{v, k, lambda, mu};
    return out;
}

} // namespace pbent
