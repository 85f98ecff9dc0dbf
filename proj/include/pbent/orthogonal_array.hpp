#pragma once

#include "pbent/cayley.hpp"

#include <string>

namespace pbent {

/// Orthogonal array of strength 2 and index 1: rows x N^2 grid over symbols
/// 0 .. N-1, N = p^m, where every ordered symbol pair appears exactly once
/// across any two rows.
struct OrthogonalArray {
    int p = 0;
    int m = 1;
    Index N = 0;
    std::vector<std::vector<int>> grid;

    int rows() const { return static_cast<int>(grid.size()); }
    Index columns() const { return N * N; }
};

/// Two columns agreeing in two rows, which duplicates a symbol pair.
struct OaViolation {
    int row_a = 0, row_b = 0;
    Index col_a = 0, col_b = 0;
};

std::optional<OaViolation> validate_oa(const OrthogonalArray& oa);

/// The (N+1) x N^2 array of Bush: columns are the pairs (a, b) in GF(N)^2 in
/// index order, the first row maps (a, b) to a, and the remaining rows map
/// (a, b) to a*c + b, one row per field element c in index order.
OrthogonalArray bush_construct(PrimeModulus p, int m);

/// Text form: "p m rows" header line, then one line per row.
std::string oa_to_text(const OrthogonalArray& oa);
OrthogonalArray oa_from_text(const std::string& text);

/// Rows grouped by function value.
struct RowGroup {
    std::vector<int> rows;
    int value = 0;
};
struct RowPartition {
    std::vector<RowGroup> groups;
};

/// Blocks of N/p consecutive rows valued 1 .. p-1, then the remaining
/// N/p + 1 rows valued 0.
RowPartition default_partition(const OrthogonalArray& oa);

/// Grammar: groups separated by '|', each a comma-separated list of row
/// indices with an optional ':value'.  Unvalued groups receive the smallest
/// unused value from 1 .. p-1, then 0.  Example: "0|1|2,3:0".
RowPartition parse_partition(const std::string& text, const OrthogonalArray& oa);

/// f(v) = value of the group owning the row where column v agrees with
/// column 0.  Requires every nonzero column to agree with column 0 in
/// exactly one group of the partition.
PAryFunction bent_from_oa(const OrthogonalArray& oa, const RowPartition& partition);

/// Adjacency kept as packed bit rows; loops are never set.
class DenseGraph {
public:
    explicit DenseGraph(Index vertices);

    Index vertices() const noexcept { return vertices_; }
    void add_edge(Index u, Index v);
    bool adjacent(Index u, Index v) const {
        return (bits_[static_cast<std::size_t>(u) * stride_ +
                      static_cast<std::size_t>(v >> 6)] >>
                (v & 63)) & 1u;
    }
    long long degree(Index v) const;
    long long common_neighbors(Index u, Index v) const;

private:
    Index vertices_;
    std::size_t stride_;
    std::vector<std::uint64_t> bits_;
};

/// Columns are vertices; two columns are adjacent when they agree in one of
/// the selected rows.
DenseGraph oa_graph(const OrthogonalArray& oa, const std::vector<int>& rows);

SrgVerdict srg_check(const DenseGraph& g);

} // namespace pbent
