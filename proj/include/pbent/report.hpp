#pragma once

#include <string>

#include "pbent/function.hpp"

namespace pbent {

struct AnalysisOptions {
    bool normalize = false;  // subtract f(0) first instead of rejecting it
};

/// The same analysis rendered twice: a sectioned plain-text report and a
/// JSON object mirroring it field for field.  Both are deterministic
/// functions of the value table.
struct AnalysisDocument {
    std::string text;
    std::string json;
};

/// Runs the full pipeline: evenness, level sets and size feasibility, Walsh
/// spectrum with bentness and regularity, per-class graph classification,
/// and the association-scheme analysis.  Functions that are not even, or
/// have a nonzero origin value without `normalize`, get only the input and
/// normalization sections plus a note.  Independent routes to the same
/// verdict are replayed against each other; a disagreement throws
/// InconsistencyError.
AnalysisDocument analyze_function(const PAryFunction& f, const AnalysisOptions& options = {});

/// 64-bit FNV-1a over the value table, four little-endian bytes per value,
/// rendered as 16 hex digits.
std::string table_digest(const PAryFunction& f);

} // namespace pbent
