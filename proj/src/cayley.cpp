#include "pbent/cayley.hpp"

#include <algorithm>
#include <cmath>

namespace pbent {

CayleyGraph::CayleyGraph(PrimeModulus p, int n, std::vector<Index> connection)
    : domain_(p, n), connection_(std::move(connection)) {
    std::sort(connection_.begin(), connection_.end());
    connection_.erase(std::unique(connection_.begin(), connection_.end()), connection_.end());
    member_.assign(static_cast<std::size_t>(domain_.size()), 0);
    for (Index z : connection_) {
        if (z <= 0 || z >= domain_.size())
            throw PreconditionError("connection set must contain nonzero points only");
        member_[static_cast<std::size_t>(z)] = 1;
    }
    for (Index z : connection_)
        if (!member_[static_cast<std::size_t>(domain_.negate(z))])
            throw PreconditionError("connection set must be closed under negation");
}

std::vector<CayleyGraph> component_graphs(const PAryFunction& f) {
    if (!is_even(f)) throw PreconditionError("component graphs require an even function");
    LevelSets ls = level_sets(f);
    std::vector<CayleyGraph> out;
    out.reserve(static_cast<std::size_t>(f.p()));
    for (int i = 1; i <= f.p(); ++i)
        out.emplace_back(f.domain().modulus(), f.n(), ls.classes[static_cast<std::size_t>(i)]);
    return out;
}

CayleyGraph union_graph(const CayleyGraph& a, const CayleyGraph& b) {
    if (a.p() != b.p() || a.n() != b.n())
        throw PreconditionError("union of graphs over different domains");
    std::vector<Index> merged(a.connection());
    merged.insert(merged.end(), b.connection().begin(), b.connection().end());
    return CayleyGraph(a.domain().modulus(), a.n(), std::move(merged));
}

SrgVerdict srg_check(const CayleyGraph& g) {
    const Domain& d = g.domain();
    const Index nu = d.size();
    const long long k = g.degree();
    if (k == 0) return {SrgStatus::empty, std::nullopt, std::nullopt, false};
    if (k == nu - 1) return {SrgStatus::not_srg, std::nullopt, std::nullopt, true};

    long long lambda = -1, mu = -1;
    for (Index z = 1; z < nu; ++z) {
        long long c = 0;
        for (Index w : g.connection())
            if (g.connected_to_origin(d.sub(z, w))) ++c;
        if (g.connected_to_origin(z)) {
            if (lambda < 0) lambda = c;
            else if (lambda != c) return {SrgStatus::not_srg, std::nullopt, z, false};
        } else {
            if (mu < 0) mu = c;
            else if (mu != c) return {SrgStatus::not_srg, std::nullopt, z, false};
        }
    }
    if (mu < 0) mu = 0; // no non-adjacent pairs cannot happen here (graph not complete)
    return {SrgStatus::srg, SrgParams{nu, k, lambda, mu}, std::nullopt, false};
}

EigenvalueCensus eigenvalue_census(const CayleyGraph& g) {
    Spectrum s = fourier_indicator(g.connection(), g.domain().modulus(), g.n());
    std::vector<CycInt> sorted(s.values);
    std::sort(sorted.begin(), sorted.end());
    EigenvalueCensus out;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        out.entries.emplace_back(sorted[i], static_cast<long long>(j - i));
        if (!sorted[i].as_integer()) out.all_rational = false;
        i = j;
    }
    return out;
}

std::optional<SrgParams> srg_params_from_census(const EigenvalueCensus& census, Index nu,
                                                long long degree) {
    if (!census.all_rational) return std::nullopt;
    if (degree == 0 || degree == nu - 1) return std::nullopt;
    std::vector<long long> values;
    for (const auto& [v, count] : census.entries)
        values.push_back(static_cast<long long>(*v.as_integer()));
    std::sort(values.rbegin(), values.rend());
    if (values.empty() || values.size() > 3) return std::nullopt;
    if (values.front() != degree) return std::nullopt;
    long long theta, tau;
    if (values.size() == 2) {
        // Two distinct eigenvalues of a regular non-complete graph: a
        // disjoint union of cliques, where theta = k coincides with the
        // degree.
        theta = degree;
        tau = values[1];
    } else if (values.size() == 3) {
        theta = values[1];
        tau = values[2];
    } else {
        return std::nullopt;
    }
    long long mu = degree + theta * tau;
    long long lambda = mu + theta + tau;
    if (mu < 0 || lambda < 0) return std::nullopt;
    return SrgParams{nu, degree, lambda, mu};
}

LstClassification classify_lst(const SrgParams& params) {
    LstClassification out;
    long long root = std::llround(std::sqrt(static_cast<double>(params.nu)));
    while (root * root > params.nu) --root;
    while ((root + 1) * (root + 1) <= params.nu) ++root;
    if (root * root != params.nu) return out;
    for (long long N : {root, -root}) {
        if (N == 1) continue;
        if (params.k % (N - 1) != 0) continue;
        long long r = params.k / (N - 1);
        if (!(r == 0 || (N > 0) == (r > 0))) continue;
        if (params.lambda != N + r * r - 3 * r) continue;
        if (params.mu != r * r - r) continue;
        out.solutions.push_back({N, r});
    }
    return out;
}

const SizeProfile& FeasibilityVerdict::profile() const {
    if (kind == FeasibilityKind::lst) return profiles.lst;
    if (kind == FeasibilityKind::nlst) return profiles.nlst;
    throw PreconditionError("function does not match a square-type profile");
}

FeasibilityVerdict feasibility_verdict(const PAryFunction& f) {
    if (f.n() % 2 != 0)
        throw PreconditionError("square-type feasibility requires even dimension");
    std::vector<CayleyGraph> graphs = component_graphs(f); // enforces evenness, f(0) = 0
    LevelSets ls = level_sets(f);

    FeasibilityVerdict out;
    out.profiles = feasible_sizes(f.domain().modulus(), f.n() / 2);
    out.lst_sizes_match = out.profiles.lst.matches(ls);
    out.nlst_sizes_match = out.profiles.nlst.matches(ls);
    for (const CayleyGraph& g : graphs)
        out.graph_verdicts.push_back(srg_check(g));

    auto side_matches = [&](const SizeProfile& prof) {
        if (!prof.feasible || !prof.matches(ls)) return false;
        for (int i = 1; i <= f.p(); ++i) {
            const SrgVerdict& v = out.graph_verdicts[static_cast<std::size_t>(i - 1)];
            long long r = prof.r[static_cast<std::size_t>(i - 1)];
            if (r == 0) {
                if (v.status != SrgStatus::empty) return false;
                continue;
            }
            SrgParams want{prof.N * prof.N, (prof.N - 1) * r, prof.N + r * r - 3 * r, r * r - r};
            if (v.status != SrgStatus::srg || *v.params != want) return false;
        }
        return true;
    };

    bool lst_ok = side_matches(out.profiles.lst);
    bool nlst_ok = side_matches(out.profiles.nlst);
    if (lst_ok && nlst_ok)
        throw InconsistencyError("level sets cannot match both square-type profiles");
    out.kind = lst_ok ? FeasibilityKind::lst : nlst_ok ? FeasibilityKind::nlst : FeasibilityKind::neither;
    return out;
}

std::vector<int> distinguished_index(const PAryFunction& f) {
    return distinguished_index(f, feasibility_verdict(f));
}

std::vector<int> distinguished_index(const PAryFunction& f, const FeasibilityVerdict& feas) {
    if (feas.kind == FeasibilityKind::neither)
        throw PreconditionError("distinguished index requires a feasible square-type function");
    const SizeProfile& prof = feas.profile();
    LevelSets ls = level_sets(f);
    const PrimeModulus p = f.domain().modulus();

    std::vector<std::vector<long long>> lambda(static_cast<std::size_t>(f.p()) + 1);
    for (int i = 1; i <= f.p(); ++i) {
        Spectrum s = fourier_indicator(ls.classes[static_cast<std::size_t>(i)], p, f.n());
        auto& row = lambda[static_cast<std::size_t>(i)];
        row.reserve(static_cast<std::size_t>(f.size()));
        for (const CycInt& v : s.values) {
            auto as_int = v.as_integer();
            if (!as_int)
                throw InconsistencyError("feasible component graph produced a non-integer eigenvalue");
            row.push_back(static_cast<long long>(*as_int));
        }
    }

    std::vector<int> out(static_cast<std::size_t>(f.size()), 0);
    for (Index x = 1; x < f.size(); ++x) {
        int found = 0;
        for (int i = 1; i <= f.p(); ++i) {
            long long r = prof.r[static_cast<std::size_t>(i - 1)];
            long long v = lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)];
            if (v == prof.N - r) {
                out[static_cast<std::size_t>(x)] = i;
                ++found;
            } else if (v != -r) {
                throw InconsistencyError("component eigenvalue outside the two-value spectrum");
            }
        }
        if (found != 1)
            throw InconsistencyError("distinguished index is not unique");
    }
    return out;
}

} // namespace pbent
