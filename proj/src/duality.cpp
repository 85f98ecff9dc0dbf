#include "pbent/duality.hpp"

#include <algorithm>

namespace pbent {

RegularityReport classify_regularity(const PAryFunction& f) {
    if (f.n() % 2 != 0)
        throw PreconditionError("regularity classification needs an even number of variables");
    Spectrum w = walsh_transform(f);
    BigInt pn = 1;
    for (int i = 0; i < f.n(); ++i) pn *= f.p();
    const CycInt norm(f.domain().modulus(), pn);
    for (Index x = 0; x < f.size(); ++x)
        if (w.at(x).norm_sq() != norm)
            throw PreconditionError("regularity classification needs a bent function");

    RegularityReport out;
    std::vector<int> dual_values(static_cast<std::size_t>(f.size()));
    int sign = 0;
    for (Index x = 0; x < f.size(); ++x) {
        auto rm = classify_root_multiple(w.at(x), f.n() / 2);
        if (!rm || (sign != 0 && rm->sign != sign)) {
            out.witness = x;
            return out;
        }
        sign = rm->sign;
        dual_values[static_cast<std::size_t>(x)] = rm->power;
    }
    out.kind = sign > 0 ? RegularityKind::regular : RegularityKind::weakly_regular_minus;
    out.unit_sign = sign;
    out.dual = PAryFunction(f.domain().modulus(), f.n(), std::move(dual_values));
    return out;
}

std::string regularity_label(RegularityKind kind) {
    switch (kind) {
    case RegularityKind::regular: return "regular";
    case RegularityKind::weakly_regular_minus: return "(-1)-weakly regular";
    default: return "not weakly regular";
    }
}

PAryFunction dual_by_distinguished_index(const PAryFunction& f) {
    std::vector<int> idx = distinguished_index(f);
    std::vector<int> values(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) values[i] = idx[i] % f.p();
    return PAryFunction(f.domain().modulus(), f.n(), std::move(values));
}

DualStructureReport verify_dual_structure(const PAryFunction& f) {
    auto feas = feasibility_verdict(f);
    if (feas.kind == FeasibilityKind::neither)
        throw PreconditionError("dual structure verification needs a feasible function");
    const SizeProfile& prof = feas.profile();
    const long long N = prof.N;
    const PrimeModulus pm = f.domain().modulus();
    const int p = f.p();

    PAryFunction dual = dual_by_distinguished_index(f);
    LevelSets ls = level_sets(f);
    LevelSets lsd = level_sets(dual);

    DualStructureReport out;
    out.sizes_ok = ls.sizes() == lsd.sizes();

    auto rational_row = [&](const std::vector<Index>& cls) {
        Spectrum s = fourier_indicator(cls, pm, f.n());
        std::vector<long long> row(static_cast<std::size_t>(f.size()));
        for (Index x = 0; x < f.size(); ++x) {
            auto v = s.at(x).as_integer();
            if (!v) throw InconsistencyError("irrational eigenvalue on a feasible function");
            row[static_cast<std::size_t>(x)] = static_cast<long long>(*v);
        }
        return row;
    };

    out.component_identity_ok = true;
    out.fourier_identity_ok = true;
    for (int i = 1; i <= p; ++i) {
        const long long ri = prof.r[static_cast<std::size_t>(i - 1)];
        const auto& di = ls.classes[static_cast<std::size_t>(i)];
        const auto& dis = lsd.classes[static_cast<std::size_t>(i)];
        auto lambda = rational_row(di);
        auto lambda_dual = rational_row(dis);
        std::vector<char> in_di(static_cast<std::size_t>(f.size()), 0);
        std::vector<char> in_dis(static_cast<std::size_t>(f.size()), 0);
        for (Index z : di) in_di[static_cast<std::size_t>(z)] = 1;
        for (Index z : dis) in_dis[static_cast<std::size_t>(z)] = 1;
        for (Index x = 0; x < f.size(); ++x) {
            const long long origin = x == 0 ? 1 : 0;
            if (N * in_dis[static_cast<std::size_t>(x)] !=
                lambda[static_cast<std::size_t>(x)] + ri - N * ri * origin) {
                if (out.component_identity_ok) out.witness = x;
                out.component_identity_ok = false;
            }
            if (lambda_dual[static_cast<std::size_t>(x)] !=
                N * in_di[static_cast<std::size_t>(x)] + N * ri * origin - ri) {
                if (out.fourier_identity_ok && !out.witness) out.witness = x;
                out.fourier_identity_ok = false;
            }
        }
    }

    out.srg_match_ok = true;
    for (int i = 1; i <= p; ++i) {
        auto a = srg_check(CayleyGraph(pm, f.n(), ls.classes[static_cast<std::size_t>(i)]));
        auto b = srg_check(CayleyGraph(pm, f.n(), lsd.classes[static_cast<std::size_t>(i)]));
        if (a.status != b.status || a.params != b.params) out.srg_match_ok = false;
    }

    out.set_match.assign(static_cast<std::size_t>(p), -1);
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j)
            if (lsd.classes[static_cast<std::size_t>(i)] == ls.classes[static_cast<std::size_t>(j)]) {
                out.set_match[static_cast<std::size_t>(i - 1)] = j;
                break;
            }
    return out;
}

} // namespace pbent
