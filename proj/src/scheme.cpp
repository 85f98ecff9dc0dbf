#include "pbent/scheme.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

namespace pbent {

namespace {

BigInt pow_big(int base, int exp) {
    BigInt v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

std::vector<std::vector<Index>> classes_with_origin(const PAryFunction& f) {
    if (!is_even(f)) throw PreconditionError("scheme analysis requires an even function");
    LevelSets ls = level_sets(f);
    return ls.classes;
}

std::vector<int> nonempty_ids(const std::vector<std::vector<Index>>& classes) {
    std::vector<int> out;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (!classes[i].empty()) out.push_back(static_cast<int>(i));
    return out;
}

// All set partitions of `items`, emitted in restricted-growth-string order.
void for_each_partition(const std::vector<int>& items,
                        const std::function<bool(const std::vector<std::vector<int>>&)>& visit) {
    const std::size_t q = items.size();
    std::vector<int> rgs(q, 0);
    while (true) {
        int blocks = 0;
        for (std::size_t i = 0; i < q; ++i) blocks = std::max(blocks, rgs[i] + 1);
        std::vector<std::vector<int>> partition(static_cast<std::size_t>(blocks));
        for (std::size_t i = 0; i < q; ++i)
            partition[static_cast<std::size_t>(rgs[i])].push_back(items[i]);
        if (!visit(partition)) return;
        // Next restricted growth string.
        int pos = static_cast<int>(q) - 1;
        while (pos > 0) {
            int cap = 0;
            for (int i = 0; i < pos; ++i) cap = std::max(cap, rgs[static_cast<std::size_t>(i)]);
            if (rgs[static_cast<std::size_t>(pos)] <= cap) break;
            --pos;
        }
        if (pos <= 0) return;
        ++rgs[static_cast<std::size_t>(pos)];
        for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < q; ++i) rgs[i] = 0;
    }
}

} // namespace

SchemeCheck scheme_check(const PAryFunction& f) {
    auto classes = classes_with_origin(f);
    const Domain& d = f.domain();
    const int p = f.p();

    SchemeConstants constants;
    constants.p = p;
    constants.rho.assign(static_cast<std::size_t>(p + 1) * (p + 1) * (p + 1), 0);
    constants.nonempty = nonempty_ids(classes);

    std::vector<long long> counts(static_cast<std::size_t>(d.size()));
    for (int i : constants.nonempty) {
        for (int j : constants.nonempty) {
            std::fill(counts.begin(), counts.end(), 0);
            for (Index w : classes[static_cast<std::size_t>(i)])
                for (Index u : classes[static_cast<std::size_t>(j)])
                    ++counts[static_cast<std::size_t>(d.add(w, u))];
            for (int k : constants.nonempty) {
                const auto& dk = classes[static_cast<std::size_t>(k)];
                long long v = counts[static_cast<std::size_t>(dk.front())];
                for (Index z : dk) {
                    long long got = counts[static_cast<std::size_t>(z)];
                    if (got != v) {
                        SchemeCheck out;
                        out.witness = SchemeWitness{i, j, k, dk.front(), z, v, got};
                        return out;
                    }
                }
                constants.set(i, j, k, v);
            }
        }
    }
    SchemeCheck out;
    out.constants = std::move(constants);
    return out;
}

SchemeConstants constants_by_trace(const PAryFunction& f) {
    auto classes = classes_with_origin(f);
    const int p = f.p();
    const PrimeModulus pm = f.domain().modulus();

    SchemeConstants constants;
    constants.p = p;
    constants.rho.assign(static_cast<std::size_t>(p + 1) * (p + 1) * (p + 1), 0);
    constants.nonempty = nonempty_ids(classes);

    // lambda_0 = 1 everywhere extends the eigenvalue formula to class 0.
    std::vector<Spectrum> lambda;
    lambda.reserve(constants.nonempty.size());
    for (int i : constants.nonempty)
        lambda.push_back(fourier_indicator(classes[static_cast<std::size_t>(i)], pm, f.n()));

    const BigInt pn = pow_big(p, f.n());
    for (std::size_t a = 0; a < constants.nonempty.size(); ++a)
        for (std::size_t b = a; b < constants.nonempty.size(); ++b)
            for (std::size_t c = b; c < constants.nonempty.size(); ++c) {
                CycInt sum(pm);
                for (Index x = 0; x < f.size(); ++x)
                    sum += lambda[a].at(x) * lambda[b].at(x) * lambda[c].at(x);
                auto total = sum.as_integer();
                if (!total)
                    throw PreconditionError("eigenvalue triple sum is not rational: not a scheme");
                int i = constants.nonempty[a], j = constants.nonempty[b], k = constants.nonempty[c];
                // The triple sum is symmetric; divide by the class size that
                // plays the target role.
                const std::array<std::array<int, 3>, 3> roles{{{i, j, k}, {i, k, j}, {j, k, i}}};
                for (auto [li, lj, lk] : roles) {
                    BigInt denom = pn * static_cast<long long>(classes[static_cast<std::size_t>(lk)].size());
                    if (*total % denom != 0)
                        throw PreconditionError("trace formula divides inexactly: not a scheme");
                    long long v = static_cast<long long>(*total / denom);
                    constants.set(li, lj, lk, v);
                    constants.set(lj, li, lk, v);
                }
            }
    return constants;
}

long long derivative_count_by_constants(const SchemeConstants& c, int i, int j) {
    if (i < 1 || i > c.p || j < 1 || j > c.p - 1)
        throw PreconditionError("derivative count needs 1 <= i <= p and 1 <= j <= p-1");
    long long sum = 0;
    for (int k = 0; k <= c.p; ++k)
        sum += c.at((j + k) % c.p, k, i);
    sum += c.at(c.p, c.p - j, i);
    return sum;
}

ConstantsBentVerdict is_bent_by_constants(const PAryFunction& f) {
    SchemeCheck sc = scheme_check(f);
    if (!sc.is_scheme())
        throw PreconditionError("constants route requires the level sets to form a scheme");
    long long target = 1;
    for (int i = 0; i < f.n() - 1; ++i) target *= f.p();
    for (int i = 1; i <= f.p(); ++i) {
        bool empty = std::find(sc.constants->nonempty.begin(), sc.constants->nonempty.end(), i) ==
                     sc.constants->nonempty.end();
        if (empty) continue;
        for (int j = 1; j <= f.p() - 1; ++j)
            if (derivative_count_by_constants(*sc.constants, i, j) != target)
                return {false, std::pair{i, j}};
    }
    return {true, std::nullopt};
}

namespace {

bool fused_scheme_holds(const SchemeConstants& rho, const std::vector<std::vector<int>>& blocks) {
    for (const auto& a : blocks)
        for (const auto& b : blocks)
            for (const auto& c : blocks) {
                bool first = true;
                long long v = 0;
                for (int k : c) {
                    long long s = 0;
                    for (int i : a)
                        for (int j : b) s += rho.at(i, j, k);
                    if (first) { v = s; first = false; }
                    else if (s != v) return false;
                }
            }
    return true;
}

SquareType common_sign_type(const std::vector<LstClassification>& cls) {
    bool all_pos = true, all_neg = true;
    for (const auto& c : cls) {
        if (!c.lst()) all_pos = false;
        if (!c.nlst()) all_neg = false;
    }
    if (all_pos) return SquareType::lst;
    if (all_neg) return SquareType::nlst;
    return SquareType::none;
}

} // namespace

AmorphicVerdict amorphic_check(const PAryFunction& f, AmorphicMode mode) {
    if (mode == AmorphicMode::fusion && f.p() > 7)
        throw PreconditionError("fusion enumeration refused for p > 7");

    SchemeCheck sc = scheme_check(f);
    AmorphicVerdict out;
    out.scheme = sc.is_scheme();
    if (!out.scheme) return out;

    std::vector<int> graph_classes;
    for (int i : sc.constants->nonempty)
        if (i != 0) graph_classes.push_back(i);

    auto fusion_route = [&]() {
        bool ok = true;
        for_each_partition(graph_classes, [&](const std::vector<std::vector<int>>& blocks) {
            if (!fused_scheme_holds(*sc.constants, blocks)) { ok = false; return false; }
            return true;
        });
        return ok;
    };

    auto spectral_route = [&]() {
        if (graph_classes.size() <= 2) return true; // every fusion is trivial
        LevelSets ls = level_sets(f);
        std::vector<LstClassification> cls;
        for (int i : graph_classes) {
            auto verdict = srg_check(CayleyGraph(f.domain().modulus(), f.n(),
                                                 ls.classes[static_cast<std::size_t>(i)]));
            if (!verdict.is_srg()) return false;
            cls.push_back(classify_lst(*verdict.params));
        }
        return common_sign_type(cls) != SquareType::none;
    };

    if (mode == AmorphicMode::fusion) {
        out.method = AmorphicMethod::fusion_exhaustive;
        out.amorphic = fusion_route();
    } else {
        out.method = AmorphicMethod::spectral_srg;
        out.amorphic = spectral_route();
        if (f.p() <= 5 && fusion_route() != out.amorphic)
            throw InconsistencyError("spectral and fusion amorphism routes disagree");
    }

    if (out.amorphic) {
        // Prefer the whole-function feasibility type; fall back to the
        // common sign of the class graphs.
        out.type = SquareType::none;
        if (f.n() % 2 == 0) {
            auto feas = feasibility_verdict(f);
            if (feas.kind == FeasibilityKind::lst) out.type = SquareType::lst;
            else if (feas.kind == FeasibilityKind::nlst) out.type = SquareType::nlst;
        }
        if (out.type == SquareType::none && !graph_classes.empty()) {
            LevelSets ls = level_sets(f);
            std::vector<LstClassification> cls;
            bool all_srg = true;
            for (int i : graph_classes) {
                auto verdict = srg_check(CayleyGraph(f.domain().modulus(), f.n(),
                                                     ls.classes[static_cast<std::size_t>(i)]));
                if (!verdict.is_srg()) { all_srg = false; break; }
                cls.push_back(classify_lst(*verdict.params));
            }
            if (all_srg) {
                SquareType sign = common_sign_type(cls);
                if (sign != SquareType::none) out.type = sign;
            }
        }
    }
    return out;
}

SchemeConstants imy_predicted(PrimeModulus p, long long N, const std::vector<long long>& r) {
    if (static_cast<int>(r.size()) != p.value())
        throw PreconditionError("need one r value per class 1..p");
    SchemeConstants c;
    c.p = p.value();
    c.rho.assign(static_cast<std::size_t>(c.p + 1) * (c.p + 1) * (c.p + 1), 0);
    c.nonempty.push_back(0);
    for (int i = 1; i <= c.p; ++i)
        if (r[static_cast<std::size_t>(i - 1)] != 0) c.nonempty.push_back(i);

    auto rr = [&](int i) { return r[static_cast<std::size_t>(i - 1)]; };
    c.set(0, 0, 0, 1);
    for (int i : c.nonempty) {
        if (i == 0) continue;
        c.set(i, i, 0, (N - 1) * rr(i));
        c.set(0, i, i, 1);
        c.set(i, 0, i, 1);
        for (int j : c.nonempty) {
            if (j == 0) continue;
            for (int k : c.nonempty) {
                if (k == 0) continue;
                long long v;
                if (i == j && j == k) v = N + rr(i) * rr(i) - 3 * rr(i);
                else if (i == j) v = (rr(i) - 1) * rr(i);          // rho_{jj}^k, j != k
                else if (i == k) v = (rr(i) - 1) * rr(j);          // rho_{ij}^i
                else if (j == k) v = (rr(j) - 1) * rr(i);          // rho_{ij}^j
                else v = rr(i) * rr(j);                            // all distinct
                c.set(i, j, k, v);
            }
        }
    }
    return c;
}

std::string render_constants(const SchemeConstants& c) {
    std::ostringstream out;
    out << "classes:";
    for (int i : c.nonempty) out << ' ' << i;
    out << '\n';
    for (int k : c.nonempty) {
        out << "rho^" << k << ":\n";
        for (int i : c.nonempty) {
            bool first = true;
            for (int j : c.nonempty) {
                if (!first) out << ' ';
                out << c.at(i, j, k);
                first = false;
            }
            out << '\n';
        }
    }
    return out.str();
}

} // namespace pbent
