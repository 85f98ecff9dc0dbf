#include "pbent/report.hpp"

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "pbent/cayley.hpp"
#include "pbent/duality.hpp"
#include "pbent/errors.hpp"
#include "pbent/scheme.hpp"
#include "pbent/spectral.hpp"

namespace pbent {

namespace {

using nlohmann::json;

std::string json_key(std::string label) {
    for (auto& ch : label)
        if (ch == ' ') ch = '_';
    return label;
}

/// Emits every field into the text report and the JSON object at once, so
/// the two renderings cannot drift apart.
class SectionWriter {
public:
    SectionWriter() {
        for (const char* name :
             {"input", "normalization", "level sets", "walsh", "graphs", "scheme"})
            doc_[json_key(name)] = nullptr;
        doc_["note"] = nullptr;
    }

    void section(const std::string& name) {
        if (!first_section_) text_ << '\n';
        first_section_ = false;
        text_ << '[' << name << "]\n";
        current_ = json_key(name);
        doc_[current_] = json::object();
    }

    void field(const std::string& label, const json& value, const std::string& shown) {
        text_ << label << ": " << shown << '\n';
        doc_[current_][json_key(label)] = value;
    }
    void field(const std::string& label, long long v) { field(label, json(v), std::to_string(v)); }
    void field(const std::string& label, const std::string& v) { field(label, json(v), v); }
    void field(const std::string& label, bool v) { field(label, json(v), v ? "yes" : "no"); }
    void na(const std::string& label, const std::string& shown) {
        field(label, json(), shown);
    }

    void line(const std::string& s) { text_ << s << '\n'; }
    json& key(const std::string& label) { return doc_[current_][json_key(label)]; }

    void note(const std::string& message) {
        text_ << '\n' << message << '\n';
        doc_["note"] = message;
    }

    AnalysisDocument finish() { return {text_.str(), doc_.dump(2) + "\n"}; }

private:
    std::ostringstream text_;
    json doc_ = json::object();
    std::string current_;
    bool first_section_ = true;
};

template <typename T>
std::string joined(const std::vector<T>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << v[i];
    }
    return out.str();
}

std::string feasibility_name(FeasibilityKind kind) {
    switch (kind) {
    case FeasibilityKind::lst: return "lst";
    case FeasibilityKind::nlst: return "nlst";
    default: return "neither";
    }
}

std::string square_type_name(SquareType t) {
    switch (t) {
    case SquareType::lst: return "lst";
    case SquareType::nlst: return "nlst";
    default: return "none";
    }
}

json params_json(const SrgParams& p) {
    return json{{"nu", p.nu}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

json constants_json(const SchemeConstants& c) {
    json rho = json::array();
    for (int k : c.nonempty) {
        json matrix = json::array();
        for (int i : c.nonempty) {
            json row = json::array();
            for (int j : c.nonempty) row.push_back(c.at(i, j, k));
            matrix.push_back(row);
        }
        rho.push_back(matrix);
    }
    return json{{"classes", c.nonempty}, {"rho", rho}};
}

void write_level_sets(SectionWriter& w, const LevelSets& ls,
                      const std::optional<FeasibilityVerdict>& feas) {
    w.section("level sets");
    std::vector<long long> sizes;
    for (const auto& cls : ls.classes) sizes.push_back(static_cast<long long>(cls.size()));
    w.field("sizes", json(sizes), joined(sizes));
    if (!feas) {
        w.na("feasibility", "n/a (odd dimension)");
        w.na("N", "n/a");
        w.na("r", "n/a");
        return;
    }
    w.field("feasibility", feasibility_name(feas->kind));
    if (feas->kind == FeasibilityKind::neither) {
        w.na("N", "n/a");
        w.na("r", "n/a");
    } else {
        const SizeProfile& prof = feas->profile();
        w.field("N", prof.N);
        w.field("r", json(prof.r), joined(prof.r));
    }
}

void write_walsh(SectionWriter& w, const PAryFunction& f, const BentVerdict& by_walsh,
                 const std::optional<FeasibilityVerdict>& feas) {
    w.section("walsh");
    const Spectrum spectrum = walsh_transform(f);
    w.field("walsh at 0", spectrum.at(0).to_string());

    const BentVerdict by_derivatives = is_bent_by_derivatives(f);
    if (by_walsh.bent != by_derivatives.bent)
        throw InconsistencyError("the Walsh and derivative bent tests disagree");
    w.field("bent", by_walsh.bent);
    if (!by_walsh.bent) w.field("bent witness", static_cast<long long>(*by_walsh.witness));

    if (!by_walsh.bent) {
        w.na("regularity", "n/a (not bent)");
        w.na("dual", "none");
    } else if (f.n() % 2 != 0) {
        w.na("regularity", "n/a (odd dimension)");
        w.na("dual", "none");
    } else {
        const RegularityReport reg = classify_regularity(f);
        w.field("regularity", regularity_label(reg.kind));
        if (reg.dual) {
            w.field("dual", anf_interpolate(*reg.dual).to_string());
            if (feas && feas->kind != FeasibilityKind::neither &&
                !(dual_by_distinguished_index(f) == *reg.dual))
                throw InconsistencyError("the Walsh and eigenvalue duals disagree");
        } else {
            w.na("dual", "none");
            w.field("sign break at", static_cast<long long>(*reg.witness));
        }
    }
}

void write_graphs(SectionWriter& w, const PAryFunction& f) {
    w.section("graphs");
    const auto graphs = component_graphs(f);
    json list = json::array();
    std::vector<long long> counts;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const CayleyGraph& g = graphs[i];
        const SrgVerdict verdict = srg_check(g);
        const EigenvalueCensus census = eigenvalue_census(g);
        counts.push_back(static_cast<long long>(census.distinct_count()));

        std::ostringstream text;
        text << "graph " << i + 1 << ": ";
        json entry{{"degree", g.degree()},
                   {"distinct_eigenvalues", counts.back()},
                   {"params", nullptr},
                   {"solutions", nullptr}};
        if (verdict.status == SrgStatus::empty) {
            text << "empty";
            entry["status"] = "empty";
        } else if (!verdict.is_srg()) {
            text << "degree " << g.degree() << "; not srg";
            if (verdict.complete) text << " (complete)";
            entry["status"] = "not srg";
        } else {
            const SrgParams& p = *verdict.params;
            // conference graphs have irrational eigenvalues; the spectral
            // route only applies to a rational census
            const auto derived = srg_params_from_census(census, g.vertices(), g.degree());
            if (census.all_rational && (!derived || !(*derived == p)))
                throw InconsistencyError(
                    "spectral and combinatorial graph parameters disagree");
            text << "degree " << g.degree() << "; srg (" << p.nu << ", " << p.k << ", "
                 << p.lambda << ", " << p.mu << ")";
            entry["status"] = "srg";
            entry["params"] = params_json(p);
            json solutions = json::array();
            text << "; solutions";
            const auto cls = classify_lst(p);
            if (cls.solutions.empty()) text << " none";
            for (const auto& s : cls.solutions) {
                text << " (" << s.N << ", " << s.r << ")";
                solutions.push_back(json::array({s.N, s.r}));
            }
            entry["solutions"] = solutions;
        }
        w.line(text.str());
        list.push_back(entry);
    }
    w.key("list") = list;
    w.field("distinct eigenvalues", json(counts), joined(counts));
}

void write_scheme(SectionWriter& w, const PAryFunction& f, bool bent,
                  const std::optional<FeasibilityVerdict>& feas) {
    w.section("scheme");
    const SchemeCheck check = scheme_check(f);
    w.field("scheme", check.is_scheme());
    if (!check.is_scheme()) {
        const SchemeWitness& sw = *check.witness;
        std::ostringstream shown;
        shown << "conv(" << sw.i << ", " << sw.j << ") takes " << sw.count1 << " at point "
              << sw.z1 << " and " << sw.count2 << " at point " << sw.z2 << " inside class "
              << sw.k;
        w.field("witness",
                json{{"i", sw.i},
                     {"j", sw.j},
                     {"k", sw.k},
                     {"z1", sw.z1},
                     {"z2", sw.z2},
                     {"count1", sw.count1},
                     {"count2", sw.count2}},
                shown.str());
        w.field("amorphic", false);
        return;
    }

    if (constants_by_trace(f) != *check.constants)
        throw InconsistencyError("the counting and trace structure constants disagree");
    const ConstantsBentVerdict by_constants = is_bent_by_constants(f);
    if (by_constants.bent != bent)
        throw InconsistencyError("the Walsh and structure-constant bent tests disagree");

    const AmorphicVerdict amorphic = amorphic_check(f);
    w.field("amorphic", amorphic.amorphic);
    w.field("square type", square_type_name(amorphic.type));
    w.field("method",
            amorphic.method == AmorphicMethod::spectral_srg ? std::string("spectral")
                                                            : std::string("fusion"));
    if (feas && feas->kind != FeasibilityKind::neither) {
        const SizeProfile& prof = feas->profile();
        w.field("constants match prediction",
                imy_predicted(PrimeModulus(f.p()), prof.N, prof.r) == *check.constants);
    } else {
        w.na("constants match prediction", "n/a (no square-type size profile)");
    }
    w.key("constants") = constants_json(*check.constants);
    std::string rendered = render_constants(*check.constants);
    rendered.pop_back();  // render_constants already ends the last line
    w.line(rendered);
}

} // namespace

std::string table_digest(const PAryFunction& f) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (int v : f.values())
        for (int b = 0; b < 4; ++b) {
            h ^= (static_cast<std::uint32_t>(v) >> (8 * b)) & 0xffu;
            h *= 0x100000001b3ull;
        }
    std::ostringstream out;
    out << std::hex << std::setfill('0') << std::setw(16) << h;
    return out.str();
}

AnalysisDocument analyze_function(const PAryFunction& input, const AnalysisOptions& options) {
    SectionWriter w;

    w.section("input");
    w.field("p", static_cast<long long>(input.p()));
    w.field("n", static_cast<long long>(input.n()));
    w.field("points", static_cast<long long>(input.size()));
    w.field("anf", anf_interpolate(input).to_string());
    w.field("digest", table_digest(input));
    std::vector<long long> shown_values(input.values().begin(), input.values().end());
    w.field("values", json(input.values()), joined(shown_values));

    const bool even = is_even(input);
    const int origin = input.value(0);
    const bool shifted = origin != 0 && options.normalize;
    PAryFunction f = input;
    if (shifted) {
        std::vector<int> v = input.values();
        for (auto& x : v) x = (x - origin + input.p()) % input.p();
        f = PAryFunction(PrimeModulus(input.p()), input.n(), std::move(v));
    }

    w.section("normalization");
    w.field("even", even);
    w.field("origin value", static_cast<long long>(origin));
    w.field("shifted", shifted);

    if (!even) {
        w.note("not even; bent analysis skipped");
        return w.finish();
    }
    if (f.value(0) != 0) {
        w.note("origin value nonzero; bent analysis skipped (rerun with --normalize)");
        return w.finish();
    }

    const LevelSets ls = level_sets(f);
    std::optional<FeasibilityVerdict> feas;
    if (f.n() % 2 == 0) feas = feasibility_verdict(f);
    const BentVerdict bent = is_bent(f);
    write_level_sets(w, ls, feas);
    write_walsh(w, f, bent, feas);
    write_graphs(w, f);
    write_scheme(w, f, bent.bent, feas);
    return w.finish();
}

} // namespace pbent
