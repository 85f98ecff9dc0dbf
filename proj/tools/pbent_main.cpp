#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pbent/duality.hpp"
#include "pbent/errors.hpp"
#include "pbent/orthogonal_array.hpp"
#include "pbent/report.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pbent::PreconditionError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pbent::PreconditionError("cannot write " + path);
    out << content;
}

struct FunctionInput {
    int p = 0;
    int n = 0;
    std::string poly;
    std::string table;

    /// Registers --p/--n/--poly/--table on a subcommand; exactly one of
    /// --poly/--table, and --poly only together with --p and --n.
    void attach(CLI::App* cmd) {
        auto* p_opt = cmd->add_option("--p", p, "prime modulus");
        auto* n_opt = cmd->add_option("--n", n, "number of variables");
        auto* poly_opt = cmd->add_option("--poly", poly, "polynomial in x0 .. x{n-1}");
        auto* table_opt = cmd->add_option("--table", table, "function table file (JSON)");
        poly_opt->needs(p_opt)->needs(n_opt);
        auto* source = cmd->add_option_group("input", "where the function comes from");
        source->add_options(poly_opt, table_opt);
        source->require_option(1);
    }

    pbent::PAryFunction load() const {
        if (!table.empty()) {
            pbent::PAryFunction f = pbent::table_from_json(read_file(table));
            if (p != 0 && p != f.p())
                throw pbent::PreconditionError("--p disagrees with the table file");
            if (n != 0 && n != f.n())
                throw pbent::PreconditionError("--n disagrees with the table file");
            return f;
        }
        if (poly.empty())
            throw pbent::PreconditionError("one of --poly or --table is required");
        if (p == 0 || n == 0)
            throw pbent::PreconditionError("--poly requires --p and --n");
        return pbent::anf_evaluate(pbent::parse_poly(poly, pbent::PrimeModulus(p), n));
    }
};

int run_dual(const FunctionInput& input) {
    const pbent::PAryFunction f = input.load();
    const pbent::RegularityReport reg = pbent::classify_regularity(f);
    if (!reg.dual)
        throw pbent::PreconditionError("the function is bent but not weakly regular; no dual");
    std::ostringstream out;
    out << "dual: " << pbent::anf_interpolate(*reg.dual).to_string() << '\n';
    out << "regularity: " << pbent::regularity_label(reg.kind) << '\n';
    const pbent::FeasibilityVerdict feas = pbent::feasibility_verdict(f);
    if (feas.kind == pbent::FeasibilityKind::neither) {
        out << "feasibility: neither; structural verification skipped\n";
    } else {
        const pbent::DualStructureReport rep = pbent::verify_dual_structure(f);
        out << "sizes: " << (rep.sizes_ok ? "ok" : "mismatch") << '\n';
        out << "component identity: " << (rep.component_identity_ok ? "ok" : "fail") << '\n';
        out << "fourier identity: " << (rep.fourier_identity_ok ? "ok" : "fail") << '\n';
        out << "srg match: " << (rep.srg_match_ok ? "ok" : "mismatch") << '\n';
        out << "set match:";
        for (int j : rep.set_match) {
            out << ' ';
            if (j < 0) out << '-';
            else out << j;
        }
        out << '\n';
    }
    std::cout << out.str();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analyzer for p-ary functions: bentness, component strongly regular graphs,\n"
                 "association schemes, duals, and orthogonal-array constructions"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "full report for one function");
    FunctionInput analyze_input;
    analyze_input.attach(analyze);
    bool normalize = false;
    bool json_out = false;
    std::string report_path;
    int threads = 1;
    analyze->add_flag("--normalize", normalize, "subtract f(0) before analysis");
    analyze->add_flag("--json", json_out, "emit the JSON variant of the report");
    analyze->add_option("--report", report_path, "write the report here instead of stdout");
    analyze->add_option("--threads", threads, "worker hint; the analysis is exact either way")
        ->check(CLI::PositiveNumber);

    // oa gen / check / bent
    auto* oa = app.add_subcommand("oa", "orthogonal array pipeline");
    oa->require_subcommand(1);
    auto* gen = oa->add_subcommand("gen", "emit the Bush array OA(p^m + 1, p^m)");
    int gen_p = 0, gen_m = 0;
    std::string gen_out;
    gen->add_option("--p", gen_p, "prime modulus")->required();
    gen->add_option("--m", gen_m, "extension degree")->required();
    gen->add_option("--out", gen_out, "output file instead of stdout");

    auto* check = oa->add_subcommand("check", "validate strength 2, index 1");
    std::string check_in;
    check->add_option("--in", check_in, "array file")->required();

    auto* bent = oa->add_subcommand("bent", "build a bent function from row groups");
    std::string bent_in, bent_partition, bent_out;
    bent->add_option("--in", bent_in, "array file")->required();
    bent->add_option("--partition", bent_partition,
                     "row groups like \"0|1|2,3:0\"; omitted means the default split");
    bent->add_option("--out", bent_out, "table file instead of stdout");

    // dual
    auto* dual = app.add_subcommand("dual", "dual of a weakly regular bent function");
    FunctionInput dual_input;
    dual_input.attach(dual);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) {
            const pbent::AnalysisDocument doc =
                pbent::analyze_function(analyze_input.load(), {normalize});
            write_output(report_path, json_out ? doc.json : doc.text);
            return 0;
        }
        if (gen->parsed()) {
            write_output(gen_out,
                         pbent::oa_to_text(pbent::bush_construct(pbent::PrimeModulus(gen_p),
                                                                 gen_m)));
            return 0;
        }
        if (check->parsed()) {
            const pbent::OrthogonalArray array = pbent::oa_from_text(read_file(check_in));
            const auto violation = pbent::validate_oa(array);
            if (violation) {
                std::cerr << "violation: rows " << violation->row_a << " and "
                          << violation->row_b << " repeat a symbol pair at columns "
                          << violation->col_a << " and " << violation->col_b << '\n';
                return 4;
            }
            std::cout << "ok: strength 2, index 1 with " << array.rows() << " rows over "
                      << array.N << " symbols\n";
            return 0;
        }
        if (bent->parsed()) {
            const pbent::OrthogonalArray array = pbent::oa_from_text(read_file(bent_in));
            const pbent::RowPartition partition =
                bent_partition.empty() ? pbent::default_partition(array)
                                       : pbent::parse_partition(bent_partition, array);
            write_output(bent_out, pbent::table_to_json(pbent::bent_from_oa(array, partition)));
            return 0;
        }
        return run_dual(dual_input);
    } catch (const pbent::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 3;
    } catch (const pbent::InconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return 5;
    } catch (const pbent::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
