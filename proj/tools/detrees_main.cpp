// detrees: construct ideals of 2x2 minors of sparse 2xn matrices, list their
// presentation relations, and verify the Groebner/SAGBI structure of their
// Rees algebra and special fiber, with text or JSON reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "detrees/detrees.hpp"

namespace {

using namespace detrees;

struct Output {
    std::string format = "text";
    std::string path;

    void emit(const std::string& content) const {
        if (path.empty()) {
            std::cout << content;
            if (!content.empty() && content.back() != '\n') std::cout << "\n";
        } else {
            std::ofstream out(path);
            if (!out) throw InputError("cannot open output file " + path);
            out << content;
        }
    }
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", out.path, "Write output to a file instead of stdout");
}

std::string lambda_str(const std::vector<int>& lambda) {
    std::string s = "(";
    for (size_t i = 0; i < lambda.size(); ++i) s += (i ? ", " : "") + std::to_string(lambda[i]);
    return s + ")";
}

int cmd_info(const Shape& sh, const Output& out) {
    std::vector<int> lambda = ferrers_partition(sh);
    MinorCounts counts = minor_counts(sh);
    Ladder L = ladder(sh, false);
    Ladder Lp = ladder(sh, true);

    if (out.format == "json") {
        nlohmann::ordered_json j;
        j["shape"] = {{"n", sh.n}, {"r", sh.r}, {"s", sh.s}};
        j["lambda"] = lambda;
        j["minors"] = {{"binomial", counts.binomial}, {"monomial", counts.monomial}, {"zero", counts.zero}};
        nlohmann::ordered_json jm = nlohmann::ordered_json::array();
        for (const auto& m : nonzero_minors(sh))
            jm.push_back({{"name", "f(" + std::to_string(m.i) + "," + std::to_string(m.j) + ")"},
                          {"poly", m.poly.str()}});
        j["nonzero_minors"] = jm;
        j["initial_ideal_gens"] = ferrers_ideal(sh).gens().size();
        j["ladder_boxes"] = L.boxes.size();
        j["extended_ladder_boxes"] = Lp.boxes.size();
        if (sh.degenerate()) j["notice"] = "s = 0: every minor is a monomial, all checks are trivial";
        out.emit(j.dump(2));
        return 0;
    }

    std::ostringstream text;
    text << "shape (" << sh.n << ", " << sh.r << ", " << sh.s << ")\n";
    if (sh.degenerate())
        text << "notice: s = 0, every minor is a monomial and all checks are trivial\n";
    text << "matrix:\n" << render_matrix(sh);
    text << "minors: " << counts.binomial << " binomial, " << counts.monomial << " monomial, "
         << counts.zero << " zero\n";
    for (const auto& m : nonzero_minors(sh))
        text << "  f(" << m.i << "," << m.j << ") = " << m.poly.str() << "\n";
    text << "lambda = " << lambda_str(lambda) << "\n";
    text << "initial ideal: " << ferrers_ideal(sh).gens().size() << " quadratic generators\n";
    text << "ferrers diagram:\n" << render_ferrers(sh);
    text << "ladder L (" << L.boxes.size() << " boxes):\n" << render_ladder(L);
    text << "extended ladder L' (" << Lp.boxes.size() << " boxes):\n" << render_ladder(Lp);
    out.emit(text.str());
    return 0;
}

int cmd_relations(const Shape& sh, const Output& out) {
    std::vector<Relation> ells = linear_relations(sh);
    std::vector<Relation> ps = plucker_relations(sh);

    if (out.format == "json") {
        nlohmann::ordered_json j;
        j["shape"] = {{"n", sh.n}, {"r", sh.r}, {"s", sh.s}};
        nlohmann::ordered_json jl = nlohmann::ordered_json::array();
        for (const auto& rel : ells) jl.push_back({{"name", rel.name()}, {"poly", rel.poly.str()}});
        nlohmann::ordered_json jp = nlohmann::ordered_json::array();
        for (const auto& rel : ps) jp.push_back({{"name", rel.name()}, {"poly", rel.poly.str()}});
        j["linear"] = jl;
        j["plucker"] = jp;
        out.emit(j.dump(2));
        return 0;
    }

    std::ostringstream text;
    text << "shape (" << sh.n << ", " << sh.r << ", " << sh.s << "): " << ells.size() << " linear, "
         << ps.size() << " plucker\n";
    for (const auto& rel : ells) text << "  " << rel.name() << " = " << rel.poly.str() << "\n";
    for (const auto& rel : ps) text << "  " << rel.name() << " = " << rel.poly.str() << "\n";
    out.emit(text.str());
    return 0;
}

int emit_reports(const std::vector<ShapeReport>& reports, const Output& out, bool single) {
    if (out.format == "json") {
        out.emit(single ? reports_to_json(reports.front()) : reports_to_json(reports));
    } else {
        std::string text;
        for (const auto& r : reports) text += report_to_text(r);
        out.emit(text);
    }
    for (const auto& r : reports)
        for (const auto& c : r.checks)
            if (c.failed()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of Rees algebras of sparse 2xn determinantal ideals"};
    app.require_subcommand(1);

    int n = 0, r = 0, s = 0, nmax = 0;
    Output out;
    VerifyConfig cfg;
    bool include_degenerate = false;

    auto* info = app.add_subcommand("info", "Shape summary: matrix, minors, partition, ladders");
    info->add_option("n", n, "columns")->required();
    info->add_option("r", r, "columns with only a first-row entry")->required();
    info->add_option("s", s, "columns with two entries")->required();
    add_output_flags(info, out);

    auto* relations = app.add_subcommand("relations", "List the linear and Plucker relations");
    relations->add_option("n", n)->required();
    relations->add_option("r", r)->required();
    relations->add_option("s", s)->required();
    add_output_flags(relations, out);

    auto add_verify_flags = [&](CLI::App* cmd) {
        cmd->add_option("--kmax", cfg.kmax, "Largest power k for power/product checks")
            ->capture_default_str();
        cmd->add_option("--degmax", cfg.degmax, "Hilbert-function comparison degree bound")
            ->capture_default_str();
        cmd->add_option("--elim-budget", cfg.elim_budget, "Largest n for elimination checks")
            ->capture_default_str();
        cmd->add_option("--check", cfg.only, "Run only the named checks (repeatable)");
        add_output_flags(cmd, out);
    };

    auto* verify = app.add_subcommand("verify", "Run the verification suite for one shape");
    verify->add_option("n", n)->required();
    verify->add_option("r", r)->required();
    verify->add_option("s", s)->required();
    add_verify_flags(verify);

    auto* sweep = app.add_subcommand("sweep", "Run the suite over every valid shape with n <= nmax");
    sweep->add_option("nmax", nmax, "largest n")->required();
    sweep->add_flag("--include-degenerate", include_degenerate, "Include s = 0 shapes");
    add_verify_flags(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (info->parsed()) return cmd_info(shape_validate(n, r, s), out);
        if (relations->parsed()) return cmd_relations(shape_validate(n, r, s), out);
        if (verify->parsed()) {
            Shape sh = shape_validate(n, r, s);
            ShapeReport rep{sh, run_all(sh, cfg)};
            return emit_reports({rep}, out, true);
        }
        if (sweep->parsed()) {
            std::vector<ShapeReport> reports;
            for (const Shape& sh : enumerate_shapes(nmax, include_degenerate))
                reports.push_back(ShapeReport{sh, run_all(sh, cfg)});
            return emit_reports(reports, out, false);
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
