#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "knv/knov.hpp"
#include "knv/parser.hpp"

namespace {

// --p "c0,c1,c2,c3,c4" (or "0" for the fully degenerate case)
std::map<knv::VarId, knv::Coeff> parse_p_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() == 1) parts.assign(5, parts[0]);
    if (parts.size() != 5) throw knv::Error("--p expects 1 or 5 comma-separated rationals");
    std::map<knv::VarId, knv::Coeff> a;
    for (unsigned i = 0; i < 5; ++i) {
        knv::Coeff c(parts[i]);
        c.canonicalize();
        a[knv::kParamP[i]] = c;
    }
    return a;
}

knv::Fixtures load_fixtures(const std::string& path, const std::string& p_spec) {
    knv::Fixtures fx = path.empty() ? knv::Fixtures::builtin() : knv::Fixtures::load_file(path);
    if (!p_spec.empty()) fx = fx.specialized(parse_p_spec(p_spec));
    return fx;
}

int emit_reports(const std::vector<knv::Report>& reports, const std::string& report_path) {
    for (const auto& r : reports) {
        std::cout << r.check;
        if (!r.inputs.empty()) {
            std::cout << " [";
            for (size_t i = 0; i < r.inputs.size(); ++i) {
                const std::string& in = r.inputs[i];
                size_t eq = in.find(" = ");
                std::cout << (i ? ", " : "") << (eq == std::string::npos ? in : in.substr(0, eq));
            }
            std::cout << "]";
        }
        std::cout << ": " << r.verdict << " (" << r.mode << ", " << r.time_ms << " ms)\n";
        if (r.verdict != "pass" && !r.residual_summary.empty())
            std::cout << "    " << r.residual_summary << "\n";
    }
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "cannot write report file: " << report_path << "\n";
            return 2;
        }
        out << knv::reports_to_json(reports);
    }
    return knv::all_passed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"knv: Krichever-Novikov hierarchy verification"};
    app.require_subcommand(1);

    std::string check, mode_name = "exact", p_spec, report_path, fixtures_path;
    int trials = 40;
    uint64_t seed = knv::RunMode{}.seed;

    auto* verify = app.add_subcommand("verify", "run a verification check");
    verify->add_option("check", check,
                       "one of: skew commute recursion hamiltonian fraction "
                       "bidifferential densities pencil generate fixtures all")
        ->required();
    verify->add_option("--mode", mode_name, "exact|probabilistic")->check(CLI::IsMember({"exact", "probabilistic"}));
    verify->add_option("--trials", trials, "trials per probabilistic zero test");
    verify->add_option("--seed", seed, "seed for probabilistic evaluations");
    verify->add_option("--p", p_spec, "specialize P: \"c0,c1,c2,c3,c4\" or \"0\"");
    verify->add_option("--report", report_path, "write a JSON report file");
    verify->add_option("--fixtures", fixtures_path, "fixture file (default: built-in set)");

    std::string eval_text;
    auto* eval = app.add_subcommand("eval", "parse and normalize an expression");
    eval->add_option("expr", eval_text)->required();

    std::string bracket_f, bracket_g;
    auto* bracket = app.add_subcommand("bracket", "Lie bracket of two expressions");
    bracket->add_option("F", bracket_f)->required();
    bracket->add_option("G", bracket_g)->required();

    std::string gen_from, gen_op, match_basis;
    auto* generate = app.add_subcommand("generate", "apply a recursion operator to a symmetry");
    generate->add_option("--from", gen_from, "G0|G1|G2|G3")->required();
    generate->add_option("--operator", gen_op, "L4|L6")->required();
    generate->add_option("--match-basis", match_basis, "comma-separated subset of G0,G1,G2,G3");
    generate->add_option("--p", p_spec, "specialize P");
    generate->add_option("--fixtures", fixtures_path, "fixture file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            knv::RunMode mode;
            mode.probabilistic = (mode_name == "probabilistic");
            mode.trials = trials;
            mode.seed = seed;
            knv::Fixtures fx = load_fixtures(fixtures_path, p_spec);
            return emit_reports(knv::run_check(check, fx, mode), report_path);
        }
        if (*eval) {
            std::cout << knv::format(knv::parse(eval_text)) << "\n";
            return 0;
        }
        if (*bracket) {
            std::cout << knv::format(knv::lie_bracket(knv::parse(bracket_f), knv::parse(bracket_g)))
                      << "\n";
            return 0;
        }
        if (*generate) {
            knv::Fixtures fx = load_fixtures(fixtures_path, p_spec);
            auto gs = fx.symmetries();
            const std::vector<std::string> gnames = {"G0", "G1", "G2", "G3"};
            auto g_index = [&gnames](const std::string& n) {
                for (size_t i = 0; i < gnames.size(); ++i)
                    if (gnames[i] == n) return i;
                throw knv::Error("unknown symmetry: " + n);
            };
            const knv::WnlOp& op = gen_op == "L4"   ? fx.L4
                                   : gen_op == "L6" ? fx.L6
                                                    : throw knv::Error("unknown operator: " + gen_op);
            knv::RingElem k = knv::next_symmetry(op, gs[g_index(gen_from)]);
            auto ord = knv::diff_order(k);
            std::cout << "result = " << knv::format(k) << "\n";
            std::cout << "differential order: " << (ord ? std::to_string(*ord) : "none") << "\n";
            if (!match_basis.empty()) {
                std::vector<knv::RingElem> basis;
                std::vector<std::string> bnames;
                std::string cur;
                auto flush = [&] {
                    if (cur.empty()) return;
                    basis.push_back(gs[g_index(cur)]);
                    bnames.push_back(cur);
                    cur.clear();
                };
                for (char c : match_basis)
                    if (c == ',') flush();
                    else if (!std::isspace(static_cast<unsigned char>(c))) cur += c;
                flush();
                auto span = knv::solve_constant_span(k, basis);
                if (!span) {
                    std::cout << "not in the span of the requested basis\n";
                    return 1;
                }
                std::cout << "span coefficients:";
                for (size_t i = 0; i < basis.size(); ++i)
                    std::cout << " " << bnames[i] << ": " << knv::format((*span)[i]);
                std::cout << "\n";
            }
            return 0;
        }
    } catch (const knv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
