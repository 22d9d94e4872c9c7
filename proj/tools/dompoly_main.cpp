// dompoly_main.cpp
// The dompoly command-line tool.
//
// Commands:
//   poly            compute D(G,x) coefficients for a family or edge list
//   roots           numerical roots with optional exact certification
//   sweep           root scatter over a parameter range (CSV/SVG/JSON)
//   interp-demo     reconstruct D(G,x) from clique-composition evaluations
//   verify          run the verification suites
//   export-triangle coefficient rows per parameter value (CSV or b-file)
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 enumeration budget exceeded.
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dompoly/app/interp_demo.hpp"
#include "dompoly/app/report_io.hpp"
#include "dompoly/app/svg.hpp"
#include "dompoly/app/sweep.hpp"
#include "dompoly/app/verify.hpp"
#include "dompoly/dom_engine.hpp"
#include "dompoly/families.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/roots.hpp"

namespace {

using namespace dompoly;
using ordered_json = nlohmann::ordered_json;

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    f << content;
}

// A graph argument is a family spec when it parses as one, otherwise an
// edge-list path. Family parameter errors (invalid_argument) are real
// errors, not a cue to try the filesystem.
struct ResolvedInput {
    bool is_family = false;
    FamilySpec spec;
    std::string path;
    std::string id;
};

ResolvedInput resolve_input(const std::string& text) {
    ResolvedInput in;
    try {
        in.spec = FamilySpec::parse(text);
        in.is_family = true;
        in.id = in.spec.to_string();
        return in;
    } catch (const parse_error&) {
        if (!std::filesystem::exists(text))
            throw std::invalid_argument("'" + text +
                                        "' is neither a known family spec nor a file");
    }
    in.path = text;
    in.id = text;
    return in;
}

// Family instances can be huge (star:n=100000); check the vertex count
// before materializing the adjacency matrix.
Graph load_graph(const ResolvedInput& in, int budget) {
    if (!in.is_family) return read_edge_list_file(in.path);
    const int n = in.spec.vertex_count();
    if (n > budget)
        throw budget_error(in.id + " has " + std::to_string(n) +
                           " vertices; the enumeration budget is " + std::to_string(budget));
    return build_family(in.spec);
}

struct PolyResult {
    DominationPolynomial dp;
    int vertex_count = 0;
};

PolyResult compute_poly(const ResolvedInput& in, const std::string& method, int budget) {
    PolyResult r;
    if (method == "closed-form" || (method == "auto" && in.is_family)) {
        if (!in.is_family)
            throw std::invalid_argument(
                "--method=closed-form needs a family spec, not an edge list");
        const ClosedFormResult cf = closed_form_for(in.spec);
        r.dp.graph_id = in.id;
        r.dp.poly = cf.poly;
        r.dp.method =
            (in.spec.kind == FamilyKind::Path || in.spec.kind == FamilyKind::Cycle)
                ? Method::PathCycleRecurrence
                : Method::ClosedForm;
        r.vertex_count = in.spec.vertex_count();
        return r;
    }
    const Graph g = load_graph(in, budget);
    r.vertex_count = g.vertex_count();
    if (method == "auto" || method == "brute")
        r.dp = brute_force_poly(g, budget);
    else if (method == "vertex-rec")
        r.dp = vertex_recurrence(g, auto_pivot(g), 64, 12, budget);
    else
        r.dp = odot_recurrence(g, auto_pivot(g), budget);
    r.dp.graph_id = in.id;
    return r;
}

std::map<std::string, int> parse_fixed_params(const std::vector<std::string>& items) {
    std::map<std::string, int> fixed;
    for (const std::string& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--fix expects name=value, got '" + item + "'");
        const std::string name = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        int v = 0;
        try {
            std::size_t used = 0;
            v = std::stoi(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw std::invalid_argument("--fix " + name + ": bad integer '" + value + "'");
        }
        if (!fixed.emplace(name, v).second)
            throw std::invalid_argument("--fix " + name + " given twice");
    }
    return fixed;
}

std::string range_title(const app::SweepRequest& req) {
    std::string title = family_kind_name(req.kind);
    for (const auto& [key, value] : req.fixed)
        title += " " + key + "=" + std::to_string(value);
    title += " " + req.free_param + "=" + std::to_string(req.from) + ".." +
             std::to_string(req.to);
    return title;
}

std::string file_slug(const app::SweepRequest& req) {
    std::string s = family_kind_name(req.kind);
    for (char& c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-') c = '-';
    for (const auto& [key, value] : req.fixed) s += "-" + key + std::to_string(value);
    s += "-" + std::to_string(req.from) + "-" + std::to_string(req.to);
    return s;
}

std::string sweep_json(const app::SweepResult& result) {
    ordered_json j;
    j["family"] = family_kind_name(result.request.kind);
    j["free_param"] = result.request.free_param;
    j["from"] = result.request.from;
    j["to"] = result.request.to;
    ordered_json instances = ordered_json::array();
    for (const app::SweepInstance& inst : result.instances) {
        ordered_json ij;
        ij["param"] = inst.param;
        ij["spec"] = inst.spec.to_string();
        ij["ok"] = inst.ok;
        if (inst.ok)
            ij["report"] = ordered_json::parse(app::report_json(inst.report));
        else
            ij["error"] = inst.error;
        instances.push_back(std::move(ij));
    }
    j["instances"] = std::move(instances);
    return j.dump(2) + "\n";
}

int cmd_poly(const std::string& input, const std::string& method, int max_n,
             const std::string& format, const std::string& out) {
    const ResolvedInput in = resolve_input(input);
    const PolyResult r = compute_poly(in, method, max_n);
    if (format == "json") {
        emit(out, app::poly_json(r.dp, r.vertex_count));
        return 0;
    }
    std::string csv = "k,coefficient\n";
    const std::vector<std::string> coeffs = r.dp.poly.coefficient_strings();
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        csv += std::to_string(k) + "," + coeffs[k] + "\n";
    emit(out, csv);
    return 0;
}

int cmd_roots(const std::string& input, const std::string& method, int max_n,
              bool certify, bool limit_curves, std::uint64_t seed,
              const std::string& format, const std::string& out) {
    const ResolvedInput in = resolve_input(input);
    const PolyResult r = compute_poly(in, method, max_n);
    RootAnalysisOptions options;
    options.certify = certify;
    options.limit_curves = limit_curves;
    options.aberth.seed = seed;
    const RootReport report = analyze_roots(r.dp.poly, options, in.id);
    emit(out, format == "json" ? app::report_json(report) : app::report_csv(report));
    return 0;
}

int cmd_sweep_figures(std::uint64_t seed, const std::string& out) {
    namespace fs = std::filesystem;
    const fs::path dir = out.empty() ? fs::path("figures") : fs::path(out);
    fs::create_directories(dir);
    for (const app::SweepRequest& req : app::figure_sweep_requests(seed)) {
        const app::SweepResult result = app::run_sweep(req);
        std::size_t roots = 0;
        int errors = 0;
        for (const app::SweepInstance& inst : result.instances) {
            if (inst.ok)
                roots += inst.report.complex_roots.size();
            else
                ++errors;
        }
        const std::string base = file_slug(req);
        const fs::path csv_path = dir / (base + ".csv");
        const fs::path svg_path = dir / (base + ".svg");
        emit(csv_path.string(), app::sweep_csv(result));
        app::SvgOptions svg_options;
        svg_options.title = range_title(req);
        svg_options.overlay_unit_circle =
            req.kind == FamilyKind::CompleteBipartiteBalanced;
        emit(svg_path.string(), app::sweep_svg(result, svg_options));
        std::cout << "wrote " << csv_path.string() << " (" << roots << " roots, "
                  << errors << " skipped)\n";
        std::cout << "wrote " << svg_path.string() << "\n";
    }
    return 0;
}

int cmd_sweep(const std::string& family, const std::string& free_param,
              const std::vector<std::string>& fixes, int from, int to, int max_degree,
              bool certify, bool limit_curves, bool overlay, std::uint64_t seed,
              bool figures, const std::string& format, const std::string& out) {
    if (figures) return cmd_sweep_figures(seed, out);
    if (family.empty())
        throw std::invalid_argument("sweep needs --family (or --figures)");
    app::SweepRequest req;
    req.kind = family_kind_from_name(family);
    req.free_param = free_param;
    req.fixed = parse_fixed_params(fixes);
    req.from = from;
    req.to = to;
    req.max_degree = max_degree;
    req.options.certify = certify;
    req.options.limit_curves = limit_curves;
    req.options.aberth.seed = seed;
    const app::SweepResult result = app::run_sweep(req);
    if (format == "csv") {
        emit(out, app::sweep_csv(result));
    } else if (format == "svg") {
        app::SvgOptions svg_options;
        svg_options.title = range_title(req);
        svg_options.overlay_unit_circle = overlay;
        emit(out, app::sweep_svg(result, svg_options));
    } else {
        emit(out, sweep_json(result));
    }
    return 0;
}

int cmd_interp_demo(const std::string& input, const std::string& lambda_text,
                    int constructive_budget, const std::string& out) {
    const ResolvedInput in = resolve_input(input);
    const Graph g = load_graph(in, kEnumerationBudget);
    const Rational lambda = parse_rational(lambda_text);
    const app::InterpDemoResult result =
        app::run_interp_demo(g, lambda, in.id, constructive_budget);
    emit(out, app::interp_demo_json(result));
    return 0;
}

int cmd_verify(const std::string& selector, std::uint64_t seed,
               const std::string& format, const std::string& out) {
    const app::VerifyReport report = app::run_verify(selector, seed);
    if (format == "json") {
        emit(out, app::verify_json(report));
    } else {
        std::string text;
        for (const app::VerifySuiteResult& suite : report.suites) {
            char line[160];
            std::snprintf(line, sizeof line, "%-28s %s  (%zu assertions, %.1f ms)\n",
                          suite.suite.c_str(), suite.all_pass ? "pass" : "FAIL",
                          suite.assertions.size(), suite.total_ms);
            text += line;
            for (const app::VerifyAssertion& a : suite.assertions)
                if (!a.pass)
                    text += "  FAIL " + a.id + " [" + a.params + "] " + a.detail + "\n";
        }
        text += report.all_pass ? "all suites passed\n" : "verification FAILED\n";
        emit(out, text);
    }
    return report.all_pass ? 0 : 1;
}

int cmd_export_triangle(const std::string& family, const std::string& free_param,
                        const std::vector<std::string>& fixes, int from, int to,
                        int max_degree, const std::string& format,
                        const std::string& out) {
    if (to < from) throw std::invalid_argument("export-triangle: empty parameter range");
    FamilySpec spec;
    spec.kind = family_kind_from_name(family);
    spec.params = parse_fixed_params(fixes);
    std::string content;
    if (format == "bfile")
        content = "# " + std::string(family_kind_name(spec.kind)) +
                  " domination polynomial coefficients (x^0..x^deg per row), " +
                  free_param + " = " + std::to_string(from) + ".." + std::to_string(to) +
                  "\n";
    long long index = 1;
    for (int p = from; p <= to; ++p) {
        spec.params[free_param] = p;
        if (spec.vertex_count() > max_degree)
            throw budget_error(spec.to_string() + " has degree " +
                               std::to_string(spec.vertex_count()) +
                               "; --max-degree is " + std::to_string(max_degree));
        const ClosedFormResult cf = closed_form_for(spec);
        const std::vector<std::string> coeffs = cf.poly.coefficient_strings();
        if (format == "csv") {
            content += std::to_string(p);
            for (const std::string& c : coeffs) content += "," + c;
            content += "\n";
        } else {
            for (const std::string& c : coeffs)
                content += std::to_string(index++) + " " + c + "\n";
        }
    }
    emit(out, content);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact domination polynomials: coefficients, roots, sweeps"};
    app.require_subcommand(1);
    int rc = 0;

    const std::vector<std::string> methods = {"auto", "brute", "vertex-rec", "odot-rec",
                                              "closed-form"};
    const char* input_help = "family spec like windmill:n=6 or fan:m=2,n=10, "
                             "or an edge-list file path";

    auto* poly = app.add_subcommand("poly", "compute D(G,x) coefficients");
    std::string poly_input, poly_method = "auto", poly_format = "json", poly_out;
    int poly_max_n = kEnumerationBudget;
    poly->add_option("input", poly_input, input_help)->required();
    poly->add_option("--method", poly_method, "computation method")
        ->check(CLI::IsMember(methods))
        ->capture_default_str();
    poly->add_option("--max-n", poly_max_n, "enumeration vertex budget")
        ->check(CLI::Range(1, 30))
        ->capture_default_str();
    poly->add_option("--format", poly_format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    poly->add_option("--out", poly_out, "write output to this file instead of stdout");
    poly->callback(
        [&] { rc = cmd_poly(poly_input, poly_method, poly_max_n, poly_format, poly_out); });

    auto* roots = app.add_subcommand("roots", "numerical roots of D(G,x) with a report");
    std::string roots_input, roots_method = "auto", roots_format = "json", roots_out;
    int roots_max_n = kEnumerationBudget;
    bool roots_certify = false, roots_limit_curves = false;
    std::uint64_t roots_seed = 1;
    roots->add_option("input", roots_input, input_help)->required();
    roots->add_option("--method", roots_method, "computation method")
        ->check(CLI::IsMember(methods))
        ->capture_default_str();
    roots->add_option("--max-n", roots_max_n, "enumeration vertex budget")
        ->check(CLI::Range(1, 30))
        ->capture_default_str();
    roots->add_flag("--certify", roots_certify,
                    "exact real-root certification and isolating intervals");
    roots->add_flag("--limit-curves", roots_limit_curves,
                    "distances from the roots to the balanced-bipartite limit curves");
    roots->add_option("--seed", roots_seed, "root-finder start configuration seed")
        ->capture_default_str();
    roots->add_option("--format", roots_format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    roots->add_option("--out", roots_out, "write output to this file instead of stdout");
    roots->callback([&] {
        rc = cmd_roots(roots_input, roots_method, roots_max_n, roots_certify,
                       roots_limit_curves, roots_seed, roots_format, roots_out);
    });

    auto* sweep = app.add_subcommand("sweep", "root scatter over a family parameter range");
    std::string sweep_family, sweep_param = "n", sweep_format = "csv", sweep_out;
    std::vector<std::string> sweep_fixes;
    int sweep_from = 1, sweep_to = 1, sweep_max_degree = 2000;
    bool sweep_certify = false, sweep_limit_curves = false, sweep_overlay = false;
    bool sweep_figures = false;
    std::uint64_t sweep_seed = 1;
    sweep->add_option("--family", sweep_family, "family name, e.g. star, kn,n, windmill");
    sweep->add_option("--param", sweep_param, "name of the swept parameter")
        ->capture_default_str();
    sweep->add_option("--fix", sweep_fixes, "fixed parameter name=value (repeatable)");
    sweep->add_option("--from", sweep_from, "first parameter value")->capture_default_str();
    sweep->add_option("--to", sweep_to, "last parameter value (inclusive)")
        ->capture_default_str();
    sweep->add_option("--max-degree", sweep_max_degree, "per-instance degree limit")
        ->capture_default_str();
    sweep->add_flag("--certify", sweep_certify, "certify real roots per instance");
    sweep->add_flag("--limit-curves", sweep_limit_curves, "limit-curve distances per instance");
    sweep->add_flag("--overlay-circle", sweep_overlay, "overlay |z+1|=1 on the SVG");
    sweep->add_option("--seed", sweep_seed, "root-finder start configuration seed")
        ->capture_default_str();
    sweep->add_flag("--figures", sweep_figures,
                    "write the standing figure sweeps (CSV+SVG) into a directory");
    sweep->add_option("--format", sweep_format, "output format")
        ->check(CLI::IsMember({"csv", "svg", "json"}))
        ->capture_default_str();
    sweep->add_option("--out", sweep_out,
                      "output file, or the output directory with --figures");
    sweep->callback([&] {
        rc = cmd_sweep(sweep_family, sweep_param, sweep_fixes, sweep_from, sweep_to,
                       sweep_max_degree, sweep_certify, sweep_limit_curves, sweep_overlay,
                       sweep_seed, sweep_figures, sweep_format, sweep_out);
    });

    auto* interp = app.add_subcommand(
        "interp-demo", "reconstruct D(G,x) from clique-composition evaluations");
    std::string interp_input, interp_lambda, interp_out;
    int interp_budget = 20;
    interp->add_option("input", interp_input, input_help)->required();
    interp->add_option("--lambda", interp_lambda,
                       "rational evaluation point, e.g. 2 or 1/2 (not -2, -1 or 0)")
        ->required();
    interp->add_option("--budget", interp_budget,
                       "max composed vertex count for the constructive cross-check")
        ->check(CLI::Range(0, kEnumerationBudget))
        ->capture_default_str();
    interp->add_option("--out", interp_out, "write output to this file instead of stdout");
    interp->callback(
        [&] { rc = cmd_interp_demo(interp_input, interp_lambda, interp_budget, interp_out); });

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    std::string verify_selector = "all", verify_format = "json", verify_out;
    std::uint64_t verify_seed = 1;
    std::string suites_help = "suite name or 'all'; suites:";
    for (const std::string& name : app::verify_suite_names()) suites_help += " " + name;
    verify->add_option("selector", verify_selector, suites_help)->capture_default_str();
    verify->add_option("--seed", verify_seed, "seed for the randomized test universes")
        ->capture_default_str();
    verify->add_option("--format", verify_format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    verify->add_option("--out", verify_out, "write output to this file instead of stdout");
    verify->callback(
        [&] { rc = cmd_verify(verify_selector, verify_seed, verify_format, verify_out); });

    auto* expo = app.add_subcommand("export-triangle",
                                    "coefficient rows, one per parameter value");
    std::string expo_family, expo_param = "n", expo_format = "csv", expo_out;
    std::vector<std::string> expo_fixes;
    int expo_from = 1, expo_to = 10, expo_max_degree = 2000;
    expo->add_option("--family", expo_family, "family name")->required();
    expo->add_option("--param", expo_param, "name of the varying parameter")
        ->capture_default_str();
    expo->add_option("--fix", expo_fixes, "fixed parameter name=value (repeatable)");
    expo->add_option("--from", expo_from, "first parameter value")->capture_default_str();
    expo->add_option("--to", expo_to, "last parameter value (inclusive)")
        ->capture_default_str();
    expo->add_option("--max-degree", expo_max_degree, "per-row degree limit")
        ->capture_default_str();
    expo->add_option("--format", expo_format, "csv: param,c0,..; bfile: 'index value' lines")
        ->check(CLI::IsMember({"csv", "bfile"}))
        ->capture_default_str();
    expo->add_option("--out", expo_out, "write output to this file instead of stdout");
    expo->callback([&] {
        rc = cmd_export_triangle(expo_family, expo_param, expo_fixes, expo_from, expo_to,
                                 expo_max_degree, expo_format, expo_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
