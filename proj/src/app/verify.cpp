#include "dompoly/app/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "dompoly/app/interp_demo.hpp"
#include "dompoly/app/sweep.hpp"
#include "dompoly/dom_engine.hpp"
#include "dompoly/families.hpp"
#include "dompoly/roots.hpp"

namespace dompoly::app {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome ok() { return {true, ""}; }
Outcome ok(std::string detail) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

void check(VerifySuiteResult& suite, const std::string& id, const std::string& params,
           const std::function<Outcome()>& body) {
    VerifyAssertion a;
    a.id = id;
    a.params = params;
    const auto t0 = Clock::now();
    try {
        Outcome r = body();
        a.pass = r.pass;
        a.detail = std::move(r.detail);
    } catch (const std::exception& e) {
        a.pass = false;
        a.detail = std::string("exception: ") + e.what();
    }
    a.ms = ms_since(t0);
    suite.all_pass = suite.all_pass && a.pass;
    suite.assertions.push_back(std::move(a));
}

double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

Graph random_graph(std::mt19937_64& gen, int n, double edge_prob) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform01(gen) < edge_prob) g.add_edge(u, v);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

std::string poly_str(const IntPolynomial& p) { return p.to_string(); }

// ---- suite bodies ------------------------------------------------------

// Every closed-form family formula equals enumeration for all parameters
// with at most 16 vertices.
VerifySuiteResult suite_closed_forms() {
    VerifySuiteResult suite;
    suite.suite = "closed-forms";
    suite.description = "family formulas match enumeration for every instance with <= 16 vertices";
    suite.runtime_limit_ms = 60000;

    auto family_case = [&](FamilyKind kind, std::vector<FamilySpec> specs) {
        check(suite, std::string("closed-forms/") + family_kind_name(kind),
              std::to_string(specs.size()) + " instances", [&specs]() -> Outcome {
                  for (const FamilySpec& spec : specs) {
                      const IntPolynomial formula = closed_form_for(spec).poly;
                      const IntPolynomial oracle = brute_force(build_family(spec));
                      if (formula != oracle)
                          return fail(spec.to_string() + ": formula " + poly_str(formula) +
                                      " != enumeration " + poly_str(oracle));
                  }
                  return ok();
              });
    };

    std::vector<FamilySpec> specs;
    auto spec1 = [](FamilyKind k, int n) { return FamilySpec{k, {{"n", n}}}; };

    specs.clear();
    for (int n = 1; n + 1 <= 16; ++n) specs.push_back(spec1(FamilyKind::Star, n));
    family_case(FamilyKind::Star, specs);

    specs.clear();
    for (int n = 1; 2 * n <= 16; ++n)
        specs.push_back(spec1(FamilyKind::CompleteBipartiteBalanced, n));
    family_case(FamilyKind::CompleteBipartiteBalanced, specs);

    specs.clear();
    for (int n = 1; 2 * n + 1 <= 16; ++n) specs.push_back(spec1(FamilyKind::DutchWindmill, n));
    family_case(FamilyKind::DutchWindmill, specs);

    specs.clear();
    for (int n = 1; 2 * n + 2 <= 16; ++n)
        specs.push_back(spec1(FamilyKind::PendantDutchWindmill, n));
    family_case(FamilyKind::PendantDutchWindmill, specs);

    specs.clear();
    for (int m = 1; m <= 15; ++m)
        for (int n = 1; m + n <= 16; ++n)
            specs.push_back(FamilySpec{FamilyKind::Fan, {{"m", m}, {"n", n}}});
    family_case(FamilyKind::Fan, specs);

    specs.clear();
    for (int n = 1; n + 2 <= 16; ++n) specs.push_back(spec1(FamilyKind::Gem, n));
    family_case(FamilyKind::Gem, specs);

    specs.clear();
    for (int n = 1; n + 3 <= 16; ++n) specs.push_back(spec1(FamilyKind::GemPlusEdge, n));
    family_case(FamilyKind::GemPlusEdge, specs);

    specs.clear();
    for (int n = 3; n + 1 <= 16; ++n) specs.push_back(spec1(FamilyKind::TriangleOnCycle, n));
    family_case(FamilyKind::TriangleOnCycle, specs);

    specs.clear();
    for (int n = 4; n <= 16; ++n) specs.push_back(spec1(FamilyKind::Wheel, n));
    family_case(FamilyKind::Wheel, specs);

    specs.clear();
    for (int n = 1; n <= 7; ++n)
        for (int t = 1; (2 * n + 1) * t <= 16; ++t)
            specs.push_back(FamilySpec{FamilyKind::CliqueComposition, {{"n", n}, {"t", t}}});
    family_case(FamilyKind::CliqueComposition, specs);

    return suite;
}

// Both structural recurrences reproduce enumeration on seeded random
// graphs for every possible pivot vertex.
VerifySuiteResult suite_recurrences(std::uint64_t seed) {
    VerifySuiteResult suite;
    suite.suite = "recurrences";
    suite.description =
        "vertex and closed-neighborhood recurrences match enumeration on 200 random graphs, "
        "every pivot";
    suite.runtime_limit_ms = 120000;

    std::vector<Graph> graphs;
    std::mt19937_64 gen(seed);
    const double probs[] = {0.15, 0.3, 0.5, 0.7, 0.85};
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + static_cast<int>(i % 10);
        graphs.push_back(random_graph(gen, n, probs[(i / 10) % 5]));
    }

    check(suite, "recurrences/vertex", "200 graphs, n <= 10, all pivots", [&]() -> Outcome {
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const IntPolynomial oracle = brute_force(graphs[i]);
            for (int v = 0; v < graphs[i].vertex_count(); ++v) {
                const IntPolynomial got = vertex_recurrence(graphs[i], v).poly;
                if (got != oracle)
                    return fail("graph #" + std::to_string(i) + " pivot " + std::to_string(v) +
                                ": " + poly_str(got) + " != " + poly_str(oracle));
            }
        }
        return ok();
    });

    check(suite, "recurrences/closed-neighborhood", "200 graphs, n <= 10, all pivots",
          [&]() -> Outcome {
              for (std::size_t i = 0; i < graphs.size(); ++i) {
                  const IntPolynomial oracle = brute_force(graphs[i]);
                  for (int v = 0; v < graphs[i].vertex_count(); ++v) {
                      const IntPolynomial got = odot_recurrence(graphs[i], v).poly;
                      if (got != oracle)
                          return fail("graph #" + std::to_string(i) + " pivot " +
                                      std::to_string(v) + ": " + poly_str(got) +
                                      " != " + poly_str(oracle));
                  }
              }
              return ok();
          });

    return suite;
}

// Clique composition computed by explicit construction + enumeration
// equals coefficient substitution x -> (1+x)^t - 1.
VerifySuiteResult suite_composition(std::uint64_t seed) {
    VerifySuiteResult suite;
    suite.suite = "composition";
    suite.description =
        "explicit clique composition equals substitution for every (G, t) with n*t <= 16";

    auto check_graphs = [&](const std::string& id, const std::vector<Graph>& graphs) {
        int cases = 0;
        for (const Graph& g : graphs)
            for (int t = 1; g.vertex_count() * t <= 16; ++t) ++cases;
        check(suite, "composition/" + id, std::to_string(cases) + " (G,t) pairs",
              [&graphs]() -> Outcome {
                  for (std::size_t i = 0; i < graphs.size(); ++i) {
                      const Graph& g = graphs[i];
                      const IntPolynomial base = brute_force(g);
                      for (int t = 1; g.vertex_count() * t <= 16; ++t) {
                          const IntPolynomial constructed = brute_force(g.compose_clique(t));
                          const IntPolynomial substituted =
                              compose_with_clique_poly(base, t);
                          if (constructed != substituted)
                              return fail("graph #" + std::to_string(i) + " t=" +
                                          std::to_string(t) + ": " + poly_str(constructed) +
                                          " != " + poly_str(substituted));
                      }
                  }
                  return ok();
              });
    };

    std::vector<Graph> named;
    for (int n = 1; n <= 8; ++n) named.push_back(build_family({FamilyKind::Path, {{"n", n}}}));
    for (int n = 3; n <= 8; ++n) named.push_back(build_family({FamilyKind::Cycle, {{"n", n}}}));
    for (int n = 1; n <= 7; ++n) named.push_back(build_family({FamilyKind::Star, {{"n", n}}}));
    for (int n = 2; n <= 8; ++n) named.push_back(complete_graph(n));
    check_graphs("named-families", named);

    std::vector<Graph> random_set;
    std::mt19937_64 gen(seed);
    const double probs[] = {0.2, 0.4, 0.6, 0.8};
    for (int i = 0; i < 25; ++i)
        random_set.push_back(random_graph(gen, 1 + (i % 8), probs[i % 4]));
    check_graphs("random-graphs", random_set);

    return suite;
}

// Polynomial reconstruction from composition values at distinct nodes.
VerifySuiteResult suite_interpolation() {
    VerifySuiteResult suite;
    suite.suite = "interpolation";
    suite.description =
        "reconstruction from composition evaluations matches the direct polynomial bit-exactly";

    const std::vector<std::pair<std::string, Graph>> graphs = {
        {"path:n=4", build_family({FamilyKind::Path, {{"n", 4}}})},
        {"cycle:n=5", build_family({FamilyKind::Cycle, {{"n", 5}}})},
        {"star:n=4", build_family({FamilyKind::Star, {{"n", 4}}})},
    };
    const std::vector<Rational> lambdas = {Rational(1), Rational(2), Rational(-3),
                                           Rational(1, 2)};

    for (const auto& [id, g] : graphs) {
        check(suite, "interpolation/" + id, "lambda in {1, 2, -3, 1/2}", [&]() -> Outcome {
            for (const Rational& lambda : lambdas) {
                const InterpDemoResult r = run_interp_demo(g, lambda, id);
                if (!r.match)
                    return fail("lambda = " + to_decimal(lambda) + ": no bit-exact match");
                if (r.constructive_ts.empty())
                    return fail("lambda = " + to_decimal(lambda) +
                                ": no constructive cross-check ran");
            }
            return ok();
        });
    }

    check(suite, "interpolation/node-collapse-rejection", "lambda in {-2, -1, 0}",
          [&]() -> Outcome {
              const Graph& p4 = graphs[0].second;
              for (long long v : {-2ll, -1ll, 0ll}) {
                  try {
                      run_interp_demo(p4, Rational(v), "path:n=4");
                      return fail("lambda = " + std::to_string(v) + " was not rejected");
                  } catch (const std::invalid_argument& e) {
                      if (std::string(e.what()).find("collapse") == std::string::npos)
                          return fail("lambda = " + std::to_string(v) +
                                      ": diagnostic does not explain the node collapse: " +
                                      e.what());
                  }
              }
              return ok();
          });

    return suite;
}

// Exact certification: no nonzero real roots for balanced complete
// bipartite graphs at even n.
VerifySuiteResult suite_knn_no_real_roots() {
    VerifySuiteResult suite;
    suite.suite = "knn-no-real-roots";
    suite.description =
        "certified count of nonzero real roots of the balanced complete bipartite polynomial "
        "is 0 for even n <= 20";
    suite.runtime_limit_ms = 60000;

    check(suite, "knn-no-real-roots/even-n", "n in {2, 4, ..., 20}", [&]() -> Outcome {
        for (int n = 2; n <= 20; n += 2) {
            const RealCertification cert =
                certify_real_roots(balanced_complete_bipartite_poly(n));
            if (cert.nonzero_count() != 0)
                return fail("n = " + std::to_string(n) + ": count = " +
                            std::to_string(cert.nonzero_count()));
        }
        return ok();
    });
    return suite;
}

// Exact certification for the windmill family at odd n.
VerifySuiteResult suite_windmill_no_real_roots() {
    VerifySuiteResult suite;
    suite.suite = "windmill-no-real-roots";
    suite.description =
        "certified count of nonzero real roots of the windmill polynomial is 0 for odd n <= 15";

    check(suite, "windmill-no-real-roots/odd-n", "n in {1, 3, ..., 15}", [&]() -> Outcome {
        for (int n = 1; n <= 15; n += 2) {
            const RealCertification cert = certify_real_roots(dutch_windmill_poly(n));
            if (cert.nonzero_count() != 0)
                return fail("n = " + std::to_string(n) + ": count = " +
                            std::to_string(cert.nonzero_count()));
        }
        return ok();
    });
    return suite;
}

// The pendant windmill has exactly one nonzero real root, in (-1,0) for
// odd n and (-2,-1) for even n.
VerifySuiteResult suite_pendant_unique_real_root() {
    VerifySuiteResult suite;
    suite.suite = "pendant-unique-real-root";
    suite.description =
        "pendant windmill polynomial has exactly one nonzero real root, inside (-1,0) for odd "
        "n and (-2,-1) for even n, n <= 20";

    check(suite, "pendant-unique-real-root/count-and-interval", "n in 1..20", [&]() -> Outcome {
        for (int n = 1; n <= 20; ++n) {
            const IntPolynomial p = pendant_dutch_windmill_poly(n);
            const RealCertification cert = certify_real_roots(p);
            if (cert.nonzero_count() != 1)
                return fail("n = " + std::to_string(n) + ": count = " +
                            std::to_string(cert.nonzero_count()));
            const std::vector<RealRootInterval> ivs = certified_real_root_intervals(p);
            if (ivs.size() != 1)
                return fail("n = " + std::to_string(n) + ": " + std::to_string(ivs.size()) +
                            " isolating intervals");
            const bool odd = n % 2 == 1;
            const bool inside = odd ? (ivs[0].lo > Rational(-1) && ivs[0].hi < Rational(0))
                                    : (ivs[0].lo > Rational(-2) && ivs[0].hi < Rational(-1));
            if (!inside)
                return fail("n = " + std::to_string(n) + ": interval [" +
                            to_decimal(ivs[0].lo) + ", " + to_decimal(ivs[0].hi) +
                            "] outside the expected window");
        }
        return ok();
    });
    return suite;
}

// Right-half-plane roots of the windmill family.
VerifySuiteResult suite_windmill_rhp(std::uint64_t seed) {
    VerifySuiteResult suite;
    suite.suite = "windmill-rhp";
    suite.description =
        "windmill root with real part 0.0003550296365 at n=6; right-half-plane roots for "
        "6 <= n <= 15; max real part reported for n <= 5";

    RootAnalysisOptions opts;
    opts.aberth.seed = seed;

    check(suite, "windmill-rhp/n6-real-part", "|re - 0.0003550296365| <= 1e-8",
          [&]() -> Outcome {
              const RootReport r = analyze_roots(dutch_windmill_poly(6), opts, "windmill:n=6");
              double best = 1e9;
              for (const ComplexRoot& root : r.complex_roots)
                  best = std::min(best, std::fabs(root.z.real() - 0.0003550296365));
              char buf[48];
              std::snprintf(buf, sizeof buf, "%.3g", best);
              if (best > 1e-8) return fail(std::string("closest real part differs by ") + buf);
              return ok(std::string("matched within ") + buf);
          });

    check(suite, "windmill-rhp/has-rhp-6-to-15", "tau = 1e-9", [&]() -> Outcome {
        for (int n = 6; n <= 15; ++n) {
            const RootReport r = analyze_roots(dutch_windmill_poly(n), opts);
            if (!r.has_rhp_root)
                return fail("n = " + std::to_string(n) + ": no right-half-plane root found");
        }
        return ok();
    });

    check(suite, "windmill-rhp/report-small-n", "n in 1..5", [&]() -> Outcome {
        std::string report;
        for (int n = 1; n <= 5; ++n) {
            const RootReport r = analyze_roots(dutch_windmill_poly(n), opts);
            if (!report.empty()) report += ", ";
            char buf[64];
            std::snprintf(buf, sizeof buf, "n=%d max_re=%.6g", n, r.max_real_part);
            report += buf;
        }
        return ok(report);
    });

    return suite;
}

// The star polynomial's located negative real root lies in (-2n, -ln n).
VerifySuiteResult suite_star_root_interval() {
    VerifySuiteResult suite;
    suite.suite = "star-root-interval";
    suite.description =
        "a located real root of the star polynomial lies in (-2n, -ln n) for 10 <= n <= 60, "
        "interval width <= 1e-9";

    check(suite, "star-root-interval/window", "n in 10..60", [&]() -> Outcome {
        for (int n = 10; n <= 60; ++n) {
            const StarRootLocation loc = star_real_root_locate(n);
            if (loc.window_count() < 1)
                return fail("n = " + std::to_string(n) + ": no root inside the window");
            for (const RealRootInterval& iv : loc.intervals)
                if (iv.hi - iv.lo > Rational(1, 1000000000))
                    return fail("n = " + std::to_string(n) + ": interval wider than 1e-9");
        }
        return ok();
    });
    return suite;
}

// Figure sweeps: roots exist for every valid instance and all satisfy the
// residual invariant.
VerifySuiteResult suite_sweep_residuals(std::uint64_t seed) {
    VerifySuiteResult suite;
    suite.suite = "sweep-residuals";
    suite.description =
        "all figure sweeps complete with every root residual < 1e-10";
    suite.runtime_limit_ms = 600000;

    for (const SweepRequest& req : figure_sweep_requests(seed)) {
        std::ostringstream id;
        id << "sweep-residuals/" << family_kind_name(req.kind);
        for (const auto& [k, v] : req.fixed) id << ":" << k << "=" << v;
        std::ostringstream params;
        params << req.free_param << " in " << req.from << ".." << req.to;
        check(suite, id.str(), params.str(), [&req]() -> Outcome {
            const SweepResult result = run_sweep(req);
            int roots = 0;
            for (const SweepInstance& inst : result.instances) {
                if (!inst.ok) {
                    // Only spec-validation failures are tolerated (e.g. a
                    // wheel needs at least 4 vertices).
                    if (inst.error.find("needs") == std::string::npos)
                        return fail("param " + std::to_string(inst.param) +
                                    " failed: " + inst.error);
                    continue;
                }
                for (const ComplexRoot& r : inst.report.complex_roots) {
                    ++roots;
                    if (!(r.residual < 1e-10))
                        return fail("param " + std::to_string(inst.param) + " root (" +
                                    std::to_string(r.z.real()) + ", " +
                                    std::to_string(r.z.imag()) + ") residual " +
                                    std::to_string(r.residual));
                }
            }
            return ok(std::to_string(roots) + " roots checked");
        });
    }
    return suite;
}

// The path/cycle three-term recurrences agree with enumeration.
VerifySuiteResult suite_recurrence_bases() {
    VerifySuiteResult suite;
    suite.suite = "recurrence-bases";
    suite.description = "path and cycle recurrences match enumeration for all n <= 18";

    check(suite, "recurrence-bases/path", "n in 1..18", [&]() -> Outcome {
        for (int n = 1; n <= 18; ++n)
            if (path_poly(n) != brute_force(build_family({FamilyKind::Path, {{"n", n}}})))
                return fail("n = " + std::to_string(n));
        return ok();
    });
    check(suite, "recurrence-bases/cycle", "n in 3..18", [&]() -> Outcome {
        for (int n = 3; n <= 18; ++n)
            if (cycle_poly(n) != brute_force(build_family({FamilyKind::Cycle, {{"n", n}}})))
                return fail("n = " + std::to_string(n));
        return ok();
    });
    return suite;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"closed-forms",
            "recurrences",
            "composition",
            "interpolation",
            "knn-no-real-roots",
            "windmill-no-real-roots",
            "pendant-unique-real-root",
            "windmill-rhp",
            "star-root-interval",
            "sweep-residuals",
            "recurrence-bases"};
}

VerifyReport run_verify(const std::string& selector, std::uint64_t seed) {
    const std::vector<std::string> names = verify_suite_names();
    if (selector != "all" &&
        std::find(names.begin(), names.end(), selector) == names.end()) {
        std::string msg = "unknown verify suite '" + selector + "'; valid: all";
        for (const std::string& n : names) msg += ", " + n;
        throw std::invalid_argument(msg);
    }

    VerifyReport report;
    auto run = [&](const std::string& name, const std::function<VerifySuiteResult()>& body) {
        if (selector != "all" && selector != name) return;
        const auto t0 = Clock::now();
        VerifySuiteResult suite = body();
        suite.total_ms = ms_since(t0);
        if (suite.runtime_limit_ms > 0) {
            VerifyAssertion a;
            a.id = suite.suite + "/runtime";
            a.params = "limit " + std::to_string(static_cast<long>(suite.runtime_limit_ms)) + " ms";
            a.pass = suite.total_ms <= suite.runtime_limit_ms;
            a.ms = 0.0;
            if (!a.pass)
                a.detail = "took " + std::to_string(suite.total_ms) + " ms";
            suite.all_pass = suite.all_pass && a.pass;
            suite.assertions.push_back(std::move(a));
        }
        report.all_pass = report.all_pass && suite.all_pass;
        report.total_ms += suite.total_ms;
        report.suites.push_back(std::move(suite));
    };

    run("closed-forms", [] { return suite_closed_forms(); });
    run("recurrences", [&] { return suite_recurrences(seed); });
    run("composition", [&] { return suite_composition(seed); });
    run("interpolation", [] { return suite_interpolation(); });
    run("knn-no-real-roots", [] { return suite_knn_no_real_roots(); });
    run("windmill-no-real-roots", [] { return suite_windmill_no_real_roots(); });
    run("pendant-unique-real-root", [] { return suite_pendant_unique_real_root(); });
    run("windmill-rhp", [&] { return suite_windmill_rhp(seed); });
    run("star-root-interval", [] { return suite_star_root_interval(); });
    run("sweep-residuals", [&] { return suite_sweep_residuals(seed); });
    run("recurrence-bases", [] { return suite_recurrence_bases(); });
    return report;
}

std::string verify_json(const VerifyReport& report) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json suites = nlohmann::ordered_json::array();
    for (const VerifySuiteResult& s : report.suites) {
        nlohmann::ordered_json js;
        js["suite"] = s.suite;
        js["description"] = s.description;
        js["all_pass"] = s.all_pass;
        js["total_ms"] = s.total_ms;
        nlohmann::ordered_json assertions = nlohmann::ordered_json::array();
        for (const VerifyAssertion& a : s.assertions) {
            nlohmann::ordered_json ja;
            ja["id"] = a.id;
            ja["params"] = a.params;
            ja["pass"] = a.pass;
            ja["ms"] = a.ms;
            ja["detail"] = a.detail;
            assertions.push_back(std::move(ja));
        }
        js["assertions"] = std::move(assertions);
        suites.push_back(std::move(js));
    }
    j["suites"] = std::move(suites);
    j["all_pass"] = report.all_pass;
    j["total_ms"] = report.total_ms;
    return j.dump(2) + "\n";
}

}  // namespace dompoly::app
