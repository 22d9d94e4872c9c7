#include "dompoly/app/interp_demo.hpp"

#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "dompoly/dom_engine.hpp"

namespace dompoly::app {

InterpDemoResult run_interp_demo(const Graph& g, const Rational& lambda,
                                 std::string graph_id, int constructive_vertex_budget) {
    if (lambda == 0)
        throw std::invalid_argument(
            "interpolation nodes collapse: (1+lambda)^t - 1 = 0 for every t when lambda = 0");
    if (lambda == -1)
        throw std::invalid_argument(
            "interpolation nodes collapse: (1+lambda)^t - 1 = -1 for every t when lambda = -1");
    if (lambda == -2)
        throw std::invalid_argument(
            "interpolation nodes collapse: (1+lambda)^t - 1 alternates between -2 and 0 "
            "when lambda = -2, so only two nodes are distinct");

    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("run_interp_demo: graph must be nonempty");

    InterpDemoResult result;
    result.graph_id = std::move(graph_id);
    result.lambda = lambda;
    result.direct = brute_force(g);

    const Rational base = lambda + 1;
    Rational pow = 1;
    std::vector<std::pair<Rational, Rational>> points;
    for (int t = 1; t <= n + 1; ++t) {
        pow *= base;
        const Rational node = pow - 1;
        const Rational value = result.direct.eval(node);
        result.nodes.push_back(node);
        result.oracle_values.push_back(value);
        points.emplace_back(node, value);

        if (static_cast<long long>(n) * t <= constructive_vertex_budget) {
            const IntPolynomial composed = brute_force(g.compose_clique(t));
            if (composed.eval(lambda) != value)
                throw std::logic_error(
                    "constructive composition value disagrees with the evaluation oracle "
                    "at t = " + std::to_string(t));
            result.constructive_ts.push_back(t);
        }
    }

    result.reconstructed = lagrange_interpolate(points);
    result.match = result.reconstructed == result.direct;
    if (!result.match)
        throw std::logic_error("interpolation failed to reproduce the direct polynomial");
    return result;
}

std::string interp_demo_json(const InterpDemoResult& r) {
    nlohmann::ordered_json j;
    j["graph"] = r.graph_id;
    j["lambda"] = to_decimal(r.lambda);
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (const Rational& v : r.nodes) nodes.push_back(to_decimal(v));
    j["nodes"] = std::move(nodes);
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const Rational& v : r.oracle_values) values.push_back(to_decimal(v));
    j["oracle_values"] = std::move(values);
    j["constructive_checked_t"] = r.constructive_ts;
    j["reconstructed"] = r.reconstructed.coefficient_strings();
    j["direct"] = r.direct.coefficient_strings();
    j["match"] = r.match;
    return j.dump(2) + "\n";
}

}  // namespace dompoly::app
