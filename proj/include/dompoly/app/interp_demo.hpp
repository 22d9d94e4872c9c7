// interp_demo.hpp
// Reconstruction of D(G,x) from clique-composition evaluations: for a
// fixed rational lambda outside {-2,-1,0} the values D(G compose K_t,
// lambda) for t = 1..n+1 equal D(G, (1+lambda)^t - 1) at n+1 distinct
// nodes, so Lagrange interpolation recovers the polynomial exactly.
#pragma once

#include <string>
#include <vector>

#include "dompoly/graph.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly::app {

struct InterpDemoResult {
    std::string graph_id;
    Rational lambda;
    std::vector<Rational> nodes;          // (1+lambda)^t - 1, t = 1..n+1
    std::vector<Rational> oracle_values;  // D(G, node_t)
    std::vector<int> constructive_ts;     // t values cross-checked constructively
    IntPolynomial reconstructed;
    IntPolynomial direct;
    bool match = false;  // always true on return; a mismatch throws instead
};

// Throws std::invalid_argument for lambda in {-2, -1, 0}, naming the node
// collapse. Throws std::logic_error if the constructive cross-check or
// the final reconstruction disagrees (an implementation bug, never data).
// Constructive checks run for every t with vertex_count * t within the
// given budget.
InterpDemoResult run_interp_demo(const Graph& g, const Rational& lambda,
                                 std::string graph_id = {},
                                 int constructive_vertex_budget = 20);

std::string interp_demo_json(const InterpDemoResult& r);

}  // namespace dompoly::app
