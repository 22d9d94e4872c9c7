// families.hpp
// Closed-form domination polynomials for the graph families built by
// graph.hpp. Every formula here is cross-checked against subset
// enumeration in the test suite; the constructions and the vertex
// labelings they assume are documented next to the builders.
#pragma once

#include <string>

#include "dompoly/graph.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {

// Star on n+1 vertices: x^n + x (1+x)^n.
IntPolynomial star_poly(int n);

// Join of two graphs from their polynomials and orders:
//   ((1+x)^{n1} - 1)((1+x)^{n2} - 1) + D(G1) + D(G2).
// Throws std::invalid_argument when a polynomial's degree exceeds its
// claimed vertex count.
IntPolynomial join_poly(const IntPolynomial& d1, int n1, const IntPolynomial& d2, int n2);

// Balanced complete bipartite graph on n + n vertices:
//   ((1+x)^n - 1)^2 + 2 x^n.
IntPolynomial balanced_complete_bipartite_poly(int n);

// n triangles sharing one vertex: (2x + x^2)^n + x (1+x)^{2n}.
IntPolynomial dutch_windmill_poly(int n);

// D(G composed with K_t) = D(G, (1+x)^t - 1).
IntPolynomial compose_with_clique_poly(const IntPolynomial& d, int t);

// Dutch windmill with one pendant vertex on the center:
//   x ((x^2 + 2x)^n + (x+1)^{2n+1}).
IntPolynomial pendant_dutch_windmill_poly(int n);

// m independent vertices each joined to every vertex of a path P_n:
//   ((1+x)^m - 1)((1+x)^n - 1) + x^m + D(P_n).
IntPolynomial fan_poly(int m, int n);

// Hub joined to every vertex of P_{n+1}: D(P_{n+1}) + x (1+x)^{n+1}.
IntPolynomial gem_poly(int n);

// Gem with a pendant vertex on the hub: x (D(P_{n+1}) + (1+x)^{n+2}).
IntPolynomial gem_plus_edge_poly(int n);

// Apex adjacent to two consecutive cycle vertices:
//   D(C_n) + D(C_{n+1}) - D(P_n).
IntPolynomial triangle_on_cycle_poly(int n);

// Wheel on n vertices: D(C_{n-1}) + x (1+x)^{n-1}.
IntPolynomial wheel_poly(int n);

struct ClosedFormResult {
    FamilySpec spec;
    IntPolynomial poly;
    std::string formula_id;
};

// Dispatches a family spec to its formula above. Path and Cycle run the
// three-term recurrences. Throws std::invalid_argument for specs with no
// closed form registered.
ClosedFormResult closed_form_for(const FamilySpec& spec);

}  // namespace dompoly
