// dom_engine.hpp
// Ground-truth computation of domination polynomials by subset enumeration,
// plus the two structural recurrences and the path/cycle recurrences.
//
// Enumeration is the exact oracle everything else is tested against. The
// subset scan is kept in two forms: brute_force_serial is the plain
// reference loop, brute_force splits the 2^n range across OpenMP workers
// and combines per-worker tallies by addition, so results are identical
// bit-for-bit. See bench/ for the comparison harness.
#pragma once

#include <string>

#include "dompoly/graph.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {

// Hard cap for subset enumeration; callers may lower it per call.
inline constexpr int kEnumerationBudget = 26;

enum class Method {
    BruteForce,
    VertexRecurrence,
    OdotRecurrence,
    ClosedForm,
    PathCycleRecurrence,
};

const char* method_name(Method m);

struct DominationPolynomial {
    std::string graph_id;
    IntPolynomial poly;
    Method method = Method::BruteForce;

    // Sanity conditions every domination polynomial of an n-vertex graph
    // satisfies: coefficients non-negative, x^n coefficient 1, constant
    // term 0 for n >= 1 (D = 1 for the empty graph).
    bool coefficients_plausible(int vertex_count) const;
};

// Exact d(G,i) for all i by scanning all 2^n vertex subsets.
// Throws budget_error when g.vertex_count() > budget.
IntPolynomial brute_force_serial(const Graph& g, int budget = kEnumerationBudget);
IntPolynomial brute_force(const Graph& g, int budget = kEnumerationBudget);

DominationPolynomial brute_force_poly(const Graph& g, int budget = kEnumerationBudget);

// Generating polynomial of the sets S inside V \ N[v] that dominate
// G - N[v] and additionally dominate N(v) within G.
IntPolynomial p_v(const Graph& g, int v, int budget = kEnumerationBudget);

// Lowest-index vertex of maximum degree; the default recurrence pivot.
int auto_pivot(const Graph& g);

// D(G,x) = x D(G/v,x) + D(G-v,x) + x D(G-N[v],x) - (x+1) p_v(G,x).
// Subproblems recurse while they stay above `direct_threshold` vertices,
// then fall back to enumeration.
DominationPolynomial vertex_recurrence(const Graph& g, int pivot, int depth_budget = 64,
                                       int direct_threshold = 12,
                                       int budget = kEnumerationBudget);

// D(G,x) = D(G-u,x) + D(G(.)u,x) - D(G(.)u - u,x), with the three
// subproblems solved by enumeration.
DominationPolynomial odot_recurrence(const Graph& g, int u, int budget = kEnumerationBudget);

// D(P_n) and D(C_n) through the three-term recurrences
//   D(X_n) = x (D(X_{n-1}) + D(X_{n-2}) + D(X_{n-3})),
// seeded with enumerated bases. The recurrences are validated against
// enumeration for all n <= 18 once per process before first use and the
// same gate runs in CI; a mismatch throws.
IntPolynomial path_poly(int n);
IntPolynomial cycle_poly(int n);

// D(G1 (+) G2) = D(G1) * D(G2).
IntPolynomial disjoint_union_poly(const IntPolynomial& p, const IntPolynomial& q);

// The n <= 18 recurrence-vs-enumeration gate, callable directly (used by
// the verify suite); returns the largest n checked.
int validate_path_cycle_recurrences(int max_n = 18);

}  // namespace dompoly
