#include "dompoly/dom_engine.hpp"

#include <bit>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dompoly {

const char* method_name(Method m) {
    switch (m) {
        case Method::BruteForce: return "brute-force";
        case Method::VertexRecurrence: return "vertex-recurrence";
        case Method::OdotRecurrence: return "odot-recurrence";
        case Method::ClosedForm: return "closed-form";
        case Method::PathCycleRecurrence: return "path-cycle-recurrence";
    }
    return "unknown";
}

bool DominationPolynomial::coefficients_plausible(int vertex_count) const {
    if (vertex_count == 0) return poly == IntPolynomial::one();
    if (poly.degree() != vertex_count) return false;
    if (poly.coeff(0) != 0) return false;
    if (poly.leading() != 1) return false;
    for (int i = 0; i <= poly.degree(); ++i)
        if (poly.coeff(i) < 0) return false;
    return true;
}

namespace {

void check_budget(const Graph& g, int budget) {
    const int n = g.vertex_count();
    if (budget > kEnumerationBudget) budget = kEnumerationBudget;
    if (n > budget)
        throw budget_error("enumeration over 2^" + std::to_string(n) +
                           " subsets exceeds budget n <= " + std::to_string(budget));
}

// Tally of dominating sets by cardinality, raw uint64 counters.
// Safe: counts are bounded by C(26,13) < 2^24.
std::vector<std::uint64_t> tally_range(const std::vector<std::uint64_t>& nbhd,
                                       std::uint64_t lo, std::uint64_t hi, int n,
                                       std::uint64_t full) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint64_t s = lo; s < hi; ++s) {
        std::uint64_t covered = 0;
        std::uint64_t rest = s;
        while (rest) {
            const int v = std::countr_zero(rest);
            covered |= nbhd[static_cast<std::size_t>(v)];
            rest &= rest - 1;
        }
        if (covered == full) counts[static_cast<std::size_t>(std::popcount(s))]++;
    }
    return counts;
}

IntPolynomial counts_to_poly(const std::vector<std::uint64_t>& counts) {
    std::vector<BigInt> c(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) c[i] = counts[i];
    return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial brute_force_serial(const Graph& g, int budget) {
    check_budget(g, budget);
    const int n = g.vertex_count();
    if (n == 0) return IntPolynomial::one();
    std::vector<std::uint64_t> nbhd(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) nbhd[static_cast<std::size_t>(v)] = g.closed_neighborhood_mask(v);
    const std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
    const std::uint64_t total = 1ull << n;
    return counts_to_poly(tally_range(nbhd, 0, total, n, full));
}

IntPolynomial brute_force(const Graph& g, int budget) {
    check_budget(g, budget);
    const int n = g.vertex_count();
    if (n == 0) return IntPolynomial::one();
    std::vector<std::uint64_t> nbhd(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) nbhd[static_cast<std::size_t>(v)] = g.closed_neighborhood_mask(v);
    const std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
    const std::uint64_t total = 1ull << n;

#ifdef _OPENMP
    if (n >= 16) {
        const int workers = omp_get_max_threads();
        std::vector<std::vector<std::uint64_t>> partial(
            static_cast<std::size_t>(workers));
        // Contiguous static blocks; per-worker tallies are summed in worker
        // order so the combined counts never depend on scheduling.
#pragma omp parallel num_threads(workers)
        {
            const int w = omp_get_thread_num();
            const std::uint64_t chunk = total / static_cast<std::uint64_t>(workers);
            const std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
            const std::uint64_t hi =
                (w == workers - 1) ? total : lo + chunk;
            partial[static_cast<std::size_t>(w)] = tally_range(nbhd, lo, hi, n, full);
        }
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& part : partial)
            for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += part[i];
        return counts_to_poly(counts);
    }
#endif
    return counts_to_poly(tally_range(nbhd, 0, total, n, full));
}

DominationPolynomial brute_force_poly(const Graph& g, int budget) {
    return DominationPolynomial{"", brute_force(g, budget), Method::BruteForce};
}

IntPolynomial p_v(const Graph& g, int v, int budget) {
    check_budget(g, budget);
    const int n = g.vertex_count();
    if (v < 0 || v >= n) throw std::out_of_range("p_v: vertex out of range");
    const std::uint64_t nv_closed = g.closed_neighborhood_mask(v);
    const std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
    const std::uint64_t rest = full & ~nv_closed;            // V \ N[v]
    const std::uint64_t nv_open = nv_closed & ~(1ull << v);  // N(v)

    std::vector<std::uint64_t> nbhd(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) nbhd[static_cast<std::size_t>(u)] = g.closed_neighborhood_mask(u);

    // Enumerate submasks of `rest` only. A set S qualifies when the union
    // of closed neighborhoods covers all of V \ N[v] and all of N(v).
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    const std::uint64_t want = rest | nv_open;
    std::uint64_t s = rest;
    while (true) {
        std::uint64_t covered = 0;
        std::uint64_t bits = s;
        while (bits) {
            const int u = std::countr_zero(bits);
            covered |= nbhd[static_cast<std::size_t>(u)];
            bits &= bits - 1;
        }
        if ((covered & want) == want) counts[static_cast<std::size_t>(std::popcount(s))]++;
        if (s == 0) break;
        s = (s - 1) & rest;
    }
    return counts_to_poly(counts);
}

int auto_pivot(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("auto_pivot: empty graph");
    int best = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(best)) best = v;
    return best;
}

namespace {

IntPolynomial vertex_recurrence_impl(const Graph& g, int pivot, int depth_budget,
                                     int direct_threshold, int budget, bool top_level) {
    const int n = g.vertex_count();
    if (pivot < 0 || pivot >= n)
        throw std::out_of_range("vertex_recurrence: pivot out of range");
    if (depth_budget <= 0)
        throw budget_error("vertex_recurrence: recursion depth budget exhausted");
    // Only the top-level call is forced through the four-term expansion;
    // subproblems may switch to enumeration once they are small.
    if (!top_level && n <= direct_threshold) return brute_force(g, budget);

    const Graph contracted = g.contract_vertex(pivot);
    const Graph removed = g.delete_vertex(pivot);
    const Graph stripped = g.delete_closed_neighborhood(pivot);
    const IntPolynomial pv = p_v(g, pivot, budget);

    auto solve = [&](const Graph& h) {
        if (h.vertex_count() == 0) return IntPolynomial::one();
        if (h.vertex_count() <= direct_threshold) return brute_force(h, budget);
        return vertex_recurrence_impl(h, auto_pivot(h), depth_budget - 1,
                                      direct_threshold, budget, false);
    };

    const IntPolynomial x = IntPolynomial::variable();
    const IntPolynomial x_plus_1 = IntPolynomial{1, 1};
    return x * solve(contracted) + solve(removed) + x * solve(stripped) - x_plus_1 * pv;
}

}  // namespace

DominationPolynomial vertex_recurrence(const Graph& g, int pivot, int depth_budget,
                                       int direct_threshold, int budget) {
    IntPolynomial p =
        vertex_recurrence_impl(g, pivot, depth_budget, direct_threshold, budget, true);
    return DominationPolynomial{"", std::move(p), Method::VertexRecurrence};
}

DominationPolynomial odot_recurrence(const Graph& g, int u, int budget) {
    const int n = g.vertex_count();
    if (u < 0 || u >= n) throw std::out_of_range("odot_recurrence: vertex out of range");
    const Graph without_u = g.delete_vertex(u);
    const Graph closed = g.odot(u);
    const Graph closed_without_u = closed.delete_vertex(u);
    IntPolynomial p = brute_force(without_u, budget) + brute_force(closed, budget) -
                      brute_force(closed_without_u, budget);
    return DominationPolynomial{"", std::move(p), Method::OdotRecurrence};
}

namespace {

IntPolynomial three_term_extend(std::vector<IntPolynomial> bases, int first_n, int n) {
    // bases holds X_{first_n}, X_{first_n+1}, X_{first_n+2}.
    const IntPolynomial x = IntPolynomial::variable();
    int top = first_n + 2;
    while (top < n) {
        IntPolynomial next = x * (bases[2] + bases[1] + bases[0]);
        bases[0] = std::move(bases[1]);
        bases[1] = std::move(bases[2]);
        bases[2] = std::move(next);
        ++top;
    }
    return bases[static_cast<std::size_t>(n - (top - 2))];
}

std::once_flag path_cycle_gate;

void run_path_cycle_gate() {
    std::call_once(path_cycle_gate, [] { validate_path_cycle_recurrences(18); });
}

IntPolynomial path_poly_unchecked(int n) {
    if (n < 1) throw std::invalid_argument("path_poly: n must be >= 1");
    if (n == 1) return IntPolynomial{0, 1};
    if (n == 2) return IntPolynomial{0, 2, 1};
    if (n == 3) return IntPolynomial{0, 1, 3, 1};
    return three_term_extend({IntPolynomial{0, 1}, IntPolynomial{0, 2, 1},
                              IntPolynomial{0, 1, 3, 1}},
                             1, n);
}

IntPolynomial cycle_poly_unchecked(int n) {
    if (n < 3) throw std::invalid_argument("cycle_poly: n must be >= 3");
    if (n == 3) return IntPolynomial{0, 3, 3, 1};
    if (n == 4) return IntPolynomial{0, 0, 6, 4, 1};
    if (n == 5) return IntPolynomial{0, 0, 5, 10, 5, 1};
    return three_term_extend({IntPolynomial{0, 3, 3, 1}, IntPolynomial{0, 0, 6, 4, 1},
                              IntPolynomial{0, 0, 5, 10, 5, 1}},
                             3, n);
}

}  // namespace

IntPolynomial path_poly(int n) {
    run_path_cycle_gate();
    return path_poly_unchecked(n);
}

IntPolynomial cycle_poly(int n) {
    run_path_cycle_gate();
    return cycle_poly_unchecked(n);
}

IntPolynomial disjoint_union_poly(const IntPolynomial& p, const IntPolynomial& q) {
    return p * q;
}

int validate_path_cycle_recurrences(int max_n) {
    if (max_n > kEnumerationBudget) max_n = kEnumerationBudget;
    for (int n = 1; n <= max_n; ++n) {
        const IntPolynomial got = path_poly_unchecked(n);
        const IntPolynomial want = brute_force(build_family({FamilyKind::Path, {{"n", n}}}));
        if (got != want)
            throw std::logic_error("path recurrence disagrees with enumeration at n = " +
                                   std::to_string(n));
    }
    for (int n = 3; n <= max_n; ++n) {
        const IntPolynomial got = cycle_poly_unchecked(n);
        const IntPolynomial want = brute_force(build_family({FamilyKind::Cycle, {{"n", n}}}));
        if (got != want)
            throw std::logic_error("cycle recurrence disagrees with enumeration at n = " +
                                   std::to_string(n));
    }
    return max_n;
}

}  // namespace dompoly
