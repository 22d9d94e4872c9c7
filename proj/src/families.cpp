#include "dompoly/families.hpp"

#include <stdexcept>

#include "dompoly/dom_engine.hpp"

namespace dompoly {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

IntPolynomial star_poly(int n) {
    require(n >= 1, "star_poly: n must be >= 1");
    return IntPolynomial::monomial(n) +
           IntPolynomial::variable() * IntPolynomial::one_plus_x_to(n);
}

IntPolynomial join_poly(const IntPolynomial& d1, int n1, const IntPolynomial& d2, int n2) {
    require(n1 >= 1 && n2 >= 1, "join_poly: orders must be >= 1");
    if (d1.degree() > n1 || d2.degree() > n2)
        throw std::invalid_argument("join_poly: polynomial degree exceeds claimed order");
    const IntPolynomial one = IntPolynomial::one();
    return (IntPolynomial::one_plus_x_to(n1) - one) * (IntPolynomial::one_plus_x_to(n2) - one) +
           d1 + d2;
}

IntPolynomial balanced_complete_bipartite_poly(int n) {
    require(n >= 1, "balanced_complete_bipartite_poly: n must be >= 1");
    const IntPolynomial side = IntPolynomial::one_plus_x_to(n) - IntPolynomial::one();
    return side * side + IntPolynomial::constant(2) * IntPolynomial::monomial(n);
}

IntPolynomial dutch_windmill_poly(int n) {
    require(n >= 1, "dutch_windmill_poly: n must be >= 1");
    const IntPolynomial blade{0, 2, 1};  // 2x + x^2
    return power(blade, n) + IntPolynomial::variable() * IntPolynomial::one_plus_x_to(2 * n);
}

IntPolynomial compose_with_clique_poly(const IntPolynomial& d, int t) {
    require(t >= 1, "compose_with_clique_poly: t must be >= 1");
    return d.substitute(IntPolynomial::one_plus_x_to(t) - IntPolynomial::one());
}

IntPolynomial pendant_dutch_windmill_poly(int n) {
    require(n >= 1, "pendant_dutch_windmill_poly: n must be >= 1");
    const IntPolynomial blade{0, 2, 1};
    return IntPolynomial::variable() *
           (power(blade, n) + IntPolynomial::one_plus_x_to(2 * n + 1));
}

IntPolynomial fan_poly(int m, int n) {
    require(m >= 1 && n >= 1, "fan_poly: m and n must be >= 1");
    const IntPolynomial one = IntPolynomial::one();
    return (IntPolynomial::one_plus_x_to(m) - one) * (IntPolynomial::one_plus_x_to(n) - one) +
           IntPolynomial::monomial(m) + path_poly(n);
}

IntPolynomial gem_poly(int n) {
    require(n >= 1, "gem_poly: n must be >= 1");
    return path_poly(n + 1) + IntPolynomial::variable() * IntPolynomial::one_plus_x_to(n + 1);
}

IntPolynomial gem_plus_edge_poly(int n) {
    require(n >= 1, "gem_plus_edge_poly: n must be >= 1");
    return IntPolynomial::variable() *
           (path_poly(n + 1) + IntPolynomial::one_plus_x_to(n + 2));
}

IntPolynomial triangle_on_cycle_poly(int n) {
    require(n >= 3, "triangle_on_cycle_poly: n must be >= 3");
    return cycle_poly(n) + cycle_poly(n + 1) - path_poly(n);
}

IntPolynomial wheel_poly(int n) {
    require(n >= 4, "wheel_poly: n must be >= 4");
    return cycle_poly(n - 1) + IntPolynomial::variable() * IntPolynomial::one_plus_x_to(n - 1);
}

ClosedFormResult closed_form_for(const FamilySpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case FamilyKind::Path:
            return {spec, path_poly(spec.param("n")), "path-recurrence"};
        case FamilyKind::Cycle:
            return {spec, cycle_poly(spec.param("n")), "cycle-recurrence"};
        case FamilyKind::Star:
            return {spec, star_poly(spec.param("n")), "star"};
        case FamilyKind::CompleteBipartiteBalanced:
            return {spec, balanced_complete_bipartite_poly(spec.param("n")),
                    "balanced-complete-bipartite"};
        case FamilyKind::DutchWindmill:
            return {spec, dutch_windmill_poly(spec.param("n")), "dutch-windmill"};
        case FamilyKind::PendantDutchWindmill:
            return {spec, pendant_dutch_windmill_poly(spec.param("n")),
                    "pendant-dutch-windmill"};
        case FamilyKind::Fan:
            return {spec, fan_poly(spec.param("m"), spec.param("n")), "fan"};
        case FamilyKind::Gem:
            return {spec, gem_poly(spec.param("n")), "gem"};
        case FamilyKind::GemPlusEdge:
            return {spec, gem_plus_edge_poly(spec.param("n")), "gem-plus-edge"};
        case FamilyKind::TriangleOnCycle:
            return {spec, triangle_on_cycle_poly(spec.param("n")), "triangle-on-cycle"};
        case FamilyKind::Wheel:
            return {spec, wheel_poly(spec.param("n")), "wheel"};
        case FamilyKind::CliqueComposition:
            return {spec,
                    compose_with_clique_poly(dutch_windmill_poly(spec.param("n")),
                                             spec.param("t")),
                    "windmill-clique-composition"};
    }
    throw std::invalid_argument("closed_form_for: unknown family kind");
}

}  // namespace dompoly
