#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>

#include "dompoly/dom_engine.hpp"
#include "dompoly/families.hpp"
#include "dompoly/graph.hpp"

using namespace dompoly;

namespace {

IntPolynomial oracle(const std::string& text) {
    return brute_force(build_family(FamilySpec::parse(text)));
}

Graph random_graph(std::mt19937_64& gen, int n, double p) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<double>(gen() >> 11) * 0x1.0p-53 < p) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("star formula") {
    CHECK(star_poly(2) == IntPolynomial{0, 1, 3, 1});
    for (int n = 1; n <= 8; ++n)
        CHECK(star_poly(n) == oracle("star:n=" + std::to_string(n)));
    CHECK_THROWS_AS(star_poly(0), std::invalid_argument);
}

TEST_CASE("join formula") {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 20; ++trial) {
        const int n1 = 1 + static_cast<int>(gen() % 5);
        const int n2 = 1 + static_cast<int>(gen() % 5);
        const Graph a = random_graph(gen, n1, 0.4);
        const Graph b = random_graph(gen, n2, 0.4);
        const IntPolynomial d1 = brute_force(a);
        const IntPolynomial d2 = brute_force(b);
        const IntPolynomial joined = join_poly(d1, n1, d2, n2);
        CHECK(joined == brute_force(join(a, b)));
        CHECK(joined == join_poly(d2, n2, d1, n1));  // symmetric
    }
    CHECK_THROWS_AS(join_poly(IntPolynomial{0, 0, 0, 1}, 2, IntPolynomial{0, 1}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(join_poly(IntPolynomial{0, 1}, 1, IntPolynomial{0, 1}, 0),
                    std::invalid_argument);
}

TEST_CASE("balanced complete bipartite formula") {
    CHECK(balanced_complete_bipartite_poly(1) == IntPolynomial{0, 2, 1});
    CHECK(balanced_complete_bipartite_poly(2) == IntPolynomial{0, 0, 6, 4, 1});  // C_4
    for (int n = 1; n <= 6; ++n)
        CHECK(balanced_complete_bipartite_poly(n) == oracle("kn,n:n=" + std::to_string(n)));
    CHECK_THROWS_AS(balanced_complete_bipartite_poly(0), std::invalid_argument);
}

TEST_CASE("windmill formula") {
    CHECK(dutch_windmill_poly(2) == IntPolynomial{0, 1, 8, 10, 5, 1});
    for (int n = 1; n <= 6; ++n)
        CHECK(dutch_windmill_poly(n) == oracle("windmill:n=" + std::to_string(n)));
    // the windmill is K_1 joined with n disjoint edges
    for (int n = 1; n <= 8; ++n)
        CHECK(dutch_windmill_poly(n) ==
              join_poly(IntPolynomial{0, 1}, 1, IntPolynomial{0, 2, 1}.pow(static_cast<unsigned>(n)),
                        2 * n));
}

TEST_CASE("clique composition formula") {
    const IntPolynomial p{0, 3, 3, 1};
    CHECK(compose_with_clique_poly(p, 1) == p);
    CHECK(compose_with_clique_poly(IntPolynomial{0, 1}, 3) ==
          IntPolynomial::one_plus_x_to(3) - IntPolynomial::one());
    std::mt19937_64 gen(32);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 1 + static_cast<int>(gen() % 5);
        const Graph g = random_graph(gen, n, 0.45);
        for (int t = 1; n * t <= 14; ++t)
            CHECK(compose_with_clique_poly(brute_force(g), t) ==
                  brute_force(g.compose_clique(t)));
    }
    CHECK_THROWS_AS(compose_with_clique_poly(p, 0), std::invalid_argument);
}

TEST_CASE("pendant windmill formula") {
    CHECK(pendant_dutch_windmill_poly(1) == IntPolynomial{0, 1, 5, 4, 1});
    for (int n = 1; n <= 6; ++n)
        CHECK(pendant_dutch_windmill_poly(n) ==
              oracle("pendant-windmill:n=" + std::to_string(n)));
    for (int n = 1; n <= 20; ++n)
        CHECK(pendant_dutch_windmill_poly(n).degree() == 2 * n + 2);
}

TEST_CASE("fan formula") {
    // brute force fixes the expansion; the degree must equal m+n
    CHECK(fan_poly(2, 3) == IntPolynomial{0, 1, 10, 10, 5, 1});
    CHECK(fan_poly(2, 3) == oracle("fan:m=2,n=3"));
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 5; ++n)
            CHECK(fan_poly(m, n) ==
                  oracle("fan:m=" + std::to_string(m) + ",n=" + std::to_string(n)));
    // F_{1,n} is the fan over a single apex
    CHECK(fan_poly(1, 4) == oracle("fan:m=1,n=4"));
    CHECK_THROWS_AS(fan_poly(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(fan_poly(3, 0), std::invalid_argument);
}

TEST_CASE("gem formulas") {
    CHECK(gem_poly(2) == IntPolynomial{0, 2, 6, 4, 1});
    for (int n = 1; n <= 7; ++n) CHECK(gem_poly(n) == oracle("gem:n=" + std::to_string(n)));
    CHECK(gem_plus_edge_poly(1) == IntPolynomial{0, 1, 5, 4, 1});
    for (int n = 1; n <= 6; ++n)
        CHECK(gem_plus_edge_poly(n) == oracle("gem-plus-edge:n=" + std::to_string(n)));
    // x divides the gem-plus-edge polynomial by construction
    for (int n = 1; n <= 12; ++n) CHECK(gem_plus_edge_poly(n).coeff(0) == 0);
}

TEST_CASE("triangle-on-cycle formula") {
    CHECK(triangle_on_cycle_poly(3) == IntPolynomial{0, 2, 6, 4, 1});  // K_4 minus an edge
    for (int n = 3; n <= 9; ++n)
        CHECK(triangle_on_cycle_poly(n) == oracle("triangle-on-cycle:n=" + std::to_string(n)));
    // the subtraction in the formula never drives a count negative
    for (int n = 3; n <= 20; ++n)
        for (const BigInt& c : triangle_on_cycle_poly(n).coefficients()) CHECK(c >= 0);
    CHECK_THROWS_AS(triangle_on_cycle_poly(2), std::invalid_argument);
}

TEST_CASE("wheel formula") {
    CHECK(wheel_poly(4) == IntPolynomial::one_plus_x_to(4) - IntPolynomial::one());  // K_4
    for (int n = 4; n <= 10; ++n)
        CHECK(wheel_poly(n) == oracle("wheel:n=" + std::to_string(n)));
    // the hub alone dominates
    for (int n = 4; n <= 15; ++n) CHECK(wheel_poly(n).coeff(1) >= 1);
    CHECK_THROWS_AS(wheel_poly(3), std::invalid_argument);
}

TEST_CASE("closed_form_for dispatch") {
    const ClosedFormResult path = closed_form_for(FamilySpec::parse("path:n=6"));
    CHECK(path.formula_id == "path-recurrence");
    CHECK(path.poly == path_poly(6));
    CHECK(closed_form_for(FamilySpec::parse("cycle:n=6")).formula_id == "cycle-recurrence");
    CHECK(closed_form_for(FamilySpec::parse("star:n=3")).poly == star_poly(3));
    CHECK(closed_form_for(FamilySpec::parse("fan:m=2,n=2")).poly == fan_poly(2, 2));
    const ClosedFormResult wc = closed_form_for(FamilySpec::parse("windmill-clique:n=2,t=2"));
    CHECK(wc.formula_id == "windmill-clique-composition");
    CHECK(wc.poly == compose_with_clique_poly(dutch_windmill_poly(2), 2));
    CHECK(wc.poly == brute_force(build_family(wc.spec)));
    CHECK_THROWS_AS(closed_form_for(FamilySpec{FamilyKind::Wheel, {{"n", 2}}}),
                    std::invalid_argument);
}

TEST_CASE("every closed form stays plausible at scale") {
    // degree = vertex count, top coefficient 1, zero constant term
    for (int n : {25, 40}) {
        for (const std::string& text :
             {std::string("star:n=") + std::to_string(n),
              std::string("kn,n:n=") + std::to_string(n),
              std::string("windmill:n=") + std::to_string(n),
              std::string("pendant-windmill:n=") + std::to_string(n),
              std::string("fan:m=2,n=") + std::to_string(n),
              std::string("gem:n=") + std::to_string(n),
              std::string("gem-plus-edge:n=") + std::to_string(n),
              std::string("triangle-on-cycle:n=") + std::to_string(n),
              std::string("wheel:n=") + std::to_string(n)}) {
            const FamilySpec spec = FamilySpec::parse(text);
            const ClosedFormResult cf = closed_form_for(spec);
            const DominationPolynomial dp{spec.to_string(), cf.poly, Method::ClosedForm};
            CHECK(dp.coefficients_plausible(spec.vertex_count()));
        }
    }
}
