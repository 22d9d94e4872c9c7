#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dompoly/families.hpp"
#include "dompoly/roots.hpp"
#include "dompoly/sturm.hpp"

using namespace dompoly;

namespace {

bool interval_contains(const RealRootInterval& iv, const Rational& r) {
    return iv.lo <= r && r <= iv.hi;
}

// product of (den x - num) over the given exact rational roots
IntPolynomial from_rational_roots(const std::vector<Rational>& roots) {
    IntPolynomial p = IntPolynomial::one();
    for (const Rational& r : roots)
        p = p * IntPolynomial(std::vector<BigInt>{-numerator_of(r), denominator_of(r)});
    return p;
}

}  // namespace

TEST_CASE("zero-root deflation") {
    const auto [mult, cofactor] = deflate_zero(IntPolynomial{0, 0, 1, 1});
    CHECK(mult == 2);
    CHECK(cofactor == IntPolynomial{1, 1});
    CHECK(deflate_zero(IntPolynomial{5}).multiplicity == 0);
    CHECK_THROWS_AS(deflate_zero(IntPolynomial{}), std::invalid_argument);
}

TEST_CASE("closed forms for low degrees are exact") {
    const auto linear = find_complex_roots(IntPolynomial{3, 2});
    REQUIRE(linear.size() == 1);
    CHECK(linear[0].z == Complex(-1.5, 0.0));
    CHECK(linear[0].converged);

    // x^2 + 3x + 3, the triangle cofactor: -3/2 +- (sqrt3/2) i
    const auto quad = find_complex_roots(IntPolynomial{3, 3, 1});
    REQUIRE(quad.size() == 2);
    CHECK(quad[0].z.real() == -1.5);
    CHECK(quad[1].z.real() == -1.5);
    CHECK(quad[0].z.imag() == -quad[1].z.imag());
    CHECK(std::abs(quad[1].z.imag() - 0.8660254037844386) < 1e-15);

    // real quadratic with cancellation risk: x^2 - 10^8 x + 1
    const auto wide = find_complex_roots(IntPolynomial{1, -100000000, 1});
    REQUIRE(wide.size() == 2);
    CHECK(std::abs(wide[0].z.real() - 1e-8) < 1e-20);  // survives the subtraction
    CHECK(std::abs(wide[1].z.real() - 1e8) < 1e-7);
    CHECK(wide[0].z.imag() == 0.0);
    CHECK(wide[1].z.imag() == 0.0);
}

TEST_CASE("find_complex_roots rejects unusable inputs") {
    CHECK_THROWS_AS(find_complex_roots(IntPolynomial{7}), std::invalid_argument);
    CHECK_THROWS_AS(find_complex_roots(IntPolynomial{0, 1, 1}), std::invalid_argument);
}

TEST_CASE("multiple roots are replicated with their multiplicity") {
    // (x+1)^3 (x^2+x+1)
    const IntPolynomial p =
        IntPolynomial{1, 1}.pow(3) * IntPolynomial{1, 1, 1};
    const auto roots = find_complex_roots(p);
    REQUIRE(roots.size() == 5);
    int triple = 0;
    for (const auto& r : roots)
        if (r.multiplicity == 3) {
            ++triple;
            CHECK(std::abs(r.z - Complex(-1.0, 0.0)) < 1e-12);
        }
    CHECK(triple == 3);
    CHECK(std::is_sorted(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        return a.z.real() != b.z.real() ? a.z.real() < b.z.real()
                                        : a.z.imag() < b.z.imag();
    }));
}

TEST_CASE("root lists are deterministic per seed") {
    const IntPolynomial p = dutch_windmill_poly(7);
    const auto [zm, cof] = deflate_zero(p);
    AberthOptions opt;
    opt.seed = 42;
    const auto a = find_complex_roots(cof, opt);
    const auto b = find_complex_roots(cof, opt);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].z == b[i].z);
    AberthOptions other;
    other.seed = 43;
    const auto c = find_complex_roots(cof, other);
    REQUIRE(c.size() == a.size());
    // conjugate pairs share a real part to ~1e-15, so float jitter can swap
    // their sorted positions between seeds; compare as sets, not by index
    for (const auto& r : a) {
        double best = 1e300;
        for (const auto& s : c) best = std::min(best, std::abs(r.z - s.z));
        CHECK(best < 1e-10);
    }
}

TEST_CASE("residuals and conjugate pairing on family polynomials") {
    std::vector<IntPolynomial> batch;
    batch.push_back(star_poly(20));
    batch.push_back(dutch_windmill_poly(10));
    batch.push_back(balanced_complete_bipartite_poly(12));
    batch.push_back(pendant_dutch_windmill_poly(9));
    batch.push_back(wheel_poly(15));
    for (const IntPolynomial& p : batch) {
        const auto [zm, cof] = deflate_zero(p);
        const auto roots = find_complex_roots(cof);
        CHECK(static_cast<int>(roots.size()) + zm == p.degree());
        for (const auto& r : roots) {
            CHECK(r.residual < 1e-12);
            CHECK(r.converged);
            // the conjugate also appears (real coefficients); position error
            // grows as 1/|p'(z)| near degree 20, so allow solver accuracy
            const auto mate = std::find_if(roots.begin(), roots.end(), [&](const auto& s) {
                return std::abs(s.z - std::conj(r.z)) < 1e-7;
            });
            CHECK(mate != roots.end());
        }
    }
}

TEST_CASE("sturm chain counts and isolates constructed root sets") {
    std::mt19937_64 gen(41);
    std::uniform_int_distribution<long long> num(-12, 12);
    std::uniform_int_distribution<long long> den(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        // distinct rational roots, one of them possibly squared, plus an
        // irreducible quadratic to keep the complex part honest
        std::vector<Rational> roots;
        while (roots.size() < 3) {
            const Rational r(num(gen), den(gen));
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        IntPolynomial p = from_rational_roots(roots);
        if (trial % 3 == 0) p = p * from_rational_roots({roots[0]});  // double root
        const long long c = num(gen);
        p = p * IntPolynomial{1 + c * c, c, 1};  // discriminant c^2-4(1+c^2) < 0

        const RealCertification cert = certify_real_roots(p);
        const int expect_neg = static_cast<int>(
            std::count_if(roots.begin(), roots.end(), [](const Rational& r) { return r < 0; }));
        const int expect_pos = static_cast<int>(
            std::count_if(roots.begin(), roots.end(), [](const Rational& r) { return r > 0; }));
        const bool has_zero =
            std::find(roots.begin(), roots.end(), Rational(0)) != roots.end();
        CHECK(cert.negative_count == expect_neg);
        CHECK(cert.positive_count == expect_pos);
        CHECK(cert.zero_multiplicity == (has_zero ? (trial % 3 == 0 && roots[0] == 0 ? 2 : 1) : 0));

        const auto intervals = isolate_real_roots(p);
        REQUIRE(intervals.size() == roots.size());
        std::vector<Rational> sorted_roots = roots;
        std::sort(sorted_roots.begin(), sorted_roots.end());
        for (std::size_t i = 0; i < intervals.size(); ++i) {
            CHECK(interval_contains(intervals[i], sorted_roots[i]));
            if (i + 1 < intervals.size()) CHECK(intervals[i].hi <= intervals[i + 1].lo);
        }
    }
}

TEST_CASE("root counting over intervals, endpoint roots rejected") {
    const IntPolynomial p = from_rational_roots({Rational(1), Rational(2), Rational(3)});
    CHECK(sturm_real_root_count(p, Rational(0), Rational(4)) == 3);
    CHECK(sturm_real_root_count(p, Rational(0), Rational(5, 2)) == 2);
    CHECK(sturm_real_root_count(p, Rational(3, 2), Rational(5, 2)) == 1);
    CHECK(sturm_real_root_count(p, Rational(7, 2), Rational(10)) == 0);
    CHECK_THROWS_AS(sturm_real_root_count(p, Rational(1, 2), Rational(3)),
                    std::invalid_argument);  // b is a root
    CHECK_THROWS_AS(sturm_real_root_count(p, Rational(2), Rational(5, 2)),
                    std::invalid_argument);  // a is a root
}

TEST_CASE("squarefree machinery") {
    const IntPolynomial a{-2, 1};       // x - 2
    const IntPolynomial b{1, 1};        // x + 1
    const IntPolynomial p = a * b * b;  // (x-2)(x+1)^2
    CHECK(squarefree_part(p) == a * b);
    const auto factors = squarefree_decomposition(p);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].poly == a);
    CHECK(factors[0].multiplicity == 1);
    CHECK(factors[1].poly == b);
    CHECK(factors[1].multiplicity == 2);
    CHECK(poly_gcd(p, p.derivative()) == b);
    CHECK(poly_gcd(a * b, a) == a);
    CHECK(poly_gcd(IntPolynomial{}, IntPolynomial{}).is_zero());
    CHECK(poly_gcd(IntPolynomial{0, -3}, IntPolynomial{}) == IntPolynomial{0, 1});
}

TEST_CASE("sign_at and cauchy bound") {
    const IntPolynomial p{-1, 0, 1};  // x^2 - 1
    CHECK(sign_at(p, Rational(1, 2)) < 0);
    CHECK(sign_at(p, Rational(2)) > 0);
    CHECK(sign_at(p, Rational(1)) == 0);
    CHECK(sign_at(p, Rational(-7, 3)) > 0);
    std::mt19937_64 gen(42);
    std::uniform_int_distribution<long long> num(-30, 30);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> roots;
        for (int i = 0; i < 4; ++i) roots.emplace_back(num(gen), 1 + (trial % 3));
        const IntPolynomial q = from_rational_roots(roots);
        const Rational bound = cauchy_root_bound(q);
        for (const Rational& r : roots) {
            CHECK(r <= bound);
            CHECK(-bound <= r);
        }
    }
}

TEST_CASE("interval refinement") {
    const IntPolynomial p = from_rational_roots({Rational(1, 3)});
    RealRootInterval iv{Rational(0), Rational(1)};
    const RealRootInterval refined = refine_root_interval(p, iv, Rational(1, 1000000000));
    CHECK(refined.hi - refined.lo <= Rational(1, 1000000000));
    CHECK(interval_contains(refined, Rational(1, 3)));
    const RealRootInterval degenerate =
        refine_root_interval(p, {Rational(1, 3), Rational(1, 3)}, Rational(1, 100));
    CHECK(degenerate.lo == degenerate.hi);
    CHECK_THROWS_AS(refine_root_interval(p, {Rational(4), Rational(5)}, Rational(1, 100)),
                    std::invalid_argument);
}

TEST_CASE("certification of family polynomials") {
    CHECK(certify_no_nonzero_real_roots(balanced_complete_bipartite_poly(2)));
    CHECK(certify_no_nonzero_real_roots(dutch_windmill_poly(3)));
    CHECK_FALSE(certify_no_nonzero_real_roots(star_poly(3)));
    const RealCertification pendant = certify_real_roots(pendant_dutch_windmill_poly(3));
    CHECK(pendant.zero_multiplicity == 1);
    CHECK(pendant.nonzero_count() == 1);
    CHECK(pendant.negative_count == 1);
    const auto intervals = certified_real_root_intervals(star_poly(10));
    CHECK(static_cast<int>(intervals.size()) ==
          certify_real_roots(star_poly(10)).nonzero_count());
    for (const auto& iv : intervals) {
        CHECK(iv.hi - iv.lo <= Rational(1, 1000000000));
        CHECK(iv.hi < 0);
    }
}

TEST_CASE("rhp analysis flags the windmill sign change") {
    const auto [zm6, cof6] = deflate_zero(dutch_windmill_poly(6));
    const RhpAnalysis rhp6 = rhp_analysis(find_complex_roots(cof6));
    CHECK(rhp6.has_rhp_root);
    CHECK(std::abs(rhp6.max_real_part - 0.0003550296365) < 1e-8);
    const auto [zm3, cof3] = deflate_zero(dutch_windmill_poly(3));
    const RhpAnalysis rhp3 = rhp_analysis(find_complex_roots(cof3));
    CHECK_FALSE(rhp3.has_rhp_root);
    CHECK(rhp3.max_real_part < 0);
    CHECK_THROWS_AS(rhp_analysis({}), std::invalid_argument);
}

TEST_CASE("rhp boundary bucket") {
    std::vector<ComplexRoot> roots(2);
    roots[0].z = Complex(5e-10, 1.0);
    roots[1].z = Complex(-3.0, 0.0);
    const RhpAnalysis rhp = rhp_analysis(roots, 1e-9);
    CHECK_FALSE(rhp.has_rhp_root);
    REQUIRE(rhp.boundary.size() == 1);
    CHECK(rhp.boundary[0] == roots[0].z);
}

TEST_CASE("star root location windows") {
    const StarRootLocation loc = star_real_root_locate(10);
    CHECK(loc.window_count() >= 1);
    for (const auto& iv : loc.intervals) CHECK(iv.hi < 0);
    REQUIRE(loc.intervals.size() == loc.in_window.size());
    CHECK_THROWS_AS(star_real_root_locate(2), std::invalid_argument);
}

TEST_CASE("limit curve distances") {
    CHECK(limit_curve_distance(Complex(-0.5, std::sqrt(3.0) / 2)) == 0.0);
    CHECK(std::abs(limit_curve_distance(Complex(-2.0, 0.0)) -
                   (std::sqrt(5.0) - 1) / 2) < 1e-15);
    CHECK(std::abs(limit_curve_distance(Complex(0.5, 0.0)) - 0.5) < 1e-15);
    // a point on the admissible arc of |z+1| = 1
    const double t = 0.3;
    CHECK(limit_curve_distance(Complex(-1 + std::cos(t), std::sin(t))) < 1e-12);
}

TEST_CASE("limit curve diagnostic aggregates") {
    std::vector<ComplexRoot> roots(3);
    roots[0].z = Complex(-0.5, std::sqrt(3.0) / 2);  // distance 0
    roots[1].z = Complex(0.5, 0.0);                  // distance 0.5
    roots[2].z = Complex(3.0, 0.0);                  // distance 3 to the circle
    const LimitCurveDiagnostic diag = limit_curve_diagnostic(roots);
    REQUIRE(diag.distances.size() == 3);
    CHECK(diag.median == 0.5);
    CHECK(diag.max == 3.0);
}

TEST_CASE("root report invariants") {
    RootAnalysisOptions options;
    options.certify = true;
    const RootReport report = analyze_roots(star_poly(10), options, "star:n=10");
    CHECK(report.degree == 11);
    CHECK(static_cast<int>(report.complex_roots.size()) + report.zero_root_multiplicity ==
          report.degree);
    CHECK(report.certified);
    CHECK(report.certified_real_root_count == static_cast<int>(report.real_root_intervals.size()));
    // every certified interval holds exactly one numerically real root
    for (const auto& iv : report.real_root_intervals) {
        const double lo = static_cast<double>(iv.lo.convert_to<double>()) - 1e-7;
        const double hi = static_cast<double>(iv.hi.convert_to<double>()) + 1e-7;
        int inside = 0;
        for (const auto& r : report.complex_roots)
            if (std::abs(r.z.imag()) < 1e-6 && r.z.real() >= lo && r.z.real() <= hi) ++inside;
        CHECK(inside == 1);
    }
    CHECK_FALSE(report.has_rhp_root);
    CHECK(report.max_real_part < 0);

    const RootReport bare = analyze_roots(IntPolynomial{0, 1});
    CHECK(bare.zero_root_multiplicity == 1);
    CHECK(bare.complex_roots.empty());
    CHECK(std::isnan(bare.max_real_part));
    CHECK_THROWS_AS(analyze_roots(IntPolynomial{}), std::invalid_argument);
}
