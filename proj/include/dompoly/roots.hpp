// roots.hpp
// Root analysis for domination polynomials, split into two strictly
// separated paths:
//   - exact certification (Sturm over rationals): real-root counts and
//     isolating intervals that carry proof weight;
//   - numerical location (Aberth-Ehrlich simultaneous iteration in
//     extended precision): complex root positions with residuals, used
//     for plots and right-half-plane statistics.
// Assertions that carry proof weight in the test suite only ever rely on
// the exact path.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dompoly/polynomial.hpp"
#include "dompoly/sturm.hpp"

namespace dompoly {

// p = x^multiplicity * cofactor, cofactor(0) != 0.
struct ZeroDeflation {
    int multiplicity;
    IntPolynomial cofactor;
};
ZeroDeflation deflate_zero(const IntPolynomial& p);

struct AberthOptions {
    std::uint64_t seed = 1;
    int max_iterations = 5000;
    double tolerance = 1e-13;  // per-root correction threshold, relative
};

struct ComplexRoot {
    Complex z;
    double residual;          // |p(z)| / (||p||_1 * max(1,|z|)^deg)
    double residual_abs;      // |p(z)|
    double last_correction;   // |last Aberth step|, 0 for closed forms
    int multiplicity;         // from the squarefree decomposition
    bool converged;           // correction criterion met
    bool roundoff_limited;    // stopped because |p(z)| hit the roundoff floor
};

// All nonzero-constant-term roots (degree >= 1, p(0) != 0 required).
// Each root of p appears once per multiplicity; the list is sorted by
// (re, im). Multiple factors are solved independently after a squarefree
// decomposition; degree <= 2 factors use closed forms.
std::vector<ComplexRoot> find_complex_roots(const IntPolynomial& p,
                                            const AberthOptions& options = {});

// Exact certification of nonzero real roots.
struct RealCertification {
    int zero_multiplicity = 0;
    int negative_count = 0;  // distinct real roots < 0
    int positive_count = 0;  // distinct real roots > 0
    int nonzero_count() const { return negative_count + positive_count; }
};
RealCertification certify_real_roots(const IntPolynomial& p);
bool certify_no_nonzero_real_roots(const IntPolynomial& p);

// Isolating intervals for every distinct nonzero real root of p,
// refined to width <= `width`, ascending.
std::vector<RealRootInterval> certified_real_root_intervals(
    const IntPolynomial& p, const Rational& width = Rational(1, 1000000000));

// Right-half-plane statistics over an already-deflated root list.
struct RhpAnalysis {
    double max_real_part;
    Complex max_re_root;
    bool has_rhp_root;                 // max_real_part > tau
    std::vector<Complex> boundary;     // |Re| <= tau: indeterminate at this precision
    double tau;
};
RhpAnalysis rhp_analysis(const std::vector<ComplexRoot>& roots, double tau = 1e-9);

// Negative real roots of the star polynomial x^n + x(1+x)^n, isolated and
// refined exactly, with membership in the window (-2n, -ln n) evaluated
// per root. Membership is reported, not assumed.
struct StarRootLocation {
    int n;
    std::vector<RealRootInterval> intervals;  // all distinct nonzero real roots
    std::vector<bool> in_window;              // interval strictly inside (-2n, -ln n)
    int window_count() const;
};
StarRootLocation star_real_root_locate(int n,
                                       const Rational& width = Rational(1, 1000000000));

// Distance from one point to the union of three loci:
//   (i)  circle |z+1| = 1 restricted to Re(z) > -1/2,
//   (ii) the points -1/2 +- (sqrt3/2) i,
//   (iii) curve |1+z|^2 = |z| restricted to Re(z) < -1/2.
double limit_curve_distance(const Complex& z);

struct LimitCurveDiagnostic {
    std::vector<double> distances;  // aligned with the root list
    double median = 0.0;
    double max = 0.0;
};
LimitCurveDiagnostic limit_curve_diagnostic(const std::vector<ComplexRoot>& roots);

// Everything above bundled for one polynomial.
struct RootAnalysisOptions {
    bool certify = false;
    bool limit_curves = false;
    double tau = 1e-9;
    Rational refine_width = Rational(1, 1000000000);
    AberthOptions aberth;
};

struct RootReport {
    std::string graph_id;
    IntPolynomial poly;
    int degree = 0;
    int zero_root_multiplicity = 0;
    std::vector<ComplexRoot> complex_roots;  // nonzero roots, with multiplicity
    double max_real_part = 0.0;  // NaN when there are no nonzero roots
    bool has_rhp_root = false;
    std::vector<Complex> boundary_indeterminate;
    double tau = 1e-9;
    bool certified = false;
    int certified_real_root_count = -1;  // distinct nonzero real roots
    std::vector<RealRootInterval> real_root_intervals;
    bool limit_curves = false;
    LimitCurveDiagnostic limit_diagnostic;
    std::uint64_t seed = 0;
};

RootReport analyze_roots(const IntPolynomial& p, const RootAnalysisOptions& options = {},
                         std::string graph_id = {});

}  // namespace dompoly
