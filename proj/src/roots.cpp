#include "dompoly/roots.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <stdexcept>

#include "dompoly/families.hpp"

namespace dompoly {

namespace {

using LD = long double;
using CLD = std::complex<LD>;

LD to_long_double(const BigInt& v) {
    if (bit_length(v < 0 ? BigInt(-v) : v) > 16000)
        throw std::overflow_error("coefficient exceeds extended-precision range");
    return v.convert_to<LD>();
}

std::vector<LD> to_long_double(const IntPolynomial& p) {
    std::vector<LD> c(p.coefficients().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = to_long_double(p.coeff(i));
    return c;
}

// Horner value, derivative value, and a running bound on the evaluation
// roundoff: |computed - exact| <= gamma * majorant, with the majorant
// accumulated on |z|.
struct EvalLD {
    CLD value;
    CLD derivative;
    LD majorant;
};

EvalLD eval_with_majorant(const std::vector<LD>& c, const CLD& z) {
    const std::size_t d = c.size() - 1;
    const LD az = std::abs(z);
    CLD pv = c[d];
    CLD dv = 0;
    LD s = std::abs(c[d]);
    for (std::size_t i = d; i-- > 0;) {
        dv = dv * z + pv;
        pv = pv * z + c[i];
        s = s * az + std::abs(c[i]);
    }
    return {pv, dv, s};
}

LD roundoff_gamma(std::size_t degree) {
    const LD u = LDBL_EPSILON / 2;
    const LD k = static_cast<LD>(2 * degree + 2);
    return k * u / (1 - k * u);
}

struct AberthOutcome {
    std::vector<CLD> z;
    std::vector<double> last_correction;
    std::vector<bool> converged;
    std::vector<bool> roundoff_limited;
};

// Gauss-Seidel Aberth-Ehrlich iteration. A root freezes when its
// correction drops below tolerance * (1 + |z|) or when |p(z)| falls to
// the evaluation roundoff floor (cluster roots stall there: the true
// residual cannot be resolved in this precision, so the position is as
// good as the arithmetic allows).
AberthOutcome aberth_solve(const std::vector<LD>& c, const AberthOptions& opt,
                           std::mt19937_64& gen) {
    const std::size_t d = c.size() - 1;
    const LD gamma = roundoff_gamma(d);

    LD max_ratio_hi = 0;
    for (std::size_t i = 0; i < d; ++i)
        max_ratio_hi = std::max(max_ratio_hi, std::abs(c[i]) / std::abs(c[d]));
    LD max_ratio_lo = 0;
    for (std::size_t i = 1; i <= d; ++i)
        max_ratio_lo = std::max(max_ratio_lo, std::abs(c[i]) / std::abs(c[0]));
    const LD radius_hi = 1 + max_ratio_hi;
    const LD radius_lo = 1 / (1 + max_ratio_lo);
    const LD radius = std::sqrt(radius_hi * radius_lo);

    AberthOutcome out;
    out.z.resize(d);
    out.last_correction.assign(d, 0.0);
    out.converged.assign(d, false);
    out.roundoff_limited.assign(d, false);

    const LD two_pi = 2 * static_cast<LD>(3.14159265358979323846264338327950288L);
    for (std::size_t k = 0; k < d; ++k) {
        const double u01 = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        const LD jitter = (static_cast<LD>(u01) - 0.5L) * (two_pi / static_cast<LD>(d)) / 4;
        const LD theta = two_pi * (static_cast<LD>(k) + 0.5L) / static_cast<LD>(d) + jitter;
        out.z[k] = CLD(radius * std::cos(theta), radius * std::sin(theta));
    }

    const LD tol = static_cast<LD>(opt.tolerance);
    for (int iter = 0; iter < opt.max_iterations; ++iter) {
        bool all_done = true;
        for (std::size_t i = 0; i < d; ++i) {
            if (out.converged[i]) continue;
            const EvalLD ev = eval_with_majorant(c, out.z[i]);
            if (std::abs(ev.value) <= 4 * gamma * ev.majorant) {
                out.converged[i] = true;
                out.roundoff_limited[i] = true;
                continue;
            }
            CLD ratio;
            if (ev.derivative == CLD(0)) {
                // Flat spot: nudge and retry next sweep.
                out.z[i] += CLD(1e-3L * (1 + std::abs(out.z[i])), 0);
                all_done = false;
                continue;
            }
            ratio = ev.value / ev.derivative;
            CLD repulsion = 0;
            for (std::size_t j = 0; j < d; ++j) {
                if (j == i) continue;
                CLD diff = out.z[i] - out.z[j];
                if (diff == CLD(0)) diff = CLD(LDBL_EPSILON, LDBL_EPSILON);
                repulsion += CLD(1) / diff;
            }
            const CLD denom = CLD(1) - ratio * repulsion;
            const CLD w = (denom == CLD(0)) ? ratio : ratio / denom;
            out.z[i] -= w;
            const LD aw = std::abs(w);
            out.last_correction[i] = static_cast<double>(aw);
            if (aw < tol * (1 + std::abs(out.z[i]))) {
                out.converged[i] = true;
            } else {
                all_done = false;
            }
        }
        if (all_done) break;
    }
    return out;
}

std::vector<CLD> quadratic_roots(const IntPolynomial& q) {
    const LD a = to_long_double(q.coeff(2));
    const LD b = to_long_double(q.coeff(1));
    const LD c0 = to_long_double(q.coeff(0));
    const BigInt disc_exact = q.coeff(1) * q.coeff(1) - 4 * q.coeff(2) * q.coeff(0);
    if (disc_exact >= 0) {
        const LD sq = std::sqrt(to_long_double(disc_exact));
        // Cancellation-free split.
        const LD qq = -(b + (b >= 0 ? sq : -sq)) / 2;
        const LD r1 = qq / a;
        const LD r2 = (qq == 0) ? -b / (2 * a) - r1 : c0 / qq;
        return {CLD(r1, 0), CLD(r2, 0)};
    }
    const LD sq = std::sqrt(to_long_double(-disc_exact));
    const LD re = -b / (2 * a);
    const LD im = std::abs(sq / (2 * a));
    return {CLD(re, -im), CLD(re, im)};
}

}  // namespace

ZeroDeflation deflate_zero(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("deflate_zero: zero polynomial");
    int k = 0;
    while (p.coeff(static_cast<std::size_t>(k)) == 0) ++k;
    std::vector<BigInt> rest(p.coefficients().begin() + k, p.coefficients().end());
    return {k, IntPolynomial(std::move(rest))};
}

std::vector<ComplexRoot> find_complex_roots(const IntPolynomial& p,
                                            const AberthOptions& options) {
    if (p.degree() < 1)
        throw std::invalid_argument("find_complex_roots: degree must be >= 1");
    if (p.coeff(0) == 0)
        throw std::invalid_argument("find_complex_roots: zero constant term, deflate first");

    std::mt19937_64 gen(options.seed);
    struct Found {
        CLD z;
        double last_correction;
        int multiplicity;
        bool converged;
        bool roundoff_limited;
    };
    std::vector<Found> found;

    for (const SquarefreeFactor& f : squarefree_decomposition(p)) {
        std::vector<CLD> zs;
        std::vector<double> corr;
        std::vector<bool> conv, roff;
        if (f.poly.degree() == 1) {
            zs = {CLD(-to_long_double(f.poly.coeff(0)) / to_long_double(f.poly.coeff(1)), 0)};
            corr = {0.0};
            conv = {true};
            roff = {false};
        } else if (f.poly.degree() == 2) {
            zs = quadratic_roots(f.poly);
            corr = {0.0, 0.0};
            conv = {true, true};
            roff = {false, false};
        } else {
            AberthOutcome got = aberth_solve(to_long_double(f.poly), options, gen);
            zs = std::move(got.z);
            corr = std::move(got.last_correction);
            conv = std::move(got.converged);
            roff = std::move(got.roundoff_limited);
        }
        for (std::size_t i = 0; i < zs.size(); ++i)
            for (int m = 0; m < f.multiplicity; ++m)
                found.push_back({zs[i], corr[i], f.multiplicity, conv[i], roff[i]});
    }

    // Residuals are taken against the full input polynomial.
    const std::vector<LD> full = to_long_double(p);
    LD norm1 = 0;
    for (LD v : full) norm1 += std::abs(v);
    const int deg = p.degree();

    std::vector<ComplexRoot> roots;
    roots.reserve(found.size());
    for (const Found& f : found) {
        const EvalLD ev = eval_with_majorant(full, f.z);
        const LD abs_val = std::abs(ev.value);
        const LD scale = norm1 * std::pow(std::max<LD>(1, std::abs(f.z)),
                                          static_cast<LD>(deg));
        ComplexRoot r;
        r.z = Complex(static_cast<double>(f.z.real()), static_cast<double>(f.z.imag()));
        r.residual_abs = static_cast<double>(abs_val);
        r.residual = static_cast<double>(abs_val / scale);
        r.last_correction = f.last_correction;
        r.multiplicity = f.multiplicity;
        r.converged = f.converged;
        r.roundoff_limited = f.roundoff_limited;
        roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
        if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
        return a.z.imag() < b.z.imag();
    });
    return roots;
}

RealCertification certify_real_roots(const IntPolynomial& p) {
    const ZeroDeflation d = deflate_zero(p);
    RealCertification cert;
    cert.zero_multiplicity = d.multiplicity;
    if (d.cofactor.degree() < 1) return cert;
    const IntPolynomial q = squarefree_part(d.cofactor);
    if (q.degree() < 1) return cert;
    const Rational bound = cauchy_root_bound(q) + 1;
    cert.negative_count = sturm_real_root_count(q, -bound, Rational(0));
    cert.positive_count = sturm_real_root_count(q, Rational(0), bound);
    return cert;
}

bool certify_no_nonzero_real_roots(const IntPolynomial& p) {
    return certify_real_roots(p).nonzero_count() == 0;
}

std::vector<RealRootInterval> certified_real_root_intervals(const IntPolynomial& p,
                                                            const Rational& width) {
    const ZeroDeflation d = deflate_zero(p);
    if (d.cofactor.degree() < 1) return {};
    const IntPolynomial q = squarefree_part(d.cofactor);
    std::vector<RealRootInterval> intervals = isolate_real_roots(d.cofactor);
    for (RealRootInterval& iv : intervals) iv = refine_root_interval(q, iv, width);
    return intervals;
}

RhpAnalysis rhp_analysis(const std::vector<ComplexRoot>& roots, double tau) {
    if (roots.empty()) throw std::invalid_argument("rhp_analysis: empty root list");
    RhpAnalysis a;
    a.tau = tau;
    a.max_real_part = -std::numeric_limits<double>::infinity();
    for (const ComplexRoot& r : roots) {
        if (r.z.real() > a.max_real_part) {
            a.max_real_part = r.z.real();
            a.max_re_root = r.z;
        }
        if (std::fabs(r.z.real()) <= tau) a.boundary.push_back(r.z);
    }
    a.has_rhp_root = a.max_real_part > tau;
    return a;
}

int StarRootLocation::window_count() const {
    int k = 0;
    for (bool b : in_window)
        if (b) ++k;
    return k;
}

StarRootLocation star_real_root_locate(int n, const Rational& width) {
    if (n < 3) throw std::invalid_argument("star_real_root_locate: requires n >= 3");
    StarRootLocation loc;
    loc.n = n;
    loc.intervals = certified_real_root_intervals(star_poly(n), width);
    const Rational left = Rational(-2 * n);
    const LD right = -std::log(static_cast<LD>(n));
    for (const RealRootInterval& iv : loc.intervals) {
        const bool inside =
            iv.lo > left && iv.hi.convert_to<LD>() < right;
        loc.in_window.push_back(inside);
    }
    return loc;
}

namespace {

double point_distance(const Complex& a, double re, double im) {
    return std::hypot(a.real() - re, a.imag() - im);
}

constexpr double kHalfSqrt3 = 0.86602540378443864676;

// Distance to the curve r^2 + r(2 cos t - 1) + 1 = 0 (polar form of
// |1+z|^2 = |z|), restricted to Re < -1/2. Sampled over t in
// [2pi/3, 4pi/3] on both radial branches, then ternary-refined.
double curve_branch_distance(const Complex& z, bool outer) {
    const double t_lo = 2 * M_PI / 3;
    const double t_hi = 4 * M_PI / 3;
    auto point_at = [&](double t, bool& admissible) {
        const double b = 1 - 2 * std::cos(t);
        const double disc = b * b - 4;
        const double sq = std::sqrt(std::max(0.0, disc));
        const double r = outer ? (b + sq) / 2 : (b - sq) / 2;
        const double x = r * std::cos(t);
        admissible = x < -0.5;
        return Complex(x, r * std::sin(t));
    };
    auto dist_at = [&](double t) {
        bool ok = false;
        const Complex w = point_at(t, ok);
        if (!ok) return std::numeric_limits<double>::infinity();
        return std::abs(z - w);
    };

    const int samples = 4096;
    double best_t = t_lo;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= samples; ++i) {
        const double t = t_lo + (t_hi - t_lo) * i / samples;
        const double v = dist_at(t);
        if (v < best) {
            best = v;
            best_t = t;
        }
    }
    if (!std::isfinite(best)) return best;
    double a = std::max(t_lo, best_t - (t_hi - t_lo) / samples);
    double b = std::min(t_hi, best_t + (t_hi - t_lo) / samples);
    for (int i = 0; i < 200; ++i) {
        const double m1 = a + (b - a) / 3;
        const double m2 = b - (b - a) / 3;
        if (dist_at(m1) <= dist_at(m2)) b = m2;
        else a = m1;
    }
    return std::min(best, dist_at((a + b) / 2));
}

}  // namespace

double limit_curve_distance(const Complex& z) {
    // (ii) the two isolated points.
    double best = std::min(point_distance(z, -0.5, kHalfSqrt3),
                           point_distance(z, -0.5, -kHalfSqrt3));
    // (i) circle |z+1| = 1, admissible where Re > -1/2, i.e. the
    // projection angle t satisfies cos t > 1/2.
    const Complex w = z + Complex(1, 0);
    const double aw = std::abs(w);
    if (aw == 0) {
        best = std::min(best, 1.0);
    } else if (w.real() / aw > 0.5) {
        best = std::min(best, std::fabs(aw - 1));
    }
    // Inadmissible projection: nearest admissible circle points are the
    // arc endpoints, which coincide with the points in (ii).

    // (iii) the outward curve.
    best = std::min(best, curve_branch_distance(z, true));
    best = std::min(best, curve_branch_distance(z, false));
    return best;
}

LimitCurveDiagnostic limit_curve_diagnostic(const std::vector<ComplexRoot>& roots) {
    LimitCurveDiagnostic diag;
    diag.distances.reserve(roots.size());
    for (const ComplexRoot& r : roots) diag.distances.push_back(limit_curve_distance(r.z));
    if (diag.distances.empty()) return diag;
    std::vector<double> sorted = diag.distances;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    diag.median = (n % 2 == 1) ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2;
    diag.max = sorted.back();
    return diag;
}

RootReport analyze_roots(const IntPolynomial& p, const RootAnalysisOptions& options,
                         std::string graph_id) {
    if (p.is_zero()) throw std::invalid_argument("analyze_roots: zero polynomial");
    RootReport report;
    report.graph_id = std::move(graph_id);
    report.poly = p;
    report.degree = p.degree();
    report.tau = options.tau;
    report.seed = options.aberth.seed;

    const ZeroDeflation d = deflate_zero(p);
    report.zero_root_multiplicity = d.multiplicity;
    if (d.cofactor.degree() >= 1)
        report.complex_roots = find_complex_roots(d.cofactor, options.aberth);

    if (!report.complex_roots.empty()) {
        const RhpAnalysis rhp = rhp_analysis(report.complex_roots, options.tau);
        report.max_real_part = rhp.max_real_part;
        report.has_rhp_root = rhp.has_rhp_root;
        report.boundary_indeterminate = rhp.boundary;
    } else {
        report.max_real_part = std::numeric_limits<double>::quiet_NaN();
        report.has_rhp_root = false;
    }

    if (options.certify) {
        report.certified = true;
        const RealCertification cert = certify_real_roots(p);
        report.certified_real_root_count = cert.nonzero_count();
        report.real_root_intervals = certified_real_root_intervals(p, options.refine_width);
    }

    if (options.limit_curves) {
        report.limit_curves = true;
        report.limit_diagnostic = limit_curve_diagnostic(report.complex_roots);
    }
    return report;
}

}  // namespace dompoly
