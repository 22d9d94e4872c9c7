// sturm.hpp
// Exact real-root counting for integer polynomials over rational
// intervals. Everything here is integer/rational arithmetic only; results
// are certificates, not approximations.
#pragma once

#include <vector>

#include "dompoly/polynomial.hpp"

namespace dompoly {

// gcd over Q[x] up to units, returned primitive with positive leading
// coefficient. gcd(0,0) = 0.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// p / gcd(p, p'): same roots, all simple. Primitive, positive leading.
IntPolynomial squarefree_part(const IntPolynomial& p);

// Yun decomposition: p = content * prod factors[i].poly ^ factors[i].multiplicity,
// with pairwise-coprime squarefree factors of ascending multiplicity.
struct SquarefreeFactor {
    IntPolynomial poly;
    int multiplicity;
};
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& p);

// Sign of p(a), exact.
int sign_at(const IntPolynomial& p, const Rational& a);

// Standard chain p, p', then negated remainders; pseudo-remainders with
// even-power multipliers keep every step in Z[x] without flipping signs,
// and each entry is stripped to its primitive part.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p);

// Number of distinct real roots in the half-open interval (a, b].
// Requires a < b and p nonzero; throws std::invalid_argument when either
// endpoint is itself a root (callers must nudge endpoints first).
int sturm_real_root_count(const IntPolynomial& p, const Rational& a, const Rational& b);

// Rational B with every real root of p in [-B, B] (Cauchy bound).
Rational cauchy_root_bound(const IntPolynomial& p);

// Distinct real roots of p bracketed into disjoint intervals with
// rational endpoints, each containing exactly one root, ascending.
// A degenerate interval (lo == hi) pins an exact rational root.
struct RealRootInterval {
    Rational lo;
    Rational hi;
};
std::vector<RealRootInterval> isolate_real_roots(const IntPolynomial& p);

// Shrinks an isolating interval by sign bisection until hi - lo <= width.
// The polynomial must change sign across the interval (or the interval is
// already degenerate).
RealRootInterval refine_root_interval(const IntPolynomial& p, RealRootInterval iv,
                                      const Rational& width);

}  // namespace dompoly
