// polynomial.hpp
// Dense univariate polynomials over arbitrary-precision integers.
//
// Representation: coefficients_[i] is the coefficient of x^i. The vector is
// kept normalized (no trailing zeros); the zero polynomial is the empty
// vector, with degree() == -1.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dompoly/numeric.hpp"

namespace dompoly {

class IntPolynomial {
public:
    IntPolynomial() = default;  // zero polynomial
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    IntPolynomial(std::initializer_list<long long> low_first);

    static IntPolynomial constant(BigInt c);
    static IntPolynomial one() { return constant(1); }
    static IntPolynomial variable();                       // x
    static IntPolynomial monomial(std::size_t k, BigInt c = 1);  // c * x^k
    static IntPolynomial one_plus_x_to(unsigned n);        // (1 + x)^n

    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    bool is_zero() const { return coefficients_.empty(); }
    const std::vector<BigInt>& coefficients() const { return coefficients_; }
    // Coefficient of x^i; zero beyond the degree.
    const BigInt& coeff(std::size_t i) const;
    const BigInt& leading() const;

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
    friend bool operator==(const IntPolynomial& lhs, const IntPolynomial& rhs) = default;

    IntPolynomial multiplied_by_x(std::size_t k = 1) const;  // p * x^k
    IntPolynomial pow(unsigned k) const;                     // p^k, p^0 == 1
    IntPolynomial substitute(const IntPolynomial& s) const;  // p(s(x))
    IntPolynomial derivative() const;

    Rational eval(const Rational& v) const;  // exact Horner
    BigInt eval(const BigInt& v) const;

    // Floating Horner evaluation with a running roundoff bound:
    // |value - p(z)| <= error_bound. Throws std::overflow_error when a
    // coefficient does not fit in a double; use the exact path instead.
    struct ComplexEval {
        Complex value;
        double error_bound;
    };
    ComplexEval eval(const Complex& z) const;

    // Content (gcd of coefficients, >= 0; 0 only for the zero polynomial)
    // and primitive part with positive leading coefficient.
    BigInt content() const;
    IntPolynomial primitive_part() const;

    // Exact division: sets q with *this == q * d and returns true, or
    // returns false when d does not divide *this over the rationals with
    // an integer quotient.  d must be nonzero.
    bool divide_exact(const IntPolynomial& d, IntPolynomial& q) const;

    std::string to_string() const;  // human form, highest degree first

    // Decimal strings, lowest degree first (bit-exact across JSON).
    std::vector<std::string> coefficient_strings() const;
    static IntPolynomial from_coefficient_strings(const std::vector<std::string>& low_first);

private:
    void normalize();
    std::vector<BigInt> coefficients_;
};

inline IntPolynomial power(const IntPolynomial& p, unsigned k) { return p.pow(k); }

// Unique interpolating polynomial through the given points (abscissae must
// be pairwise distinct; count = degree + 1). Throws parse_error-free
// std::invalid_argument on duplicate nodes and std::domain_error when the
// interpolant has a non-integer coefficient (inconsistent inputs).
IntPolynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace dompoly
