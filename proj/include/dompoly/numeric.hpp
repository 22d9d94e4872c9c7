// numeric.hpp
// Exact arithmetic scalar types shared by the whole library, plus the
// error types the CLI maps to exit codes.
//
// BigInt/Rational are arbitrary precision: dominating-set counts reach
// binomial magnitudes (C(80,40) and beyond), so fixed-width integers are
// never used on the exact path.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>

namespace dompoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

// Requested computation exceeds the configured enumeration budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (edge lists, family specs, serialized polynomials).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

inline int sign_of(const BigInt& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }

inline BigInt numerator_of(const Rational& v) { return boost::multiprecision::numerator(v); }
inline BigInt denominator_of(const Rational& v) { return boost::multiprecision::denominator(v); }

// Bits needed for |v|; 0 for v == 0.
inline unsigned bit_length(const BigInt& v) {
    if (v.is_zero()) return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(boost::multiprecision::abs(v))) + 1u;
}

std::string to_decimal(const BigInt& v);
std::string to_decimal(const Rational& v);  // "num/den", or "num" when den == 1

BigInt parse_bigint(const std::string& text);
Rational parse_rational(const std::string& text);  // accepts "a", "a/b"

}  // namespace dompoly
