#include "dompoly/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace dompoly {

namespace {
const BigInt kZero = 0;

// Doubles hold integers up to 2^1024; refuse anything wider.
constexpr unsigned kMaxDoubleBits = 1023;
}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> low_first) {
    coefficients_.reserve(low_first.size());
    for (long long c : low_first) coefficients_.emplace_back(c);
    normalize();
}

void IntPolynomial::normalize() {
    while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
    std::vector<BigInt> v;
    if (!c.is_zero()) v.push_back(std::move(c));
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::variable() { return monomial(1); }

IntPolynomial IntPolynomial::monomial(std::size_t k, BigInt c) {
    if (c.is_zero()) return {};
    std::vector<BigInt> v(k + 1, BigInt(0));
    v[k] = std::move(c);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_plus_x_to(unsigned n) {
    // binomial row, computed incrementally
    std::vector<BigInt> v(n + 1);
    v[0] = 1;
    for (unsigned i = 1; i <= n; ++i) v[i] = v[i - 1] * (n - i + 1) / i;
    return IntPolynomial(std::move(v));
}

const BigInt& IntPolynomial::coeff(std::size_t i) const {
    return i < coefficients_.size() ? coefficients_[i] : kZero;
}

const BigInt& IntPolynomial::leading() const {
    return coefficients_.empty() ? kZero : coefficients_.back();
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r(*this);
    for (auto& c : r.coefficients_) c = -c;
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (coefficients_.size() < rhs.coefficients_.size())
        coefficients_.resize(rhs.coefficients_.size());
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i)
        coefficients_[i] += rhs.coefficients_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (coefficients_.size() < rhs.coefficients_.size())
        coefficients_.resize(rhs.coefficients_.size());
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i)
        coefficients_[i] -= rhs.coefficients_[i];
    normalize();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    // schoolbook; degrees stay small enough that this wins on simplicity
    std::vector<BigInt> out(lhs.coefficients_.size() + rhs.coefficients_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < lhs.coefficients_.size(); ++i) {
        if (lhs.coefficients_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j)
            out[i + j] += lhs.coefficients_[i] * rhs.coefficients_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::multiplied_by_x(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> out(coefficients_.size() + k, BigInt(0));
    std::copy(coefficients_.begin(), coefficients_.end(), out.begin() + static_cast<long>(k));
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(unsigned k) const {
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

IntPolynomial IntPolynomial::substitute(const IntPolynomial& s) const {
    // Horner over the polynomial ring
    IntPolynomial result;
    for (std::size_t i = coefficients_.size(); i-- > 0;) {
        result = result * s;
        result += constant(coefficients_[i]);
    }
    return result;
}

IntPolynomial IntPolynomial::derivative() const {
    if (coefficients_.size() <= 1) return {};
    std::vector<BigInt> out(coefficients_.size() - 1);
    for (std::size_t i = 1; i < coefficients_.size(); ++i)
        out[i - 1] = coefficients_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(out));
}

Rational IntPolynomial::eval(const Rational& v) const {
    Rational acc = 0;
    for (std::size_t i = coefficients_.size(); i-- > 0;) acc = acc * v + Rational(coefficients_[i]);
    return acc;
}

BigInt IntPolynomial::eval(const BigInt& v) const {
    BigInt acc = 0;
    for (std::size_t i = coefficients_.size(); i-- > 0;) acc = acc * v + coefficients_[i];
    return acc;
}

IntPolynomial::ComplexEval IntPolynomial::eval(const Complex& z) const {
    std::vector<double> c(coefficients_.size());
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (bit_length(coefficients_[i]) > kMaxDoubleBits)
            throw std::overflow_error(
                "coefficient too large for floating evaluation; use the exact path");
        c[i] = coefficients_[i].convert_to<double>();
    }
    // Horner with the standard running error bound: after n = degree steps
    // |computed - exact| <= gamma_{2n} * sum |c_i| |z|^i.
    Complex acc = 0.0;
    double abs_acc = 0.0;
    const double az = std::abs(z);
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * z + c[i];
        abs_acc = abs_acc * az + std::abs(c[i]);
    }
    const double u = std::numeric_limits<double>::epsilon() / 2.0;
    const double k = 2.0 * static_cast<double>(c.empty() ? 0 : c.size() - 1) + 2.0;
    const double gamma = k * u / (1.0 - k * u);
    return {acc, gamma * abs_acc};
}

BigInt IntPolynomial::content() const {
    BigInt g = 0;
    for (const auto& c : coefficients_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return boost::multiprecision::abs(g);
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (leading() < 0) g = -g;
    IntPolynomial r(*this);
    for (auto& c : r.coefficients_) c /= g;
    return r;
}

bool IntPolynomial::divide_exact(const IntPolynomial& d, IntPolynomial& q) const {
    if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (is_zero()) {
        q = {};
        return true;
    }
    if (degree() < d.degree()) return false;
    // long division over Q, tracking integrality as we go
    std::vector<Rational> rem(coefficients_.size());
    for (std::size_t i = 0; i < coefficients_.size(); ++i) rem[i] = Rational(coefficients_[i]);
    const Rational lead(d.leading());
    std::vector<Rational> quot(coefficients_.size() - d.coefficients_.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational f = rem[k + d.coefficients_.size() - 1] / lead;
        quot[k] = f;
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < d.coefficients_.size(); ++j)
            rem[k + j] -= f * Rational(d.coefficients_[j]);
    }
    for (std::size_t i = 0; i < d.coefficients_.size() - 1; ++i)
        if (!rem[i].is_zero()) return false;
    std::vector<BigInt> out(quot.size());
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (denominator_of(quot[i]) != 1) return false;
        out[i] = numerator_of(quot[i]);
    }
    q = IntPolynomial(std::move(out));
    return true;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coefficients_.size(); i-- > 0;) {
        const BigInt& c = coefficients_[i];
        if (c.is_zero()) continue;
        BigInt a = boost::multiprecision::abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) out << a.str();
        if (i > 0) {
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::vector<std::string> IntPolynomial::coefficient_strings() const {
    std::vector<std::string> out(coefficients_.size());
    for (std::size_t i = 0; i < coefficients_.size(); ++i) out[i] = coefficients_[i].str();
    return out;
}

IntPolynomial IntPolynomial::from_coefficient_strings(const std::vector<std::string>& low_first) {
    std::vector<BigInt> v(low_first.size());
    for (std::size_t i = 0; i < low_first.size(); ++i) v[i] = parse_bigint(low_first[i]);
    return IntPolynomial(std::move(v));
}

IntPolynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    const std::size_t k = points.size();
    if (k == 0) throw std::invalid_argument("interpolation needs at least one point");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolation nodes must be pairwise distinct");

    // Newton form: divided differences, then expansion to the monomial basis.
    std::vector<Rational> dd(k);
    for (std::size_t i = 0; i < k; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < k; ++level)
        for (std::size_t i = k - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

    std::vector<Rational> coeffs(k, Rational(0));  // monomial basis accumulator
    std::vector<Rational> basis(k, Rational(0));   // prod (x - x_j), j < level
    basis[0] = 1;
    std::size_t basis_deg = 0;
    for (std::size_t level = 0; level < k; ++level) {
        for (std::size_t i = 0; i <= basis_deg; ++i) coeffs[i] += dd[level] * basis[i];
        if (level + 1 < k) {
            const Rational& x0 = points[level].first;
            ++basis_deg;
            basis[basis_deg] = 0;
            for (std::size_t i = basis_deg; i-- > 0;) {
                basis[i + 1] += basis[i];
                basis[i] *= -x0;
            }
        }
    }

    std::vector<BigInt> out(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (denominator_of(coeffs[i]) != 1)
            throw std::domain_error(
                "interpolant has a non-integer coefficient; input values are inconsistent");
        out[i] = numerator_of(coeffs[i]);
    }
    return IntPolynomial(std::move(out));
}

}  // namespace dompoly
