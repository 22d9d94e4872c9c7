#include "dompoly/numeric.hpp"

#include <cctype>

namespace dompoly {

std::string to_decimal(const BigInt& v) { return v.str(); }

std::string to_decimal(const Rational& v) {
    BigInt den = denominator_of(v);
    if (den == 1) return numerator_of(v).str();
    return numerator_of(v).str() + "/" + den.str();
}

BigInt parse_bigint(const std::string& text) {
    if (text.empty()) throw parse_error("empty integer literal");
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (i == text.size()) throw parse_error("bad integer literal: '" + text + "'");
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw parse_error("bad integer literal: '" + text + "'");
    return BigInt(text);
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_bigint(text));
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den.is_zero()) throw parse_error("zero denominator: '" + text + "'");
    return Rational(num, den);
}

}  // namespace dompoly
