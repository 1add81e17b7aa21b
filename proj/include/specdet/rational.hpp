#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace specdet {

// Exact arbitrary-size rational, canonical by construction (gcd 1, positive
// denominator is maintained by the backend).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses a decimal string ("2", "-0.75", "1/3") into an exact Rational.
// Decimal expansions are exact: "0.1" -> 1/10, never a binary float.
inline Rational parse_rational(std::string_view text) {
    std::string t(text);
    if (t.empty())
        throw std::invalid_argument("parse_rational: empty string");
    auto slash = t.find('/');
    if (slash != std::string::npos) {
        BigInt num(t.substr(0, slash));
        BigInt den(t.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("parse_rational: zero denominator in '" + t + "'");
        return Rational(num, den);
    }
    auto dot = t.find('.');
    if (dot == std::string::npos)
        return Rational(BigInt(t));
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    std::size_t frac_len = t.size() - dot - 1;
    if (frac_len == 0 || digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("parse_rational: malformed number '" + t + "'");
    BigInt num(digits);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac_len; ++i)
        den *= 10;
    return Rational(num, den);
}

inline double to_double(const Rational& r) {
    return r.template convert_to<double>();
}

inline bool is_integer(const Rational& r) {
    return denominator(r) == 1;
}

// Exact binomial coefficient C(n, k) = n! / (k! (n-k)!).
inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

} // namespace specdet
