#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace omega {

/// Arbitrary-precision rational; GMP keeps it in lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Exact text form: "p" for integers, "p/q" otherwise.
inline std::string to_text(const Rational& value)
{
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

/// Parses "p", "-p", "p/q". Rejects zero denominators and stray characters.
inline Rational parse_rational(std::string_view text)
{
    auto valid_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    auto strip_plus = [](std::string_view s) {
        if (!s.empty() && s.front() == '+')
            s.remove_prefix(1);
        return std::string(s);
    };

    const auto slash = text.find('/');
    const std::string_view num_text = text.substr(0, slash);
    if (!valid_integer(num_text))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    const Integer num(strip_plus(num_text));
    if (slash == std::string_view::npos)
        return Rational(num);

    const std::string_view den_text = text.substr(slash + 1);
    if (!valid_integer(den_text))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    const Integer den(strip_plus(den_text));
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

inline Rational dot(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: length mismatch");
    Rational sum = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero() && !b[k].is_zero())
            sum += a[k] * b[k];
    return sum;
}

/**
 * Scales a rational vector by a positive factor so that its entries become
 * coprime integers. The zero vector is returned unchanged.
 */
inline IntegerVector primitive_integer_vector(const RationalVector& v)
{
    Integer lcm_den = 1;
    for (const auto& x : v)
        lcm_den = boost::multiprecision::lcm(lcm_den, Integer(boost::multiprecision::denominator(x)));
    IntegerVector out;
    out.reserve(v.size());
    Integer g = 0;
    for (const auto& x : v) {
        Integer scaled = boost::multiprecision::numerator(x) * (lcm_den / boost::multiprecision::denominator(x));
        g = boost::multiprecision::gcd(g, scaled);
        out.push_back(std::move(scaled));
    }
    if (g > 1)
        for (auto& x : out)
            x /= g;
    return out;
}

inline void make_primitive(IntegerVector& v)
{
    Integer g = 0;
    for (const auto& x : v)
        g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (auto& x : v)
            x /= g;
}

inline RationalVector to_rational(const IntegerVector& v)
{
    return RationalVector(v.begin(), v.end());
}

} // namespace omega
