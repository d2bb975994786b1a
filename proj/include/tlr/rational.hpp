#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "tlr/errors.hpp"

namespace tlr {

// All error radii and distance fractions are exact rationals, never doubles:
// a distance of 1/3 compared against a radius of 1/3 must not depend on
// floating-point rounding. Hamming fractions are v/n with small numerators,
// so int64 components are plenty at desk scale.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Parse "a/b", an integer, or a plain decimal ("0.25" -> 1/4), all exact.
inline Rational parse_rational(const std::string& text) {
    try {
        if (auto slash = text.find('/'); slash != std::string::npos) {
            std::int64_t num = std::stoll(text.substr(0, slash));
            std::int64_t den = std::stoll(text.substr(slash + 1));
            if (den == 0) throw ValidationError("rational with zero denominator: " + text);
            return Rational(num, den);
        }
        if (auto dot = text.find('.'); dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            std::size_t frac_len = text.size() - dot - 1;
            if (frac_len > 15) throw ValidationError("decimal too long for exact parse: " + text);
            std::int64_t den = 1;
            for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
            return Rational(std::stoll(digits), den);
        }
        return Rational(std::stoll(text));
    } catch (const std::invalid_argument&) {
        throw ValidationError("cannot parse rational: '" + text + "'");
    } catch (const std::out_of_range&) {
        throw ValidationError("rational out of range: '" + text + "'");
    }
}

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// floor(r * n) for n >= 0, without leaving exact arithmetic.
inline std::int64_t floor_mul(const Rational& r, std::int64_t n) {
    const std::int64_t num = r.numerator() * n;
    const std::int64_t den = r.denominator();
    std::int64_t q = num / den;
    if (num % den != 0 && ((num < 0) != (den < 0))) --q;
    return q;
}

/// r^e for e >= 0.
inline Rational rational_pow(const Rational& r, unsigned e) {
    Rational acc(1);
    for (unsigned i = 0; i < e; ++i) acc *= r;
    return acc;
}

}  // namespace tlr
