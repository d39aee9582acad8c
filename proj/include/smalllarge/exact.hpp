#pragma once

// Exact integer/rational arithmetic used for every verdict. Doubles appear only
// in display strings.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdio>
#include <string>

namespace smalllarge
{
    using Integer = boost::multiprecision::cpp_int;
    using Rational = boost::multiprecision::cpp_rational;

    inline auto make_rational(const Integer & num, const Integer & den) -> Rational
    {
        return Rational(num, den);
    }

    inline auto numerator_of(const Rational & r) -> Integer
    {
        return boost::multiprecision::numerator(r);
    }

    inline auto denominator_of(const Rational & r) -> Integer
    {
        return boost::multiprecision::denominator(r);
    }

    /// floor(a / b) for b > 0.
    inline auto floor_div(const Integer & a, const Integer & b) -> Integer
    {
        Integer q = a / b;
        if (a % b != 0 && a < 0)
            q -= 1;
        return q;
    }

    inline auto floor_of(const Rational & r) -> Integer
    {
        return floor_div(numerator_of(r), denominator_of(r));
    }

    inline auto ceil_of(const Rational & r) -> Integer
    {
        return -floor_div(-numerator_of(r), denominator_of(r));
    }

    inline auto isqrt(const Integer & x) -> Integer
    {
        return boost::multiprecision::sqrt(x);
    }

    inline auto pow_int(const Integer & base, unsigned exponent) -> Integer
    {
        return boost::multiprecision::pow(base, exponent);
    }

    inline auto to_double(const Rational & r) -> double
    {
        return r.convert_to<double>();
    }

    inline auto display(double x) -> std::string
    {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%.6f", x);
        return buffer;
    }

    inline auto display(const Rational & r) -> std::string
    {
        return display(to_double(r));
    }

    /// The real number (offset + sqrt(radicand)) / 2, radicand >= 0. Every
    /// quadratic bound in the library has this shape, and comparing against an
    /// integer squares out the root.
    struct HalfRootBound
    {
        Integer offset;
        Integer radicand;

        /// x <= value
        auto admits(const Integer & x) const -> bool
        {
            Integer lhs = 2 * x - offset;
            if (lhs <= 0)
                return true;
            return lhs * lhs <= radicand;
        }

        /// x == value
        auto attained_by(const Integer & x) const -> bool
        {
            Integer lhs = 2 * x - offset;
            return lhs >= 0 && lhs * lhs == radicand;
        }

        /// floor(value); floor((c + sqrt(B)) / 2) == floor((c + isqrt(B)) / 2) for integer c.
        auto floor() const -> Integer
        {
            return floor_div(offset + isqrt(radicand), 2);
        }

        auto approx() const -> double
        {
            return (offset.convert_to<double>() + std::sqrt(radicand.convert_to<double>())) / 2.0;
        }
    };
}
