#pragma once

#include <gmpxx.h>

#include <string>

namespace superkoszul {

/// Exact rational scalar used everywhere in the library.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "3", "-2/5" and similar.
Rational parse_rational(const std::string& text);

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace superkoszul
