#pragma once

#include <gmpxx.h>

#include <string>

namespace dualpolar {

using BigInt = mpz_class;
using Rational = mpq_class;

/// "num/den", always with an explicit denominator.
std::string to_string(const Rational& x);
/// Parses "num/den" or "num".
Rational parse_rational(const std::string& s);

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace dualpolar
