#pragma once

#include <gmpxx.h>

#include <string>

namespace combi {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned n);

/// (2n-1)!! = 1 * 3 * ... * (2n-1); equals 1 for n = 0.
Integer odd_double_factorial(unsigned n);

Integer binomial(unsigned n, unsigned k);

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace combi
