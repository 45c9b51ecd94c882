#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace padic {

// Exact rational scalar. Expression templates are off so that arithmetic
// results are plain values.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

// Parses "a" or "a/b" with optional sign, canonicalizing the result.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

std::string rational_to_string(const Rational& r);

// base^exp for exp >= 0; throws std::overflow_error if the result does not
// fit in long long.
long long ipow(long long base, int exp);

// Euler phi of p^j for p prime.
inline long long phi_pk(long long p, int j) {
  return j == 0 ? 1 : ipow(p, j - 1) * (p - 1);
}

}  // namespace padic
