#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace steiner {

// gmp canonicalizes on construction: denominator > 0, gcd(num, den) = 1.
using Int = mpz_class;
using Rational = mpq_class;

// C(n, k); 0 when k < 0 or k > n. Throws on n < 0.
Int binomial(long n, long k);

// Accepts "p", "-p", "p/q" (base 10). Rejects everything else, including q = 0.
std::optional<Rational> parse_rational(const std::string& s);

// "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rational& q);

// Checked narrowing; throws std::overflow_error when out of range.
long to_long(const Int& z);

}  // namespace steiner
