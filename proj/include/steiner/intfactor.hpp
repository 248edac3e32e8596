#pragma once

#include <utility>
#include <vector>

#include "steiner/rational.hpp"

namespace steiner {

// Deterministic primality + factorization helpers used by the rational root
// finder. Trial division up to a small bound, then Miller-Rabin with a fixed
// base set and Pollard rho (Brent variant) with a fixed parameter sequence,
// so repeated runs always produce the same factor order.

bool is_prime(const Int& n);

// n > 0 required. Returns (prime, exponent) pairs with primes increasing.
std::vector<std::pair<Int, int>> factorize(Int n);

// All positive divisors of |n| (n != 0), sorted increasing.
std::vector<Int> divisors(const Int& n);

}  // namespace steiner
