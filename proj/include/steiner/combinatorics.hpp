#pragma once

#include <cstdint>
#include <vector>

#include "steiner/rational.hpp"

namespace steiner {

// Lexicographic machinery for t-subsets of {0, ..., n-1}, used both by the
// pencil minor scan and by the fixed-point enumerators (where the unranking
// gives deterministic parallel chunking).

// First t-subset: {0, 1, ..., t-1}. Returns false when t > n.
bool first_combination(std::vector<int>& c, int n, int t);

// Advance to the lex successor; false once exhausted.
bool next_combination(std::vector<int>& c, int n);

// rank-th t-subset of {0..n-1} in lex order, rank in [0, C(n,t)).
std::vector<int> unrank_combination(int n, int t, std::uint64_t rank);

// C(n, t) as uint64; throws if it does not fit.
std::uint64_t combination_count_u64(int n, int t);

}  // namespace steiner
