#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "steiner/linear_matrix.hpp"

namespace steiner {

// Fixed points of the torus action t.x_i = t^(2^i) x_i on the moduli space
// M_{n,m,2}, m odd. Two families:
//
//  * Type 1 — isolated monomial points, given by index sets
//    I = (i0; i1 < ... < it) and J = (j0; j1 < ... < jt) with i0 < j0,
//    i0 not in the I-tail, j0 not in the J-tail, t = (m+1)/2. The matrix has
//    row 0 = (x_{i0}, x_{i1..it}, 0...) and row 1 = (x_{j0}, 0..., x_{j1..jt}).
//
//  * Type 2 — positive-dimensional components indexed by a nondecreasing
//    vector idx of length m+2 with values in 0..n, no value appearing three
//    times, and an odd number l >= 3 of values appearing exactly once. The
//    component is the quotient M_l of l points on the line.

struct FixedPointType1 {
  int n = 0, m = 0;
  int i0 = 0, j0 = 0;
  std::vector<int> itail, jtail;  // strictly increasing, size t, heads excluded

  int t() const { return (m + 1) / 2; }
  bool operator==(const FixedPointType1&) const = default;
};

struct FixedPointType2 {
  int n = 0, m = 0;
  std::vector<int> idx;  // nondecreasing, length m+2, multiplicities <= 2

  int l() const;  // number of values occurring exactly once
  int d() const { return (m + 2 - l()) / 2; }  // number of paired values
  std::vector<int> singleton_positions() const;
  // position pairs of the doubled values, in order of first occurrence
  std::vector<std::pair<int, int>> pair_positions() const;
  bool operator==(const FixedPointType2&) const = default;
};

using FixedPoint = std::variant<FixedPointType1, FixedPointType2>;

// Closed-form counts (exact; throw on overflow or invalid parameters).
std::uint64_t count_type1(int n, int m);
std::uint64_t count_type2_with_pairs(int n, int m, int pairs);
std::uint64_t count_type2(int n, int m);

// Full streams in lexicographic order: type 1 by (i0, j0, itail, jtail),
// type 2 by the index vector. Throw std::invalid_argument when m is even or
// (n, m) is outside 1 <= n <= m <= 2n-1.
void enum_type1(int n, int m,
                const std::function<void(const FixedPointType1&)>& visit);
void enum_type2(int n, int m,
                const std::function<void(const FixedPointType2&)>& visit);

// Type-1 points with lexicographic ranks in [begin, end): the parallel
// entry point. enum_type1(n, m, v) == iterate_type1_range(n, m, 0, count, v).
void iterate_type1_range(
    int n, int m, std::uint64_t begin, std::uint64_t end,
    const std::function<void(const FixedPointType1&)>& visit);

LinearMatrix type1_matrix(const FixedPointType1& p);

// Concrete stable representative of a type-2 component: the two slots of
// each paired value carry the two coordinate rows; singleton slot number q
// (left to right) carries omega = (1 : r) with r the (offset+q)-th term of
// the fixed sequence 0, 1, -1, 2, -2, ... Distinctness of the r's makes the
// point configuration stable for every l >= 3.
LinearMatrix representative(const FixedPointType2& p);
LinearMatrix representative_with_offset(const FixedPointType2& p, int offset);

// Stable unique textual form, for dedup checks and report keys.
std::string canonical_key(const FixedPoint& p);

}  // namespace steiner
