#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steiner/fixed_points.hpp"
#include "steiner/linear_matrix.hpp"

namespace steiner {

// Torus weights at a fixed point. The base acts on the variables with the
// superincreasing weights c = (1, 2, 4, ..., 2^n); the induced weights on
// I = C^2 are (a0, a1) with a0 = 0, and on W = C^(m+2) they are b. Every
// nonzero entry (r, s) of the fixed matrix, with variable x_v, satisfies
// a_r - b_s = c_v; superincreasingness makes the solution unique.
struct WeightData {
  std::vector<long long> c;  // length n+1
  long long a[2] = {0, 0};
  std::vector<long long> b;  // length m+2

  int n() const { return static_cast<int>(c.size()) - 1; }
  int m() const { return static_cast<int>(b.size()) - 2; }
};

std::vector<long long> base_weights(int n);  // (1, 2, ..., 2^n); n <= 62

WeightData solve_weights(const FixedPoint& p);

// Independent route: read the weight system off any k=2 matrix with monomial
// entries by propagating a_r - b_s = c_v across the incidence graph from
// a0 = 0. Empty when the matrix is not torus-fixed (system inconsistent),
// has a non-monomial entry, or leaves some weight unconstrained.
std::optional<WeightData> solve_weights_from_matrix(const LinearMatrix& A);

// The sign conventions for the three tensor factors, and which halfspace
// counts as "positive", are not derivable from local consistency alone, so
// they are calibrated once against a reference Betti row and then frozen.
// Encoded as four flips.
struct SignConvention {
  bool flip_w = false;       // negate the W-weights b
  bool flip_i = false;       // negate the I-weights a
  bool flip_v = false;       // negate the V-weights c
  bool flip_orient = false;  // count negatives instead of positives

  int index() const {
    return flip_w | (flip_i << 1) | (flip_v << 2) | (flip_orient << 3);
  }
  static SignConvention from_index(int ix);
  std::string str() const;  // four chars in {+,-}, order W I V orientation
  static std::optional<SignConvention> parse(const std::string& s);
  bool operator==(const SignConvention&) const = default;
};

// Tangent census at one fixed point:
//   n1 = positive weights on W* (x) W                   (multiset W2)
//   n2 = positive weights on I* (x) (W (x) V) / a(I)    (multiset W3)
//   n(A) = n2 - n1, the Bialynicki-Birula shift;
//   zero_ext = zeros(W3) - zeros(W2) + 1, the dimension of the fixed
//   component (0 at an isolated point).
// W3 is the full (m+2) x (n+1) x 2 grid of b_j + c_l - a_r minus, per
// I*-factor r, the two weights {a_0 - a_r, a_1 - a_r} of the submodule a(I).
// Empty when the convention is incoherent at this point: a removed weight is
// missing from its slice (multiplicity-aware), or zero_ext < 0.
struct TangentCounts {
  long long n1 = 0, n2 = 0, zero_ext = 0;
  long long n() const { return n2 - n1; }
  bool operator==(const TangentCounts&) const = default;
};

std::optional<TangentCounts> tangent_counts(const WeightData& w,
                                            const SignConvention& conv);

// Reference path: materializes both multisets, removes by explicit multiset
// subtraction, and reports them sorted. Throws std::runtime_error where
// tangent_counts would return empty. Slow; for tests and the CLI.
struct TangentWeightReport {
  std::vector<long long> w2;  // sorted, size (m+2)^2
  std::vector<long long> w3;  // sorted, size 2(m+2)(n+1) - 4, post-removal
  TangentCounts counts;
};

TangentWeightReport tangent_report(const WeightData& w,
                                   const SignConvention& conv);

// The closed forms printed alongside the enumeration. They are DIAGNOSTIC
// ONLY: on some points the printed type-1 n1 exceeds the hard antisymmetry
// bound C(m+2, 2), so verdicts always come from the census above. Every
// disagreement is collected into a deterministic discrepancy report.
struct ClosedFormCounts {
  long long n1 = 0, n2 = 0;
};

ClosedFormCounts closed_form_n1_n2(const FixedPoint& p);

struct Discrepancy {
  std::string point;  // canonical key
  long long census_n1, census_n2;
  long long closed_n1, closed_n2;
};

std::vector<Discrepancy> closed_form_discrepancies(int n, int m,
                                                   const SignConvention& conv);

}  // namespace steiner
