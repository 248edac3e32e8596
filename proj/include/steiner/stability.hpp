#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "steiner/linear_matrix.hpp"
#include "steiner/pencil.hpp"

namespace steiner {

enum class Verdict { Stable, StrictlySemistable, Unstable };
std::string verdict_str(Verdict v);

struct Violation {
  std::string code;    // "params-empty-ss", "not-injective-w", "not-injective-i"
  std::string detail;
};

// Semantic validity of A as a point of the GIT problem. Shape errors throw;
// these are the in-band findings: (a) m > k*n means the semistable locus is
// empty, (b)/(c) are the two flattening injectivity failures.
std::vector<Violation> validate(const LinearMatrix& A);

// Where the extremal intersection dim s_max = max_w dim(R_w ∩ T_A) is
// attained. Rational point, or a Galois orbit for an irrational drop.
struct Witness {
  std::variant<PencilPoint, AlgebraicPoint> where;
  int intersection_dim;
};

struct StabilityReport {
  Verdict verdict;
  std::optional<int> s_max;         // absent on validation short-circuit
  std::optional<Witness> witness;   // set when not Stable, or when a drop exists
  std::vector<Violation> violations;
};

// Complete decision for k = 2 via the pencil criterion:
// dim(R_w ∩ T_A) = (m+2) - rank(beta*M_F - alpha*M_G) at w = (alpha:beta),
// A semistable (resp. stable) iff s_max <= (m+2)/2 (resp. <).
StabilityReport stability_k2(const LinearMatrix& A);

// dim of the degeneracy locus D(A) = { x : rank A(x) < 2 } in P^n; -1 for
// empty. Requires k = 2 and A injective on W (throws otherwise).
int degeneracy_dim_k2(const LinearMatrix& A);

// (j_S, j_tilde): positions in the two filtrations, both clamped below at 1.
// j_S = s_max - (m - n); j_tilde = dim D(A) + 2. Requires A semistable.
std::pair<int, int> strata_indices(const LinearMatrix& A);

// m even, A in the block form [[0 | f-block], [g-block | 0]] with blocks of
// width m/2+1: the unordered pair of (m/2+1)-dim spaces of linear forms,
// each as a reduced-row-echelon basis, canonically ordered. Throws when the
// input is not in block form (no limits are computed here) or the blocks do
// not span full dimension.
struct BoundaryPair {
  QMatrix first, second;  // RREF, lexicographically ordered pair
};
BoundaryPair boundary_point_even_m(const LinearMatrix& A);

// Leading-zero counts i_s per row of A as presented, sorted nonincreasing
// (a whole-zero row counts m+k).
std::vector<int> leading_zero_counts(const LinearMatrix& A);

// One-PS instability certificate for general k (checker, not a decision
// procedure): valid-for-nonstable iff (s != k-1 and k*i_s >= (m+k)(k-1-s))
// or i_{k-1} > 0; valid-for-nonsemistable iff the strict inequality holds.
struct InstabilityCertificate {
  int k = 0, m = 0;
  std::vector<int> leading_zeros;  // nonincreasing, values in [0, m+k]
  int s = 0;                       // claimed index, 0 <= s <= k-1
};

struct CertificateCheck {
  bool not_stable = false;
  bool not_semistable = false;  // implies not_stable
};

CertificateCheck check_instability_certificate(const InstabilityCertificate&);

// (n, m) -> (n, 2n-2-m), the Grassmannian duality on parameters; involution
// on 1 <= m <= 2n-3.
int dual_m(int n, int m);

}  // namespace steiner
