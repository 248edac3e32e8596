#pragma once

#include <string>
#include <vector>

#include "steiner/qmatrix.hpp"

namespace steiner {

// A k x (m+k) matrix of linear forms on P^n. entries[i][j] is the
// coefficient vector (length n+1) of the form in row i, column j.
struct LinearMatrix {
  int n = 0, m = 0, k = 0;
  std::vector<std::vector<std::vector<Rational>>> entries;

  static LinearMatrix zero(int n, int m, int k);
  void check_shape() const;  // throws std::invalid_argument when malformed

  bool entry_is_zero(int i, int j) const;
};

// Strict JSON: top level must be exactly {"n","m","k","entries"}; coefficients
// are JSON integers or strings "p/q"; anything else (floats, extra keys,
// wrong dimensions) is rejected with std::runtime_error.
LinearMatrix matrix_from_json(const std::string& text);
std::string matrix_to_json(const LinearMatrix& A);

// Columns as vectors of I ⊗ V = C^{k(n+1)}: a k(n+1) x (m+k) scalar matrix.
// A is injective on W iff this has full column rank m+k.
QMatrix flattening_w(const LinearMatrix& A);

// Rows flattened: k x (m+k)(n+1). Rank < k iff some row combination is
// identically zero (A* not injective on I).
QMatrix flattening_i(const LinearMatrix& A);

// k = 2 only: the pencil (M_F, M_G) of (m+2) x (n+1) matrices; row j of M_F
// is the coefficient vector of f_j = A[0][j], row j of M_G that of
// g_j = A[1][j]. The member at (alpha:beta) is beta*M_F - alpha*M_G.
struct Pencil {
  QMatrix F, G;
};
Pencil pencil_of(const LinearMatrix& A);

}  // namespace steiner
