#pragma once

#include <vector>

#include "steiner/rational.hpp"

namespace steiner {

// Dense matrix over Q, row-major.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  bool operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  static QMatrix vstack(const QMatrix& top, const QMatrix& bottom);

  // Rank by fraction-free (Bareiss) elimination.
  int rank() const;

  // Reduced row echelon form; writes the rank when asked.
  QMatrix rref(int* rank_out = nullptr) const;

  bool is_zero() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

// dim(ker F  ∩  ker G) for the shared column space (column kernels).
int common_kernel_dim(const QMatrix& F, const QMatrix& G);

}  // namespace steiner
