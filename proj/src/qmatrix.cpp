#include "steiner/qmatrix.hpp"

#include <stdexcept>

namespace steiner {

QMatrix QMatrix::vstack(const QMatrix& top, const QMatrix& bottom) {
  if (top.cols() != bottom.cols())
    throw std::invalid_argument("vstack: column mismatch");
  QMatrix r(top.rows() + bottom.rows(), top.cols());
  for (int i = 0; i < top.rows(); i++)
    for (int j = 0; j < top.cols(); j++) r.at(i, j) = top.at(i, j);
  for (int i = 0; i < bottom.rows(); i++)
    for (int j = 0; j < bottom.cols(); j++)
      r.at(top.rows() + i, j) = bottom.at(i, j);
  return r;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

// One-step fraction-free elimination (Bareiss): every intermediate entry is a
// minor of the input, and the division by the previous pivot is exact. With
// rational entries this is about keeping numerator/denominator growth linear
// instead of exponential; correctness is the same as plain elimination.
int QMatrix::rank() const {
  QMatrix m = *this;
  int rank = 0;
  Rational prev(1);
  for (int col = 0; col < cols_ && rank < rows_; col++) {
    int piv = -1;
    for (int i = rank; i < rows_; i++)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < cols_; j++) std::swap(m.at(piv, j), m.at(rank, j));
    const Rational p = m.at(rank, col);
    for (int i = rank + 1; i < rows_; i++) {
      for (int j = col + 1; j < cols_; j++)
        m.at(i, j) = (m.at(i, j) * p - m.at(i, col) * m.at(rank, j)) / prev;
      m.at(i, col) = 0;
    }
    prev = p;
    rank++;
  }
  return rank;
}

QMatrix QMatrix::rref(int* rank_out) const {
  QMatrix m = *this;
  int lead = 0;
  for (int col = 0; col < cols_ && lead < rows_; col++) {
    int piv = -1;
    for (int i = lead; i < rows_; i++)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < cols_; j++) std::swap(m.at(piv, j), m.at(lead, j));
    Rational p = m.at(lead, col);
    for (int j = 0; j < cols_; j++) m.at(lead, j) /= p;
    for (int i = 0; i < rows_; i++) {
      if (i == lead || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (int j = 0; j < cols_; j++) m.at(i, j) -= f * m.at(lead, j);
    }
    lead++;
  }
  if (rank_out) *rank_out = lead;
  return m;
}

int common_kernel_dim(const QMatrix& F, const QMatrix& G) {
  if (F.cols() != G.cols())
    throw std::invalid_argument("common_kernel_dim: column mismatch");
  return F.cols() - QMatrix::vstack(F, G).rank();
}

}  // namespace steiner
