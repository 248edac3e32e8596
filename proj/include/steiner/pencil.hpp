#pragma once

#include <variant>
#include <vector>

#include "steiner/poly.hpp"
#include "steiner/qmatrix.hpp"

namespace steiner {

// A point (alpha : beta) of P^1, normalized so the last nonzero coordinate
// is 1: finite points are (a : 1), the point at infinity is (1 : 0).
struct PencilPoint {
  Rational alpha, beta;
  static PencilPoint make(const Rational& a, const Rational& b);
  bool operator==(const PencilPoint& o) const {
    return alpha == o.alpha && beta == o.beta;
  }
};

// A Galois orbit of points in the chart beta = 1: alpha runs over the roots
// of min_poly (squarefree, monic, no rational roots; not necessarily
// irreducible, but the attached rank is certified for every root).
struct AlgebraicPoint {
  Poly min_poly;
};

struct DropPoint {
  std::variant<PencilPoint, AlgebraicPoint> where;
  int rank;  // rank of the pencil member there; always < generic rank
  bool is_rational() const {
    return std::holds_alternative<PencilPoint>(where);
  }
};

// The pencil (alpha : beta) |-> beta*F - alpha*G of matrices over Q.
// Rank over the function field Q(alpha:beta).
int pencil_generic_rank(const QMatrix& F, const QMatrix& G);

// Exact rank of the member at one point.
int pencil_rank_at(const QMatrix& F, const QMatrix& G, const PencilPoint& w);

// Every point of P^1 where the member rank falls below the generic rank,
// with the rank there. Rational points come first (sorted by alpha, infinity
// last), then algebraic orbits sorted by their minimal polynomial.
std::vector<DropPoint> pencil_drop_locus(const QMatrix& F, const QMatrix& G);

// Ranks of (F - x*G mod h) on each branch of a squarefree h: Gaussian
// elimination over Q[x]/(h), splitting h whenever a pivot is a zero divisor
// (dynamic evaluation). Exposed for tests; pencil_drop_locus uses it.
std::vector<std::pair<Poly, int>> pencil_ranks_mod(const QMatrix& F,
                                                   const QMatrix& G,
                                                   const Poly& h);

}  // namespace steiner
