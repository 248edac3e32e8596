#include "steiner/pencil.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "steiner/combinatorics.hpp"

namespace steiner {

PencilPoint PencilPoint::make(const Rational& a, const Rational& b) {
  if (b != 0) return {a / b, Rational(1)};
  if (a == 0) throw std::invalid_argument("PencilPoint: (0:0)");
  return {Rational(1), Rational(0)};
}

namespace {

using PolyMat = std::vector<std::vector<Poly>>;

// entries of the chart-beta=1 member F - x*G
PolyMat pencil_poly_matrix(const QMatrix& F, const QMatrix& G) {
  PolyMat m(F.rows(), std::vector<Poly>(F.cols()));
  for (int i = 0; i < F.rows(); i++)
    for (int j = 0; j < F.cols(); j++)
      m[i][j] = Poly({F.at(i, j), -G.at(i, j)});
  return m;
}

// Fraction-free elimination over Q[x]; divisions by the previous pivot are
// exact (Bareiss), so everything stays polynomial.
int poly_rank(PolyMat m) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  Poly prev{Rational(1)};
  for (int col = 0; col < cols && rank < rows; col++) {
    int piv = -1;
    for (int i = rank; i < rows; i++)
      if (!m[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank) std::swap(m[piv], m[rank]);
    for (int i = rank + 1; i < rows; i++) {
      for (int j = col + 1; j < cols; j++)
        m[i][j] =
            (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]).divided_by(prev);
      m[i][col] = Poly();
    }
    prev = m[rank][col];
    rank++;
  }
  return rank;
}

Poly poly_det(PolyMat m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return Poly{Rational(1)};
  bool flip = false;
  Poly prev{Rational(1)};
  for (int k = 0; k < n - 1; k++) {
    int piv = -1;
    for (int i = k; i < n; i++)
      if (!m[i][k].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Poly();
    if (piv != k) {
      std::swap(m[piv], m[k]);
      flip = !flip;
    }
    for (int i = k + 1; i < n; i++) {
      for (int j = k + 1; j < n; j++)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divided_by(prev);
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  return flip ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// gcd of all r x r minors of the pencil (monic), the r-th determinantal
// divisor. Early exit once the gcd is a nonzero constant: no finite drops.
Poly determinantal_divisor(const PolyMat& m, int r) {
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  Poly g;
  std::vector<int> rsel, csel;
  bool rok = first_combination(rsel, rows, r);
  assert(rok);
  (void)rok;
  do {
    std::vector<int> cs;
    bool cok = first_combination(cs, cols, r);
    assert(cok);
    (void)cok;
    do {
      PolyMat sub(r, std::vector<Poly>(r));
      for (int i = 0; i < r; i++)
        for (int j = 0; j < r; j++) sub[i][j] = m[rsel[i]][cs[j]];
      Poly minor = poly_det(std::move(sub));
      if (minor.is_zero()) continue;
      g = g.is_zero() ? minor.monic() : Poly::gcd(g, minor);
      if (g.deg() == 0) return g;
    } while (next_combination(cs, cols));
  } while (next_combination(rsel, rows));
  // r is the generic rank, so at least one r-minor is a nonzero polynomial
  assert(!g.is_zero());
  return g;
}

// extended euclid over Q[x]: returns g (monic) with u*a + v*b = g
Poly ext_gcd(Poly a, Poly b, Poly& u, Poly& v) {
  Poly u0{Rational(1)}, v0, u1, v1{Rational(1)};
  while (!b.is_zero()) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    Poly u2 = u0 - q * u1;
    Poly v2 = v0 - q * v1;
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (!a.is_zero()) {
    Rational s = Rational(1) / a.lead();
    a = a * s;
    u0 = u0 * s;
    v0 = v0 * s;
  }
  u = u0;
  v = v0;
  return a;
}

Poly mod_reduce(const Poly& p, const Poly& h) {
  Poly q, r;
  Poly::divmod(p, h, q, r);
  return r;
}

}  // namespace

int pencil_generic_rank(const QMatrix& F, const QMatrix& G) {
  if (F.rows() != G.rows() || F.cols() != G.cols())
    throw std::invalid_argument("pencil: shape mismatch");
  return poly_rank(pencil_poly_matrix(F, G));
}

int pencil_rank_at(const QMatrix& F, const QMatrix& G, const PencilPoint& w) {
  QMatrix m(F.rows(), F.cols());
  for (int i = 0; i < F.rows(); i++)
    for (int j = 0; j < F.cols(); j++)
      m.at(i, j) = w.beta * F.at(i, j) - w.alpha * G.at(i, j);
  return m.rank();
}

std::vector<std::pair<Poly, int>> pencil_ranks_mod(const QMatrix& F,
                                                   const QMatrix& G,
                                                   const Poly& h) {
  if (h.deg() < 1) throw std::invalid_argument("pencil_ranks_mod: deg h < 1");
  int rows = F.rows(), cols = F.cols();
  PolyMat m(rows, std::vector<Poly>(cols));
  for (int i = 0; i < rows; i++)
    for (int j = 0; j < cols; j++)
      m[i][j] = mod_reduce(Poly({F.at(i, j), -G.at(i, j)}), h);

  int rank = 0;
  for (int col = 0, lead = 0; col < cols && lead < rows; col++) {
    int piv = -1;
    for (int i = lead; i < rows; i++)
      if (!m[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    Poly u, v;
    Poly g = ext_gcd(m[piv][col], h, u, v);
    if (g.deg() > 0) {
      // pivot is a zero divisor mod h: split h and certify each branch
      // separately (D5 / dynamic evaluation)
      auto left = pencil_ranks_mod(F, G, g);
      auto right = pencil_ranks_mod(F, G, h.divided_by(g).monic());
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
    // invertible pivot: u = inverse of m[piv][col] mod h
    std::swap(m[piv], m[lead]);
    for (int j = col; j < cols; j++)
      m[lead][j] = mod_reduce(m[lead][j] * u, h);
    for (int i = lead + 1; i < rows; i++) {
      if (m[i][col].is_zero()) continue;
      Poly f = m[i][col];
      for (int j = col; j < cols; j++)
        m[i][j] = mod_reduce(m[i][j] - f * m[lead][j], h);
    }
    lead++;
    rank++;
  }
  return {{h.monic(), rank}};
}

std::vector<DropPoint> pencil_drop_locus(const QMatrix& F, const QMatrix& G) {
  if (F.rows() != G.rows() || F.cols() != G.cols())
    throw std::invalid_argument("pencil: shape mismatch");
  std::vector<DropPoint> out;
  PolyMat pm = pencil_poly_matrix(F, G);
  const int r = poly_rank(pm);
  if (r == 0) return out;  // zero pencil: nothing can drop below rank 0

  std::vector<DropPoint> finite_rational, algebraic;
  Poly d = determinantal_divisor(pm, r);
  if (d.deg() > 0) {
    Poly h = d.squarefree_part();
    for (const auto& [root, mult] : rational_roots(d)) {
      (void)mult;
      PencilPoint w = PencilPoint::make(root, Rational(1));
      int rk = pencil_rank_at(F, G, w);
      assert(rk < r);
      finite_rational.push_back({w, rk});
      h = h.divided_by(Poly::linear_root(root));
    }
    if (h.deg() > 0) {
      for (auto& [branch, rk] : pencil_ranks_mod(F, G, h)) {
        assert(rk < r);
        algebraic.push_back({AlgebraicPoint{branch}, rk});
      }
    }
  }

  std::sort(finite_rational.begin(), finite_rational.end(),
            [](const DropPoint& a, const DropPoint& b) {
              return std::get<PencilPoint>(a.where).alpha <
                     std::get<PencilPoint>(b.where).alpha;
            });
  std::sort(algebraic.begin(), algebraic.end(),
            [](const DropPoint& a, const DropPoint& b) {
              const Poly& pa = std::get<AlgebraicPoint>(a.where).min_poly;
              const Poly& pb = std::get<AlgebraicPoint>(b.where).min_poly;
              if (pa.deg() != pb.deg()) return pa.deg() < pb.deg();
              for (int i = pa.deg(); i >= 0; i--)
                if (pa.coeff(i) != pb.coeff(i)) return pa.coeff(i) < pb.coeff(i);
              return false;
            });

  out = std::move(finite_rational);
  int rank_inf = pencil_rank_at(F, G, PencilPoint::make(1, 0));
  if (rank_inf < r)
    out.push_back({PencilPoint::make(1, 0), rank_inf});
  out.insert(out.end(), algebraic.begin(), algebraic.end());
  return out;
}

}  // namespace steiner
