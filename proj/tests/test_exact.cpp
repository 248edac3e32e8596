// Exact-arithmetic foundations: rationals, binomials, combinations, rank,
// polynomial algebra, and the pencil drop locus.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "steiner/combinatorics.hpp"
#include "steiner/pencil.hpp"
#include "steiner/poly.hpp"
#include "steiner/qmatrix.hpp"
#include "steiner/rational.hpp"

using namespace steiner;

TEST_CASE("binomial matches Pascal's rule up to n = 30") {
  // Independent oracle: build the triangle by addition only.
  std::vector<std::vector<Int>> pascal(31);
  for (int n = 0; n <= 30; ++n) {
    pascal[n].resize(n + 1);
    pascal[n][0] = 1;
    pascal[n][n] = 1;
    for (int k = 1; k < n; ++k)
      pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
  }
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal[n][k]);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("rational parsing round-trips and rejects junk") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(!parse_rational("1/0").has_value());
  CHECK(!parse_rational("1.5").has_value());
  CHECK(!parse_rational("x").has_value());
  CHECK(!parse_rational("").has_value());
  CHECK(rat_str(Rational(-3, 4)) == "-3/4");
  CHECK(rat_str(Rational(7)) == "7");
}

TEST_CASE("combination enumeration agrees with unranking and the count") {
  for (int n : {1, 4, 6, 9})
    for (int t = 0; t <= n; ++t) {
      const std::uint64_t total = combination_count_u64(n, t);
      CHECK(Int(static_cast<unsigned long>(total)) == binomial(n, t));
      std::vector<int> c;
      REQUIRE(first_combination(c, n, t));
      std::uint64_t rank = 0;
      do {
        CHECK(unrank_combination(n, t, rank) == c);
        ++rank;
      } while (next_combination(c, n));
      CHECK(rank == total);
    }
  std::vector<int> c;
  CHECK(!first_combination(c, 2, 3));
}

namespace {

// Test-local oracle: plain Gauss-Jordan over Q, no pivoting tricks shared
// with the library's fraction-free path.
int naive_rank(QMatrix a) {
  int rank = 0;
  for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < a.rows(); ++r)
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < a.cols(); ++c) std::swap(a.at(pivot, c), a.at(rank, c));
    const Rational inv = a.at(rank, col);
    for (int c = 0; c < a.cols(); ++c) a.at(rank, c) /= inv;
    for (int r = 0; r < a.rows(); ++r)
      if (r != rank && a.at(r, col) != 0) {
        const Rational f = a.at(r, col);
        for (int c = 0; c < a.cols(); ++c)
          a.at(r, c) -= f * a.at(rank, c);
      }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("Bareiss rank equals Gauss-Jordan rank on 200 random matrices") {
  std::mt19937 gen(20240517);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(gen() % 8);
    const int cols = 1 + static_cast<int>(gen() % 10);
    QMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        a.at(i, j) = Rational(static_cast<long>(gen() % 19) - 9);
    CHECK(a.rank() == naive_rank(a));
  }
}

TEST_CASE("rref is idempotent and preserves rank") {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    QMatrix a(3, 5);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 5; ++j)
        a.at(i, j) = Rational(static_cast<long>(gen() % 7) - 3);
    int r1 = 0, r2 = 0;
    const QMatrix e = a.rref(&r1);
    const QMatrix e2 = e.rref(&r2);
    CHECK(r1 == r2);
    CHECK(r1 == a.rank());
    CHECK(e == e2);
  }
}

TEST_CASE("common kernel dimension via rank-nullity") {
  // F, G : columns in Q^2; kernels meet in the expected dimension.
  QMatrix f(2, 4), g(2, 4);
  // f = [e0, e1, 0, 0], g = [0, e0, e1, 0]
  f.at(0, 0) = 1;
  f.at(1, 1) = 1;
  g.at(0, 1) = 1;
  g.at(1, 2) = 1;
  CHECK(common_kernel_dim(f, g) == 1);  // only the last column
  CHECK(common_kernel_dim(f, f) == 2);  // nullity of f
  const QMatrix z(2, 4);
  CHECK(common_kernel_dim(z, z) == 4);
}

TEST_CASE("polynomial gcd, squarefree part, and rational roots") {
  const Poly x = Poly::x();
  const Poly p = (x - Poly(Rational(1))) * (x - Poly(Rational(1))) *
                 (x + Poly(Rational(2))) * (x * x + Poly(Rational(1)));
  const Poly sf = p.squarefree_part();
  CHECK(Poly::gcd(sf, sf.derivative()).is_constant());
  CHECK(sf.deg() == 4);  // (x-1)(x+2)(x^2+1)

  const auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == Rational(-2));
  CHECK(roots[0].second == 1);
  CHECK(roots[1].first == Rational(1));
  CHECK(roots[1].second == 2);

  // gcd of coprime polynomials is 1
  CHECK(Poly::gcd(x - Poly(Rational(3)), x + Poly(Rational(3))).deg() == 0);
  // divided_by throws on inexact division
  CHECK_THROWS(p.divided_by(x - Poly(Rational(5))));
}

TEST_CASE("roots with denominators and the half root") {
  const Poly x = Poly::x();
  const Poly q = (x * Rational(2) - Poly(Rational(1))) * (x * Rational(3) +
                                                          Poly(Rational(2)));
  const auto roots = rational_roots(q);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == Rational(-2, 3));
  CHECK(roots[1].first == Rational(1, 2));
}

namespace {

QMatrix diag2(const Rational& a, const Rational& b) {
  QMatrix m(2, 2);
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("pencil drop locus on pinned examples") {
  SUBCASE("F = G: single drop at (1:1) to rank 0") {
    const QMatrix f = diag2(1, 1);
    const auto drops = pencil_drop_locus(f, f);
    REQUIRE(drops.size() == 1);
    REQUIRE(drops[0].is_rational());
    const auto& w = std::get<PencilPoint>(drops[0].where);
    CHECK(w == PencilPoint::make(1, 1));
    CHECK(drops[0].rank == 0);
    CHECK(pencil_generic_rank(f, f) == 2);
  }
  SUBCASE("G = 0: drop exactly at infinity (1:0)") {
    const QMatrix f = diag2(1, 2), z(2, 2);
    const auto drops = pencil_drop_locus(f, z);
    REQUIRE(drops.size() == 1);
    REQUIRE(drops[0].is_rational());
    CHECK(std::get<PencilPoint>(drops[0].where) ==
          PencilPoint::make(1, 0));
    CHECK(drops[0].rank == 0);
  }
  SUBCASE("distinct eigenvalues: one drop per eigenvalue") {
    // beta*F - alpha*G with F = diag(1,2), G = diag(1,1): drops at
    // alpha/beta = 1 and 2.
    const QMatrix f = diag2(1, 2), g = diag2(1, 1);
    const auto drops = pencil_drop_locus(f, g);
    REQUIRE(drops.size() == 2);
    CHECK(std::get<PencilPoint>(drops[0].where) == PencilPoint::make(1, 1));
    CHECK(std::get<PencilPoint>(drops[1].where) == PencilPoint::make(2, 1));
    for (const auto& d : drops) CHECK(d.rank == 1);
  }
  SUBCASE("irrational drops come as a Galois orbit") {
    // det(beta*F - alpha*G) = beta^2*2 - alpha^2  -> alpha^2 = 2 beta^2.
    QMatrix f(2, 2), g(2, 2);
    f.at(0, 1) = 1;
    f.at(1, 0) = 2;
    g.at(0, 0) = 1;
    g.at(1, 1) = 1;
    const auto drops = pencil_drop_locus(f, g);
    REQUIRE(drops.size() == 1);
    REQUIRE(!drops[0].is_rational());
    const Poly mp = std::get<AlgebraicPoint>(drops[0].where).min_poly;
    CHECK(mp.deg() == 2);
    CHECK(mp.eval(Rational(0)) == Rational(-2));  // x^2 - 2
    CHECK(drops[0].rank == 1);
  }
}

TEST_CASE("random pencils: drop ranks below generic, bounded count") {
  std::mt19937 gen(424242);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 2 + static_cast<int>(gen() % 3);
    const int cols = 2 + static_cast<int>(gen() % 4);
    QMatrix f(rows, cols), g(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        f.at(i, j) = Rational(static_cast<long>(gen() % 7) - 3);
        g.at(i, j) = Rational(static_cast<long>(gen() % 7) - 3);
      }
    const int r = pencil_generic_rank(f, g);
    const auto drops = pencil_drop_locus(f, g);
    // Each drop point contributes at least one root of a minor gcd of
    // degree <= r, so the locus is finite and small.
    CHECK(static_cast<int>(drops.size()) <= r * std::min(rows, cols));
    for (const auto& d : drops) {
      CHECK(d.rank < r);
      if (d.is_rational()) {
        const auto& w = std::get<PencilPoint>(d.where);
        CHECK(pencil_rank_at(f, g, w) == d.rank);
      } else {
        const Poly mp = std::get<AlgebraicPoint>(d.where).min_poly;
        CHECK(mp.deg() >= 2);
        CHECK(rational_roots(mp).empty());
        CHECK(Poly::gcd(mp, mp.derivative()).is_constant());
      }
    }
  }
}

TEST_CASE("pencil_ranks_mod splits zero-divisor branches") {
  // F - x*G with G = I, F = diag(1, 2): mod h = (x-1)(x-2) the two branches
  // have rank 1 each; mod an irreducible away from the spectrum rank is 2.
  const QMatrix f = diag2(1, 2), g = diag2(1, 1);
  const Poly x = Poly::x();
  const Poly h = (x - Poly(Rational(1))) * (x - Poly(Rational(2)));
  auto branches = pencil_ranks_mod(f, g, h);
  REQUIRE(branches.size() == 2);
  std::sort(branches.begin(), branches.end(),
            [](const auto& a, const auto& b) {
              return a.first.eval(Rational(0)) < b.first.eval(Rational(0));
            });
  CHECK(branches[0].first.eval(Rational(2)) == Rational(0));
  CHECK(branches[0].second == 1);
  CHECK(branches[1].first.eval(Rational(1)) == Rational(0));
  CHECK(branches[1].second == 1);

  const Poly irr = x * x - Poly(Rational(3));
  const auto away = pencil_ranks_mod(f, g, irr);
  REQUIRE(away.size() == 1);
  CHECK(away[0].second == 2);
}
