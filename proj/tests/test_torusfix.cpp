// Torus fixed-point enumeration: closed-form counts, lexicographic order,
// deterministic chunking, canonical keys, concrete representatives, and
// cross-validation against the stability oracle and the weight solver.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "steiner/fixed_points.hpp"
#include "steiner/stability.hpp"
#include "steiner/weights.hpp"

using namespace steiner;

namespace {

struct Corpus {
  std::vector<FixedPointType1> t1;
  std::vector<FixedPointType2> t2;
};

Corpus collect(int n, int m) {
  Corpus c;
  enum_type1(n, m, [&](const FixedPointType1& p) { c.t1.push_back(p); });
  enum_type2(n, m, [&](const FixedPointType2& p) { c.t2.push_back(p); });
  return c;
}

}  // namespace

TEST_CASE("enumeration sizes match the closed-form binomial census") {
  for (int n = 1; n <= 7; ++n)
    for (int m = (n % 2) ? n : n + 1; m <= std::min(2 * n - 1, 7); m += 2) {
      const Corpus c = collect(n, m);
      const int t = (m + 1) / 2;
      CHECK(c.t1.size() == count_type1(n, m));
      CHECK(c.t2.size() == count_type2(n, m));
      // direct product form: C(n+1,2) * C(n,t)^2
      CHECK(Int(static_cast<unsigned long>(c.t1.size())) ==
            binomial(n + 1, 2) * binomial(n, t) * binomial(n, t));
      // pair-count decomposition
      std::uint64_t total = 0;
      for (int pairs = 0; 2 * pairs <= m + 2; ++pairs)
        total += count_type2_with_pairs(n, m, pairs);
      CHECK(total == c.t2.size());
    }
}

TEST_CASE("closed-form census for the larger parameters, no enumeration") {
  for (int m : {7, 9})
    for (int n = (m + 1) / 2; n <= m; ++n) {
      if (n < 1 || m > 2 * n - 1) continue;
      const int t = (m + 1) / 2;
      CHECK(Int(static_cast<unsigned long>(count_type1(n, m))) ==
            binomial(n + 1, 2) * binomial(n, t) * binomial(n, t));
      // type-2: choose d doubled values, then the singletons
      Int expected = 0;
      for (int d = 0; 2 * d <= m + 2; ++d) {
        const int l = m + 2 - 2 * d;
        if (l < 3 || l % 2 == 0) continue;
        expected += binomial(n + 1, d) * binomial(n + 1 - d, l);
      }
      CHECK(Int(static_cast<unsigned long>(count_type2(n, m))) == expected);
    }
}

TEST_CASE("n = m = 1: exactly one fixed point, the coordinate pencil") {
  const Corpus c = collect(1, 1);
  REQUIRE(c.t1.size() == 1);
  CHECK(c.t2.empty());
  const FixedPointType1& p = c.t1[0];
  CHECK(p.i0 == 0);
  CHECK(p.j0 == 1);
  CHECK(p.itail == std::vector<int>{1});
  CHECK(p.jtail == std::vector<int>{0});
}

TEST_CASE("streams are strictly lexicographic and collision-free") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 3}, {3, 5}, {5, 5}}) {
    const Corpus c = collect(n, m);
    std::set<std::string> keys;
    for (std::size_t i = 0; i < c.t1.size(); ++i) {
      const auto& p = c.t1[i];
      CHECK(p.i0 < p.j0);
      keys.insert(canonical_key(FixedPoint(p)));
      if (i) {
        const auto& q = c.t1[i - 1];
        const auto tup = [](const FixedPointType1& f) {
          return std::make_tuple(f.i0, f.j0, f.itail, f.jtail);
        };
        CHECK(tup(q) < tup(p));
      }
    }
    for (std::size_t i = 0; i < c.t2.size(); ++i) {
      keys.insert(canonical_key(FixedPoint(c.t2[i])));
      if (i) CHECK(c.t2[i - 1].idx < c.t2[i].idx);
    }
    CHECK(keys.size() == c.t1.size() + c.t2.size());
  }
}

TEST_CASE("range iteration concatenates to the full stream") {
  const int n = 4, m = 5;
  const Corpus c = collect(n, m);
  const std::uint64_t total = count_type1(n, m);
  REQUIRE(total == c.t1.size());
  for (const std::uint64_t step : {1ull, 7ull, 64ull}) {
    std::vector<FixedPointType1> chunks;
    for (std::uint64_t b = 0; b < total; b += step)
      iterate_type1_range(n, m, b, std::min(b + step, total),
                          [&](const FixedPointType1& p) {
                            chunks.push_back(p);
                          });
    CHECK(chunks == c.t1);
  }
}

TEST_CASE("type-2 structure: multiplicities, singletons, pairs") {
  enum_type2(5, 5, [&](const FixedPointType2& p) {
    REQUIRE(p.idx.size() == static_cast<std::size_t>(p.m + 2));
    CHECK(p.l() >= 3);
    CHECK(p.l() % 2 == 1);
    CHECK(p.l() + 2 * p.d() == p.m + 2);
    const auto singles = p.singleton_positions();
    const auto pairs = p.pair_positions();
    CHECK(singles.size() == static_cast<std::size_t>(p.l()));
    CHECK(pairs.size() == static_cast<std::size_t>(p.d()));
    for (const auto& [u, v] : pairs) CHECK(p.idx[u] == p.idx[v]);
    for (std::size_t i = 1; i < p.idx.size(); ++i)
      CHECK(p.idx[i - 1] <= p.idx[i]);
  });
}

TEST_CASE("parameter guards") {
  CHECK_THROWS_AS(count_type1(3, 4), std::invalid_argument);   // even m
  CHECK_THROWS_AS(count_type1(3, 7), std::invalid_argument);   // m > 2n-1
  CHECK_THROWS_AS(count_type1(5, 3), std::invalid_argument);   // m < n
  CHECK_THROWS_AS(enum_type2(3, 4, [](const FixedPointType2&) {}),
                  std::invalid_argument);
}

TEST_CASE("every fixed point of the boundary format n = 3 is stable") {
  const Corpus c = collect(3, 3);
  REQUIRE(c.t1.size() == 54);
  REQUIRE(c.t2.size() == 4);
  for (const auto& p : c.t1) {
    const LinearMatrix a = type1_matrix(p);
    const StabilityReport rep = stability_k2(a);
    CHECK(rep.verdict == Verdict::Stable);
  }
  for (const auto& p : c.t2) {
    const LinearMatrix a = representative(p);
    CHECK(stability_k2(a).verdict == Verdict::Stable);
  }
}

TEST_CASE("census matrices are torus-fixed: the weight system solves") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {3, 5}}) {
    const Corpus c = collect(n, m);
    for (const auto& p : c.t1) {
      const auto w = solve_weights_from_matrix(type1_matrix(p));
      REQUIRE(w.has_value());
      const WeightData direct = solve_weights(FixedPoint(p));
      CHECK(w->b == direct.b);
      CHECK(w->a[0] == direct.a[0]);
      CHECK(w->a[1] == direct.a[1]);
    }
    for (const auto& p : c.t2) {
      const auto w = solve_weights_from_matrix(representative(p));
      REQUIRE(w.has_value());
      const WeightData direct = solve_weights(FixedPoint(p));
      CHECK(w->b == direct.b);
      CHECK(w->a[0] == direct.a[0]);
      CHECK(w->a[1] == direct.a[1]);
    }
  }
}

TEST_CASE("non-fixed matrices are recognized") {
  SUBCASE("non-monomial entry") {
    LinearMatrix a = LinearMatrix::zero(1, 1, 2);
    a.entries[0][0][0] = 1;
    a.entries[0][0][1] = 1;  // x0 + x1
    a.entries[0][1][1] = 1;
    a.entries[0][2][0] = 1;
    a.entries[1][0][1] = 1;
    a.entries[1][1][0] = 1;
    a.entries[1][2][1] = 1;
    CHECK(!solve_weights_from_matrix(a).has_value());
  }
  SUBCASE("monomial but inconsistent weight system") {
    LinearMatrix a = LinearMatrix::zero(1, 1, 2);
    a.entries[0][0][0] = 1;  // x0
    a.entries[0][1][1] = 1;  // x1
    a.entries[0][2][1] = 1;  // x1
    a.entries[1][0][1] = 1;  // x1
    a.entries[1][1][0] = 1;  // x0
    a.entries[1][2][0] = 1;  // x0
    CHECK(!solve_weights_from_matrix(a).has_value());
  }
}
