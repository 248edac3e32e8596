#include "steiner/fixed_points.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "steiner/combinatorics.hpp"
#include "steiner/rational.hpp"

namespace steiner {

namespace {

void require_params(int n, int m, bool band) {
  if (m % 2 == 0) throw std::invalid_argument("fixed points: m must be odd");
  if (n < 1 || m < 1)
    throw std::invalid_argument("fixed points: need n >= 1, m >= 1");
  if (band && (m < n || m > 2 * n - 1))
    throw std::invalid_argument(
        "fixed points: parameters outside the band n <= m <= 2n-1");
}

std::uint64_t to_u64(const Int& v) {
  if (v < 0 || !v.fits_ulong_p())
    throw std::overflow_error("fixed-point count does not fit in 64 bits");
  return static_cast<std::uint64_t>(v.get_ui());
}

// Tails avoid the head value; combinations run over the n remaining values,
// listed as positions 0..n-1 and mapped back by skipping the head. The map
// is increasing, so lexicographic order is preserved.
int skip_head(int pos, int head) { return pos < head ? pos : pos + 1; }

std::vector<int> tail_values(const std::vector<int>& positions, int head) {
  std::vector<int> out(positions.size());
  for (std::size_t s = 0; s < positions.size(); ++s)
    out[s] = skip_head(positions[s], head);
  return out;
}

}  // namespace

int FixedPointType2::l() const {
  int singles = 0;
  for (std::size_t p = 0; p < idx.size();) {
    std::size_t q = p;
    while (q < idx.size() && idx[q] == idx[p]) ++q;
    if (q - p == 1) ++singles;
    p = q;
  }
  return singles;
}

std::vector<int> FixedPointType2::singleton_positions() const {
  std::vector<int> out;
  for (std::size_t p = 0; p < idx.size();) {
    std::size_t q = p;
    while (q < idx.size() && idx[q] == idx[p]) ++q;
    if (q - p == 1) out.push_back(static_cast<int>(p));
    p = q;
  }
  return out;
}

std::vector<std::pair<int, int>> FixedPointType2::pair_positions() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t p = 0; p < idx.size();) {
    std::size_t q = p;
    while (q < idx.size() && idx[q] == idx[p]) ++q;
    if (q - p == 2)
      out.emplace_back(static_cast<int>(p), static_cast<int>(p + 1));
    p = q;
  }
  return out;
}

std::uint64_t count_type1(int n, int m) {
  require_params(n, m, true);
  const int t = (m + 1) / 2;
  return to_u64(binomial(n + 1, 2) * binomial(n, t) * binomial(n, t));
}

std::uint64_t count_type2_with_pairs(int n, int m, int pairs) {
  require_params(n, m, false);
  if (pairs < 0) return 0;
  const int singles = m + 2 - 2 * pairs;
  if (singles < 3) return 0;
  return to_u64(binomial(n + 1, pairs) * binomial(n + 1 - pairs, singles));
}

std::uint64_t count_type2(int n, int m) {
  require_params(n, m, false);
  std::uint64_t total = 0;
  for (int pairs = 0; 2 * pairs <= m + 2; ++pairs)
    total += count_type2_with_pairs(n, m, pairs);
  return total;
}

void iterate_type1_range(
    int n, int m, std::uint64_t begin, std::uint64_t end,
    const std::function<void(const FixedPointType1&)>& visit) {
  require_params(n, m, true);
  const int t = (m + 1) / 2;
  const std::uint64_t per_tail = combination_count_u64(n, t);
  const std::uint64_t block = per_tail * per_tail;
  if (begin >= end) return;

  std::uint64_t base = 0;  // rank of the first point of the current block
  for (int i0 = 0; i0 <= n; ++i0) {
    for (int j0 = i0 + 1; j0 <= n; ++j0, base += block) {
      if (base + block <= begin) continue;
      if (base >= end) return;

      const std::uint64_t lo = begin > base ? begin - base : 0;
      const std::uint64_t hi = std::min<std::uint64_t>(end - base, block);

      std::vector<int> ipos = unrank_combination(n, t, lo / per_tail);
      std::vector<int> jpos = unrank_combination(n, t, lo % per_tail);

      FixedPointType1 p;
      p.n = n;
      p.m = m;
      p.i0 = i0;
      p.j0 = j0;
      for (std::uint64_t r = lo; r < hi; ++r) {
        p.itail = tail_values(ipos, i0);
        p.jtail = tail_values(jpos, j0);
        visit(p);
        if (r + 1 == hi) break;
        if (!next_combination(jpos, n)) {
          first_combination(jpos, n, t);
          next_combination(ipos, n);
        }
      }
    }
  }
}

void enum_type1(int n, int m,
                const std::function<void(const FixedPointType1&)>& visit) {
  iterate_type1_range(n, m, 0, count_type1(n, m), visit);
}

namespace {

void enum_type2_rec(int n, int m, int value, int remaining, int singles,
                    std::vector<int>& idx,
                    const std::function<void(const FixedPointType2&)>& visit) {
  if (remaining == 0) {
    if (singles >= 3) {
      FixedPointType2 p;
      p.n = n;
      p.m = m;
      p.idx = idx;
      visit(p);
    }
    return;
  }
  if (value > n) return;
  // Even the unseen values can only save 2 slots each.
  if (remaining > 2 * (n - value + 1)) return;
  // Higher multiplicity of the smaller value first = lexicographic order.
  for (int mult = std::min(2, remaining); mult >= 0; --mult) {
    idx.insert(idx.end(), mult, value);
    enum_type2_rec(n, m, value + 1, remaining - mult, singles + (mult == 1),
                   idx, visit);
    idx.resize(idx.size() - mult);
  }
}

}  // namespace

void enum_type2(int n, int m,
                const std::function<void(const FixedPointType2&)>& visit) {
  require_params(n, m, false);
  std::vector<int> idx;
  idx.reserve(m + 2);
  enum_type2_rec(n, m, 0, m + 2, 0, idx, visit);
}

LinearMatrix type1_matrix(const FixedPointType1& p) {
  const int t = p.t();
  LinearMatrix A = LinearMatrix::zero(p.n, p.m, 2);
  A.entries[0][0][p.i0] = 1;
  A.entries[1][0][p.j0] = 1;
  for (int s = 0; s < t; ++s) {
    A.entries[0][1 + s][p.itail[s]] = 1;
    A.entries[1][1 + t + s][p.jtail[s]] = 1;
  }
  return A;
}

LinearMatrix representative_with_offset(const FixedPointType2& p, int offset) {
  if (offset < 0) throw std::invalid_argument("representative: offset < 0");
  LinearMatrix A = LinearMatrix::zero(p.n, p.m, 2);
  int singles_seen = 0;
  for (std::size_t col = 0; col < p.idx.size();) {
    const int v = p.idx[col];
    std::size_t run = col;
    while (run < p.idx.size() && p.idx[run] == v) ++run;
    if (run - col == 2) {
      A.entries[0][col][v] = 1;      // omega = e0 on the first slot
      A.entries[1][col + 1][v] = 1;  // omega = e1 on the second
    } else {
      // omega = (1 : r), r from the sequence 0, 1, -1, 2, -2, ...
      const int q = offset + singles_seen++;
      const long r = (q % 2 == 1) ? (q + 1) / 2 : -(q / 2);
      A.entries[0][col][v] = 1;
      A.entries[1][col][v] = Rational(r);
    }
    col = run;
  }
  return A;
}

LinearMatrix representative(const FixedPointType2& p) {
  return representative_with_offset(p, 0);
}

namespace {

void join(std::ostringstream& os, const std::vector<int>& v) {
  for (std::size_t s = 0; s < v.size(); ++s) {
    if (s) os << ',';
    os << v[s];
  }
}

}  // namespace

std::string canonical_key(const FixedPoint& p) {
  std::ostringstream os;
  if (const auto* p1 = std::get_if<FixedPointType1>(&p)) {
    os << "T1:n=" << p1->n << ",m=" << p1->m << ";I=" << p1->i0 << ',';
    join(os, p1->itail);
    os << ";J=" << p1->j0 << ',';
    join(os, p1->jtail);
  } else {
    const auto& p2 = std::get<FixedPointType2>(p);
    os << "T2:n=" << p2.n << ",m=" << p2.m << ";i=";
    join(os, p2.idx);
  }
  return os.str();
}

}  // namespace steiner
