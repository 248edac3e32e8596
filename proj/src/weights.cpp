#include "steiner/weights.hpp"

#include <algorithm>
#include <stdexcept>

#include "steiner/kernels.hpp"

namespace steiner {

std::vector<long long> base_weights(int n) {
  if (n < 1 || n > 62)
    throw std::invalid_argument("base weights: need 1 <= n <= 62");
  std::vector<long long> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = 1LL << i;
  return c;
}

namespace {

// The variable of a monomial entry, or -1 when zero, or -2 when the entry
// mixes variables.
int entry_variable(const std::vector<Rational>& coeffs) {
  int var = -1;
  for (std::size_t v = 0; v < coeffs.size(); ++v) {
    if (coeffs[v] == 0) continue;
    if (var >= 0) return -2;
    var = static_cast<int>(v);
  }
  return var;
}

// Equivariance of the solved weights over the symbolic incidence of the
// fixed point (no matrix is materialized: this runs once per enumerated
// point, ~1.4e7 times at n = 11).
void require_weight(long long ar, long long bs, long long cv) {
  if (ar - bs != cv)
    throw std::logic_error("weight system inconsistent at a fixed point");
}

void check_equivariant(const FixedPointType1& p, const WeightData& w) {
  const int t = p.t();
  require_weight(w.a[0], w.b[0], w.c[p.i0]);
  require_weight(w.a[1], w.b[0], w.c[p.j0]);
  for (int s = 0; s < t; ++s) {
    require_weight(w.a[0], w.b[1 + s], w.c[p.itail[s]]);
    require_weight(w.a[1], w.b[1 + t + s], w.c[p.jtail[s]]);
  }
}

void check_equivariant(const FixedPointType2& p, const WeightData& w) {
  // Singleton columns carry a point of P^1, so both rows act; paired
  // columns carry e0 / e1 on their two slots.
  std::size_t col = 0;
  while (col < p.idx.size()) {
    const int v = p.idx[col];
    std::size_t run = col;
    while (run < p.idx.size() && p.idx[run] == v) ++run;
    if (run - col == 2) {
      require_weight(w.a[0], w.b[col], w.c[v]);
      require_weight(w.a[1], w.b[col + 1], w.c[v]);
    } else {
      require_weight(w.a[0], w.b[col], w.c[v]);
      require_weight(w.a[1], w.b[col], w.c[v]);
    }
    col = run;
  }
}

}  // namespace

WeightData solve_weights(const FixedPoint& p) {
  WeightData w;
  if (const auto* p1 = std::get_if<FixedPointType1>(&p)) {
    const int t = p1->t();
    w.c = base_weights(p1->n);
    w.a[0] = 0;
    w.a[1] = w.c[p1->j0] - w.c[p1->i0];
    w.b.assign(p1->m + 2, 0);
    w.b[0] = -w.c[p1->i0];
    for (int s = 0; s < t; ++s) {
      w.b[1 + s] = -w.c[p1->itail[s]];
      w.b[1 + t + s] = w.a[1] - w.c[p1->jtail[s]];
    }
    check_equivariant(*p1, w);
  } else {
    const auto& p2 = std::get<FixedPointType2>(p);
    w.c = base_weights(p2.n);
    w.a[0] = w.a[1] = 0;
    w.b.resize(p2.idx.size());
    for (std::size_t s = 0; s < p2.idx.size(); ++s) w.b[s] = -w.c[p2.idx[s]];
    check_equivariant(p2, w);
  }
  return w;
}

std::optional<WeightData> solve_weights_from_matrix(const LinearMatrix& A) {
  A.check_shape();
  if (A.k != 2)
    throw std::invalid_argument("weight solver: k = 2 matrices only");
  const int cols = A.m + 2;

  struct Edge {
    int r, s, v;
  };
  std::vector<Edge> edges;
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < cols; ++s) {
      const int v = entry_variable(A.entries[r][s]);
      if (v == -2) return std::nullopt;  // not monomial => moved by the torus
      if (v >= 0) edges.push_back({r, s, v});
    }

  const std::vector<long long> c = base_weights(A.n);
  // Unknowns: a0, a1, b_0..b_{m+1}. Propagate a_r - b_s = c_v from a0 = 0
  // until stable; any conflict or leftover unknown disqualifies the matrix.
  std::vector<bool> known(2 + cols, false);
  std::vector<long long> val(2 + cols, 0);
  known[0] = true;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const Edge& e : edges) {
      const int ia = e.r, ib = 2 + e.s;
      if (known[ia] && known[ib]) {
        if (val[ia] - val[ib] != c[e.v]) return std::nullopt;
      } else if (known[ia]) {
        val[ib] = val[ia] - c[e.v];
        known[ib] = true;
        progress = true;
      } else if (known[ib]) {
        val[ia] = val[ib] + c[e.v];
        known[ia] = true;
        progress = true;
      }
    }
  }
  if (!std::all_of(known.begin(), known.end(), [](bool b) { return b; }))
    return std::nullopt;

  WeightData w;
  w.c = c;
  w.a[0] = val[0];
  w.a[1] = val[1];
  w.b.assign(val.begin() + 2, val.end());
  return w;
}

SignConvention SignConvention::from_index(int ix) {
  SignConvention s;
  s.flip_w = ix & 1;
  s.flip_i = ix & 2;
  s.flip_v = ix & 4;
  s.flip_orient = ix & 8;
  return s;
}

std::string SignConvention::str() const {
  std::string s(4, '+');
  if (flip_w) s[0] = '-';
  if (flip_i) s[1] = '-';
  if (flip_v) s[2] = '-';
  if (flip_orient) s[3] = '-';
  return s;
}

std::optional<SignConvention> SignConvention::parse(const std::string& s) {
  if (s.size() != 4) return std::nullopt;
  for (char c : s)
    if (c != '+' && c != '-') return std::nullopt;
  SignConvention out;
  out.flip_w = s[0] == '-';
  out.flip_i = s[1] == '-';
  out.flip_v = s[2] == '-';
  out.flip_orient = s[3] == '-';
  return out;
}

namespace {

struct TransformedWeights {
  std::vector<std::int64_t> tb;        // sO*sW*b
  std::vector<std::int64_t> ty[2];     // ty[r][l] = sO*(sV*c_l - sI*a_r)
  std::int64_t removed[2][2];          // removed[r][q] = sO*sI*(a_q - a_r)
};

TransformedWeights transform(const WeightData& w, const SignConvention& conv) {
  const long long sW = conv.flip_w ? -1 : 1;
  const long long sI = conv.flip_i ? -1 : 1;
  const long long sV = conv.flip_v ? -1 : 1;
  const long long sO = conv.flip_orient ? -1 : 1;
  TransformedWeights t;
  t.tb.resize(w.b.size());
  for (std::size_t j = 0; j < w.b.size(); ++j) t.tb[j] = sO * sW * w.b[j];
  for (int r = 0; r < 2; ++r) {
    t.ty[r].resize(w.c.size());
    for (std::size_t l = 0; l < w.c.size(); ++l)
      t.ty[r][l] = sO * (sV * w.c[l] - sI * w.a[r]);
    for (int q = 0; q < 2; ++q)
      t.removed[r][q] = sO * sI * (w.a[q] - w.a[r]);
  }
  return t;
}

}  // namespace

std::optional<TangentCounts> tangent_counts(const WeightData& w,
                                            const SignConvention& conv) {
  const TransformedWeights t = transform(w, conv);
  const auto w2 = kernels::pair_diff(t.tb.data(), t.tb.size(), t.tb.data(),
                                     t.tb.size());
  long long pos3 = 0, zero3 = 0;
  for (int r = 0; r < 2; ++r) {
    const auto g = kernels::grid_sum(t.tb.data(), t.tb.size(),
                                     t.ty[r].data(), t.ty[r].size());
    pos3 += g.pos;
    zero3 += g.zero;
    const std::int64_t v0 = t.removed[r][0], v1 = t.removed[r][1];
    const auto mm = kernels::grid_match(t.tb.data(), t.tb.size(),
                                        t.ty[r].data(), t.ty[r].size(), v0, v1);
    if (v0 == v1 ? mm.c0 < 2 : (mm.c0 < 1 || mm.c1 < 1))
      return std::nullopt;  // a(I) weight missing: incoherent convention
    for (int q = 0; q < 2; ++q) {
      pos3 -= t.removed[r][q] > 0;
      zero3 -= t.removed[r][q] == 0;
    }
  }
  TangentCounts out;
  out.n1 = w2.pos;
  out.n2 = pos3;
  out.zero_ext = zero3 - w2.zero + 1;
  if (out.zero_ext < 0) return std::nullopt;
  return out;
}

TangentWeightReport tangent_report(const WeightData& w,
                                   const SignConvention& conv) {
  const TransformedWeights t = transform(w, conv);
  TangentWeightReport rep;
  rep.w2.reserve(t.tb.size() * t.tb.size());
  for (std::int64_t x : t.tb)
    for (std::int64_t y : t.tb) rep.w2.push_back(x - y);

  std::vector<long long> w3;
  for (int r = 0; r < 2; ++r) {
    std::vector<long long> slice;
    slice.reserve(t.tb.size() * t.ty[r].size());
    for (std::int64_t x : t.tb)
      for (std::int64_t y : t.ty[r]) slice.push_back(x + y);
    for (int q = 0; q < 2; ++q) {
      auto it = std::find(slice.begin(), slice.end(), t.removed[r][q]);
      if (it == slice.end())
        throw std::runtime_error(
            "tangent weights: removed a(I) weight missing from its slice");
      slice.erase(it);
    }
    w3.insert(w3.end(), slice.begin(), slice.end());
  }
  rep.w3 = std::move(w3);
  std::sort(rep.w2.begin(), rep.w2.end());
  std::sort(rep.w3.begin(), rep.w3.end());

  const auto count_pos = [](const std::vector<long long>& v) {
    return static_cast<long long>(
        std::count_if(v.begin(), v.end(), [](long long x) { return x > 0; }));
  };
  const auto count_zero = [](const std::vector<long long>& v) {
    return static_cast<long long>(std::count(v.begin(), v.end(), 0LL));
  };
  rep.counts.n1 = count_pos(rep.w2);
  rep.counts.n2 = count_pos(rep.w3);
  rep.counts.zero_ext = count_zero(rep.w3) - count_zero(rep.w2) + 1;
  if (rep.counts.zero_ext < 0)
    throw std::runtime_error("tangent weights: negative zero-weight excess");
  return rep;
}

ClosedFormCounts closed_form_n1_n2(const FixedPoint& p) {
  ClosedFormCounts out;
  if (const auto* p1 = std::get_if<FixedPointType1>(&p)) {
    const long long n = p1->n, t = p1->t(), i0 = p1->i0, j0 = p1->j0;
    long long sumI = i0, sumJ = j0, sum_i_gt = 0, sum_j_gt = 0;
    long long cnt_j_gt_j0 = 0, cnt_j_le_i0 = 0;
    for (int s = 0; s < t; ++s) {
      const long long is = p1->itail[s], js = p1->jtail[s];
      sumI += is;
      sumJ += js;
      if (is > i0) sum_i_gt += is;
      if (js > i0) sum_j_gt += js;
      if (js > j0) ++cnt_j_gt_j0;
      if (js <= i0) ++cnt_j_le_i0;
    }
    out.n1 = 4 * t * n + 2 * t + 2 * n - 1 - sumI - sumJ - sum_i_gt -
             sum_j_gt - cnt_j_gt_j0 - i0 * cnt_j_le_i0;
    const long long w = p1->m + 2;
    out.n2 = w * (w - 1) / 2;
  } else {
    const auto& p2 = std::get<FixedPointType2>(p);
    const long long n = p2.n, w = p2.m + 2;
    long long sum = 0;
    for (int v : p2.idx) sum += v;
    out.n1 = 2 * w * n - 2 * sum;
    out.n2 = w * (w - 1) / 2 + (w - p2.l()) / 2;
  }
  return out;
}

std::vector<Discrepancy> closed_form_discrepancies(
    int n, int m, const SignConvention& conv) {
  std::vector<Discrepancy> report;
  const auto compare = [&](const FixedPoint& p) {
    const WeightData w = solve_weights(p);
    const auto census = tangent_counts(w, conv);
    if (!census)
      throw std::runtime_error(
          "discrepancy scan: convention incoherent at " + canonical_key(p));
    const ClosedFormCounts cf = closed_form_n1_n2(p);
    if (census->n1 != cf.n1 || census->n2 != cf.n2)
      report.push_back({canonical_key(p), census->n1, census->n2, cf.n1,
                        cf.n2});
  };
  enum_type1(n, m, [&](const FixedPointType1& p) { compare(FixedPoint(p)); });
  enum_type2(n, m, [&](const FixedPointType2& p) { compare(FixedPoint(p)); });
  return report;
}

}  // namespace steiner
