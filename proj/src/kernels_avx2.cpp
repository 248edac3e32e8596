// AVX2 variants of the weight-census kernels. Compiled with -mavx2 and only
// dispatched to after a runtime __builtin_cpu_supports("avx2") check.
//
// Layout of each loop: broadcast x[i], stream y in blocks of four int64
// lanes, compare, and popcount the sign/equality masks via the movemask of
// the 64-bit lanes. Tails shorter than a block fall back to scalar code, so
// the results are exactly the scalar counts.

#if defined(STEINER_HAVE_AVX2)

#include <immintrin.h>

#include "steiner/kernels.hpp"

namespace steiner::kernels::detail {

namespace {

inline int mask4(__m256i cmp) {
  return _mm256_movemask_pd(_mm256_castsi256_pd(cmp));
}

inline int popcount4(int m) { return __builtin_popcount(m & 0xF); }

}  // namespace

Counts pair_diff_avx2(const std::int64_t* x, std::size_t nx,
                      const std::int64_t* y, std::size_t ny) {
  Counts c;
  const __m256i zero = _mm256_setzero_si256();
  const std::size_t tail = ny % 4, body = ny - tail;
  for (std::size_t i = 0; i < nx; ++i) {
    const __m256i xi = _mm256_set1_epi64x(x[i]);
    long long pos = 0, zer = 0;
    for (std::size_t j = 0; j < body; j += 4) {
      const __m256i yj =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + j));
      const __m256i d = _mm256_sub_epi64(xi, yj);
      pos += popcount4(mask4(_mm256_cmpgt_epi64(d, zero)));
      zer += popcount4(mask4(_mm256_cmpeq_epi64(d, zero)));
    }
    for (std::size_t j = body; j < ny; ++j) {
      const std::int64_t d = x[i] - y[j];
      pos += d > 0;
      zer += d == 0;
    }
    c.pos += pos;
    c.zero += zer;
  }
  return c;
}

Counts grid_sum_avx2(const std::int64_t* x, std::size_t nx,
                     const std::int64_t* y, std::size_t ny) {
  Counts c;
  const __m256i zero = _mm256_setzero_si256();
  const std::size_t tail = ny % 4, body = ny - tail;
  for (std::size_t i = 0; i < nx; ++i) {
    const __m256i xi = _mm256_set1_epi64x(x[i]);
    long long pos = 0, zer = 0;
    for (std::size_t j = 0; j < body; j += 4) {
      const __m256i yj =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + j));
      const __m256i s = _mm256_add_epi64(xi, yj);
      pos += popcount4(mask4(_mm256_cmpgt_epi64(s, zero)));
      zer += popcount4(mask4(_mm256_cmpeq_epi64(s, zero)));
    }
    for (std::size_t j = body; j < ny; ++j) {
      const std::int64_t s = x[i] + y[j];
      pos += s > 0;
      zer += s == 0;
    }
    c.pos += pos;
    c.zero += zer;
  }
  return c;
}

MatchCounts grid_match_avx2(const std::int64_t* x, std::size_t nx,
                            const std::int64_t* y, std::size_t ny,
                            std::int64_t v0, std::int64_t v1) {
  MatchCounts c;
  const __m256i t0 = _mm256_set1_epi64x(v0);
  const __m256i t1 = _mm256_set1_epi64x(v1);
  const std::size_t tail = ny % 4, body = ny - tail;
  for (std::size_t i = 0; i < nx; ++i) {
    const __m256i xi = _mm256_set1_epi64x(x[i]);
    long long c0 = 0, c1 = 0;
    for (std::size_t j = 0; j < body; j += 4) {
      const __m256i yj =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + j));
      const __m256i s = _mm256_add_epi64(xi, yj);
      c0 += popcount4(mask4(_mm256_cmpeq_epi64(s, t0)));
      c1 += popcount4(mask4(_mm256_cmpeq_epi64(s, t1)));
    }
    for (std::size_t j = body; j < ny; ++j) {
      const std::int64_t s = x[i] + y[j];
      c0 += s == v0;
      c1 += s == v1;
    }
    c.c0 += c0;
    c.c1 += c1;
  }
  return c;
}

}  // namespace steiner::kernels::detail

#endif  // STEINER_HAVE_AVX2
