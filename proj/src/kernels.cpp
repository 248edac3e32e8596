#include "steiner/kernels.hpp"

#include <atomic>

namespace steiner::kernels {

namespace {

Counts pair_diff_scalar(const std::int64_t* x, std::size_t nx,
                        const std::int64_t* y, std::size_t ny) {
  Counts c;
  for (std::size_t i = 0; i < nx; ++i) {
    const std::int64_t xi = x[i];
    for (std::size_t j = 0; j < ny; ++j) {
      const std::int64_t d = xi - y[j];
      c.pos += d > 0;
      c.zero += d == 0;
    }
  }
  return c;
}

Counts grid_sum_scalar(const std::int64_t* x, std::size_t nx,
                       const std::int64_t* y, std::size_t ny) {
  Counts c;
  for (std::size_t i = 0; i < nx; ++i) {
    const std::int64_t xi = x[i];
    for (std::size_t j = 0; j < ny; ++j) {
      const std::int64_t s = xi + y[j];
      c.pos += s > 0;
      c.zero += s == 0;
    }
  }
  return c;
}

MatchCounts grid_match_scalar(const std::int64_t* x, std::size_t nx,
                              const std::int64_t* y, std::size_t ny,
                              std::int64_t v0, std::int64_t v1) {
  MatchCounts c;
  for (std::size_t i = 0; i < nx; ++i) {
    const std::int64_t xi = x[i];
    for (std::size_t j = 0; j < ny; ++j) {
      const std::int64_t s = xi + y[j];
      c.c0 += s == v0;
      c.c1 += s == v1;
    }
  }
  return c;
}

struct Vtable {
  Counts (*pair_diff)(const std::int64_t*, std::size_t, const std::int64_t*,
                      std::size_t);
  Counts (*grid_sum)(const std::int64_t*, std::size_t, const std::int64_t*,
                     std::size_t);
  MatchCounts (*grid_match)(const std::int64_t*, std::size_t,
                            const std::int64_t*, std::size_t, std::int64_t,
                            std::int64_t);
};

constexpr Vtable kScalar{pair_diff_scalar, grid_sum_scalar, grid_match_scalar};

bool avx2_supported() {
#if defined(STEINER_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

}  // namespace

#if defined(STEINER_HAVE_AVX2)
namespace detail {
Counts pair_diff_avx2(const std::int64_t*, std::size_t, const std::int64_t*,
                      std::size_t);
Counts grid_sum_avx2(const std::int64_t*, std::size_t, const std::int64_t*,
                     std::size_t);
MatchCounts grid_match_avx2(const std::int64_t*, std::size_t,
                            const std::int64_t*, std::size_t, std::int64_t,
                            std::int64_t);
}  // namespace detail
#endif

namespace {

#if defined(STEINER_HAVE_AVX2)
constexpr Vtable kAvx2{detail::pair_diff_avx2, detail::grid_sum_avx2,
                       detail::grid_match_avx2};
#endif

std::atomic<const Vtable*> g_vtable{nullptr};
std::atomic<Backend> g_backend{Backend::Scalar};

const Vtable* select_auto() {
#if defined(STEINER_HAVE_AVX2)
  if (avx2_supported()) {
    g_backend.store(Backend::Avx2, std::memory_order_relaxed);
    return &kAvx2;
  }
#endif
  g_backend.store(Backend::Scalar, std::memory_order_relaxed);
  return &kScalar;
}

const Vtable* vtable() {
  const Vtable* v = g_vtable.load(std::memory_order_acquire);
  if (v) return v;
  v = select_auto();
  g_vtable.store(v, std::memory_order_release);
  return v;
}

}  // namespace

Counts pair_diff(const std::int64_t* x, std::size_t nx, const std::int64_t* y,
                 std::size_t ny) {
  return vtable()->pair_diff(x, nx, y, ny);
}

Counts grid_sum(const std::int64_t* x, std::size_t nx, const std::int64_t* y,
                std::size_t ny) {
  return vtable()->grid_sum(x, nx, y, ny);
}

MatchCounts grid_match(const std::int64_t* x, std::size_t nx,
                       const std::int64_t* y, std::size_t ny, std::int64_t v0,
                       std::int64_t v1) {
  return vtable()->grid_match(x, nx, y, ny, v0, v1);
}

Backend active_backend() {
  vtable();  // force selection
  return g_backend.load(std::memory_order_relaxed);
}

std::string backend_name(Backend b) {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

bool force_backend(Backend b) {
  if (b == Backend::Scalar) {
    g_backend.store(Backend::Scalar, std::memory_order_relaxed);
    g_vtable.store(&kScalar, std::memory_order_release);
    return true;
  }
#if defined(STEINER_HAVE_AVX2)
  if (avx2_supported()) {
    g_backend.store(Backend::Avx2, std::memory_order_relaxed);
    g_vtable.store(&kAvx2, std::memory_order_release);
    return true;
  }
#endif
  return false;
}

void reset_backend() { g_vtable.store(nullptr, std::memory_order_release); }

}  // namespace steiner::kernels
