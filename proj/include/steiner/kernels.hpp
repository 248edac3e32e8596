#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace steiner::kernels {

// Hot loops of the tangent-weight census. The weight arrays are tiny
// (tens of entries) but the loops run once per fixed point, and there are
// ~1.4e7 points at n = 11, so the inner pair scans dominate the runtime.
// A scalar reference implementation is always available; an AVX2 variant is
// selected at startup when the CPU supports it. Both must agree bit-exactly
// (they count integers), which the test suite asserts on random inputs.

struct Counts {
  long long pos = 0;
  long long zero = 0;
  bool operator==(const Counts&) const = default;
};

struct MatchCounts {
  long long c0 = 0;  // multiplicity of v0 among the pair sums
  long long c1 = 0;  // multiplicity of v1
  bool operator==(const MatchCounts&) const = default;
};

// Positive / zero counts over the nx*ny differences {x[i] - y[j]}.
Counts pair_diff(const std::int64_t* x, std::size_t nx, const std::int64_t* y,
                 std::size_t ny);

// Positive / zero counts over the nx*ny sums {x[i] + y[j]}.
Counts grid_sum(const std::int64_t* x, std::size_t nx, const std::int64_t* y,
                std::size_t ny);

// Multiplicities of the two target values among the sums {x[i] + y[j]}.
// When v0 == v1 both counters report the same (total) multiplicity.
MatchCounts grid_match(const std::int64_t* x, std::size_t nx,
                       const std::int64_t* y, std::size_t ny, std::int64_t v0,
                       std::int64_t v1);

enum class Backend { Scalar, Avx2 };

Backend active_backend();
std::string backend_name(Backend b);

// Test hook: pin a backend. Returns false (and leaves the selection alone)
// when the host cannot run it. reset_backend() restores auto-detection.
bool force_backend(Backend b);
void reset_backend();

}  // namespace steiner::kernels
