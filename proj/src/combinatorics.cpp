#include "steiner/combinatorics.hpp"

#include <stdexcept>

namespace steiner {

bool first_combination(std::vector<int>& c, int n, int t) {
  if (t < 0 || t > n) return false;
  c.resize(t);
  for (int i = 0; i < t; i++) c[i] = i;
  return true;
}

bool next_combination(std::vector<int>& c, int n) {
  int t = static_cast<int>(c.size());
  for (int i = t - 1; i >= 0; i--) {
    if (c[i] < n - t + i) {
      c[i]++;
      for (int j = i + 1; j < t; j++) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t combination_count_u64(int n, int t) {
  Int c = binomial(n, t);
  if (!c.fits_ulong_p()) throw std::overflow_error("binomial too large");
  return c.get_ui();
}

std::vector<int> unrank_combination(int n, int t, std::uint64_t rank) {
  // combinatorial number system, lex order: pick the smallest feasible
  // element, charging C(n - v - 1, t - k - 1) subsets for each value skipped
  std::vector<int> c(t);
  int v = 0;
  for (int k = 0; k < t; k++) {
    for (;; v++) {
      std::uint64_t block = combination_count_u64(n - v - 1, t - k - 1);
      if (rank < block) break;
      rank -= block;
    }
    c[k] = v++;
  }
  return c;
}

}  // namespace steiner
