#include "steiner/cohomology.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "steiner/parallel.hpp"
#include "steiner/rational.hpp"
#include "steiner/stability.hpp"

namespace steiner {

ModuliParams ModuliParams::make(int n, int m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("moduli parameters: need n >= 1, m >= 1");
  if (m < n) m = dual_m(n, m);
  if (m < n || m > 2 * n - 1)
    throw std::invalid_argument(
        "moduli parameters: no dual representative with n <= m <= 2n-1");
  return ModuliParams{n, m};
}

std::vector<long long> hodge_Ml(int l) {
  if (l < 3 || l % 2 == 0)
    throw std::invalid_argument("hodge numbers of M_l: l must be odd, >= 3");
  std::vector<long long> h(l - 2);
  for (int p = 0; p <= l - 3; ++p) {
    Int sum = 0;
    const int top = std::min(p, l - 3 - p);
    for (int j = 0; j <= top; ++j) sum += binomial(l - 1, j);
    h[p] = to_long(sum);
  }
  return h;
}

long long euler_Ml(int l) {
  long long e = 0;
  for (long long h : hodge_Ml(l)) e += h;
  return e;
}

namespace {

void require_odd_m(const ModuliParams& params) {
  if (params.m % 2 == 0)
    throw std::invalid_argument(
        "cohomology: only odd m is covered (even m has a strictly semistable "
        "boundary)");
}

struct RejectSink {
  std::atomic<bool> hit{false};
  std::mutex mu;
  std::string first;

  void report(const std::string& why) {
    if (hit.exchange(true)) return;
    std::lock_guard<std::mutex> lock(mu);
    if (first.empty()) first = why;
  }
};

}  // namespace

Assembly assemble_hodge(const ModuliParams& params, const SignConvention& conv,
                        int jobs) {
  require_odd_m(params);
  const int n = params.n, m = params.m;
  const long long dim = params.dim();
  Assembly out;
  out.hodge.assign(dim + 1, 0);

  RejectSink sink;
  std::mutex merge_mu;

  const std::uint64_t total1 = count_type1(n, m);
  run_chunks(total1, jobs, [&](int, std::uint64_t begin, std::uint64_t end) {
    std::vector<long long> local(dim + 1, 0);
    iterate_type1_range(n, m, begin, end, [&](const FixedPointType1& p) {
      if (sink.hit.load(std::memory_order_relaxed)) return;
      const auto counts = tangent_counts(solve_weights(FixedPoint(p)), conv);
      if (!counts || counts->zero_ext != 0 || counts->n() < 0 ||
          counts->n() > dim) {
        sink.report("type-1 point " + canonical_key(FixedPoint(p)));
        return;
      }
      ++local[counts->n()];
    });
    std::lock_guard<std::mutex> lock(merge_mu);
    for (long long p = 0; p <= dim; ++p) out.hodge[p] += local[p];
  });

  enum_type2(n, m, [&](const FixedPointType2& p) {
    if (sink.hit.load(std::memory_order_relaxed)) return;
    const auto counts = tangent_counts(solve_weights(FixedPoint(p)), conv);
    const int l = p.l();
    if (!counts || counts->zero_ext != l - 3 || counts->n() < 0 ||
        counts->n() + (l - 3) > dim) {
      sink.report("type-2 component " + canonical_key(FixedPoint(p)));
      return;
    }
    const std::vector<long long> h = hodge_Ml(l);
    for (int q = 0; q < l - 2; ++q) out.hodge[counts->n() + q] += h[q];
  });

  if (sink.hit.load()) {
    out.ok = false;
    out.reject = "sign convention " + conv.str() + " incoherent at " +
                 sink.first;
    out.hodge.clear();
  } else {
    out.ok = true;
  }
  return out;
}

std::vector<long long> betti_from_hodge(const std::vector<long long>& hodge) {
  if (hodge.empty()) throw std::invalid_argument("empty Hodge vector");
  std::vector<long long> b(2 * hodge.size() - 1, 0);
  for (std::size_t p = 0; p < hodge.size(); ++p) b[2 * p] = hodge[p];
  return b;
}

long long euler_formula(const ModuliParams& params) {
  require_odd_m(params);
  const int n = params.n, t = params.t();
  Int e = binomial(n + 1, 2) * binomial(n, t) * binomial(n, t);
  for (int d = 1; d <= t; ++d)
    e += binomial(n + 1, t - d) * binomial(n + 1 - t + d, 2 * d + 1) *
         Int(static_cast<long>(euler_Ml(2 * d + 1)));
  return to_long(e);
}

long long census_euler(const ModuliParams& params) {
  require_odd_m(params);
  long long e = static_cast<long long>(count_type1(params.n, params.m));
  enum_type2(params.n, params.m,
             [&](const FixedPointType2& p) { e += euler_Ml(p.l()); });
  return e;
}

long long strata_codim(const ModuliParams& params, int j) {
  if (j < 2 || j >= params.jm()) {
    std::ostringstream os;
    os << "stratum index out of range: need 2 <= j < " << params.jm();
    throw std::out_of_range(os.str());
  }
  return static_cast<long long>(j + params.m - params.n) * (j - 1) - 1;
}

long long boundary_dim_even_m(int n, int m) {
  if (m % 2 != 0)
    throw std::invalid_argument(
        "strictly semistable boundary is empty for odd m");
  if (n < 1 || m < 1 || m > 2 * n)
    throw std::invalid_argument("boundary dimension: parameters out of range");
  const long long half = m / 2;
  return (n - half) * (half + 1);
}

}  // namespace steiner
