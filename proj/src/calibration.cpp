#include "steiner/calibration.hpp"

#include <fstream>
#include <stdexcept>

#ifndef STEINER_VERSION_STR
#define STEINER_VERSION_STR "0.0.0"
#endif

namespace steiner {

const std::vector<GoldenRow>& golden_table() {
  static const std::vector<GoldenRow> table = {
      {2, {1, 1, 1, 1, 1, 1}},
      {3, {1, 1, 3, 4, 7, 8, 10, 8, 7, 4, 3, 1, 1}},
      {5, {1, 1, 3, 4, 8, 11, 18, 24, 35, 45, 61, 74, 93, 106, 122, 128, 134,
           128, 122}},
      {7, {1, 1, 3, 4, 8, 11, 19, 26, 40, 54, 77, 100, 134, 165, 205, 242,
           289, 334, 400}},
      {9, {1, 1, 3, 4, 8, 11, 19, 26, 41, 56, 82, 110, 154, 202, 273, 352,
           461, 595, 750}},
  };
  return table;
}

std::optional<std::vector<long long>> golden_hodge_prefix(int n) {
  for (const GoldenRow& row : golden_table())
    if (row.n == n) return row.hodge_prefix;
  return std::nullopt;
}

std::vector<long long> calibration_hodge(int n) {
  const auto prefix = golden_hodge_prefix(n);
  if (!prefix) throw std::invalid_argument("no golden row for this n");
  const ModuliParams params = ModuliParams::make(n, n);
  const std::size_t full = static_cast<std::size_t>(params.dim()) + 1;
  if (prefix->size() == full) return *prefix;
  if (n != 5)
    throw std::invalid_argument(
        "calibration reference rows are only n = 3 and n = 5");
  // Duality completion h_p = h_{dim-p}; the known prefix must agree with its
  // own mirror where the two overlap.
  std::vector<long long> row(full, 0);
  for (std::size_t p = 0; p < prefix->size(); ++p) {
    const std::size_t q = full - 1 - p;
    row[p] = (*prefix)[p];
    if (q < prefix->size() && (*prefix)[q] != (*prefix)[p])
      throw std::logic_error("golden n=5 prefix is not duality-consistent");
    row[q] = (*prefix)[p];
  }
  return row;
}

SignConvention calibrate_against(const std::vector<long long>& golden3,
                                 const std::vector<long long>& golden5,
                                 int jobs) {
  const ModuliParams p3 = ModuliParams::make(3, 3);
  const ModuliParams p5 = ModuliParams::make(5, 5);
  for (int ix = 0; ix < 16; ++ix) {
    const SignConvention conv = SignConvention::from_index(ix);
    const Assembly a3 = assemble_hodge(p3, conv, jobs);
    if (!a3.ok || a3.hodge != golden3) continue;
    const Assembly a5 = assemble_hodge(p5, conv, jobs);
    if (!a5.ok || a5.hodge != golden5) continue;
    return conv;
  }
  throw std::runtime_error(
      "calibration failed: no sign convention reproduces the reference Betti "
      "rows");
}

SignConvention calibrate(int jobs) {
  return calibrate_against(calibration_hodge(3), calibration_hodge(5), jobs);
}

std::string calibration_cache_file(const std::string& dir) {
  return dir + "/calibration-v" + STEINER_VERSION_STR + ".txt";
}

std::optional<SignConvention> load_cached_convention(const std::string& dir) {
  std::ifstream in(calibration_cache_file(dir));
  if (!in) return std::nullopt;
  std::string s;
  in >> s;
  return SignConvention::parse(s);
}

void store_cached_convention(const std::string& dir,
                             const SignConvention& conv) {
  std::ofstream out(calibration_cache_file(dir), std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot write calibration cache in " + dir);
  out << conv.str() << '\n';
}

SignConvention resolve_convention(const std::optional<std::string>& explicit_s,
                                  const std::optional<std::string>& cache_dir,
                                  int jobs) {
  if (explicit_s) {
    const auto conv = SignConvention::parse(*explicit_s);
    if (!conv)
      throw std::invalid_argument(
          "bad convention string (want four of '+'/'-'): " + *explicit_s);
    return *conv;
  }
  if (cache_dir) {
    if (const auto cached = load_cached_convention(*cache_dir)) return *cached;
    const SignConvention conv = calibrate(jobs);
    store_cached_convention(*cache_dir, conv);
    return conv;
  }
  return calibrate(jobs);
}

}  // namespace steiner
