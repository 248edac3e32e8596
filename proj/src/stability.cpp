#include "steiner/stability.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace steiner {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Stable:
      return "stable";
    case Verdict::StrictlySemistable:
      return "strictly-semistable";
    case Verdict::Unstable:
      return "unstable";
  }
  return "?";
}

std::vector<Violation> validate(const LinearMatrix& A) {
  A.check_shape();
  std::vector<Violation> out;
  if (A.m > A.k * A.n)
    out.push_back({"params-empty-ss",
                   "m > k*n: the semistable locus of X is empty"});
  if (flattening_w(A).rank() < A.m + A.k)
    out.push_back({"not-injective-w",
                   "columns are dependent: A(W) has dimension < m+k"});
  if (flattening_i(A).rank() < A.k)
    out.push_back({"not-injective-i",
                   "a row combination vanishes identically"});
  return out;
}

namespace {

// Shared k=2 pencil analysis. s(w) = (m+2) - rank of the member at w, so
// s_max = (m+2) - min rank; the minimum is the generic rank unless the drop
// locus is nonempty.
struct PencilAnalysis {
  int generic_rank = 0;
  std::vector<DropPoint> drops;
  int min_rank = 0;
};

PencilAnalysis analyze_pencil(const LinearMatrix& A) {
  Pencil p = pencil_of(A);
  PencilAnalysis an;
  an.generic_rank = pencil_generic_rank(p.F, p.G);
  an.drops = pencil_drop_locus(p.F, p.G);
  an.min_rank = an.generic_rank;
  for (const auto& d : an.drops) an.min_rank = std::min(an.min_rank, d.rank);
  return an;
}

}  // namespace

StabilityReport stability_k2(const LinearMatrix& A) {
  if (A.k != 2) throw std::invalid_argument("stability_k2: k != 2");
  StabilityReport rep;
  rep.violations = validate(A);
  if (!rep.violations.empty()) {
    // not a point of the problem (or the problem is empty): no pencil
    // analysis, the verdict short-circuits
    rep.verdict = Verdict::Unstable;
    return rep;
  }
  PencilAnalysis an = analyze_pencil(A);
  const int s_max = (A.m + 2) - an.min_rank;
  rep.s_max = s_max;

  if (2 * s_max > A.m + 2)
    rep.verdict = Verdict::Unstable;
  else if (2 * s_max == A.m + 2)
    rep.verdict = Verdict::StrictlySemistable;
  else
    rep.verdict = Verdict::Stable;

  if (!an.drops.empty()) {
    // most degenerate drop; ties resolved by drop-locus order
    const DropPoint* best = &an.drops.front();
    for (const auto& d : an.drops)
      if (d.rank < best->rank) best = &d;
    rep.witness = Witness{best->where, (A.m + 2) - best->rank};
  } else if (rep.verdict != Verdict::Stable) {
    // rank is constant on all of P^1, every point attains the extremum
    rep.witness =
        Witness{PencilPoint::make(0, 1), (A.m + 2) - an.generic_rank};
  }
  return rep;
}

int degeneracy_dim_k2(const LinearMatrix& A) {
  if (A.k != 2) throw std::invalid_argument("degeneracy_dim_k2: k != 2");
  A.check_shape();
  if (flattening_w(A).rank() < A.m + 2)
    throw std::domain_error(
        "degeneracy_dim_k2: A is not injective on W; D(A) is not the "
        "degeneracy locus of a sheaf map");
  Pencil p = pencil_of(A);
  PencilAnalysis an = analyze_pencil(A);

  // D(A) = union over w of P(ker M(w)). Three sources:
  //  - P(common kernel), dimension k0 - 1;
  //  - the swept part: when the generic kernel strictly contains the common
  //    one it moves with w, sweeping dimension kappa_gen = (n+1) - generic
  //    rank (projectivized kernel dim + 1 parameter);
  //  - drop points contribute their own projectivized kernels.
  const int k0 = common_kernel_dim(p.F, p.G);
  const int kappa_gen = (A.n + 1) - an.generic_rank;
  int dim = k0 - 1;
  if (kappa_gen > k0) dim = std::max(dim, kappa_gen);
  for (const auto& d : an.drops) dim = std::max(dim, A.n - d.rank);
  return dim;
}

std::pair<int, int> strata_indices(const LinearMatrix& A) {
  StabilityReport rep = stability_k2(A);
  if (rep.verdict == Verdict::Unstable)
    throw std::domain_error("strata_indices: A is not semistable");
  int j_s = std::max(1, *rep.s_max - (A.m - A.n));
  int j_tilde = std::max(1, degeneracy_dim_k2(A) + 2);
  return {j_s, j_tilde};
}

BoundaryPair boundary_point_even_m(const LinearMatrix& A) {
  if (A.k != 2) throw std::invalid_argument("boundary_point_even_m: k != 2");
  A.check_shape();
  if (A.m % 2 != 0)
    throw std::domain_error("boundary_point_even_m: m must be even");
  const int w = A.m / 2 + 1;  // block width
  for (int j = 0; j < w; j++)
    if (!A.entry_is_zero(0, j))
      throw std::domain_error(
          "boundary_point_even_m: input is not in block form (this "
          "operation does not compute limits)");
  for (int j = w; j < A.m + 2; j++)
    if (!A.entry_is_zero(1, j))
      throw std::domain_error(
          "boundary_point_even_m: input is not in block form (this "
          "operation does not compute limits)");

  QMatrix fb(w, A.n + 1), gb(w, A.n + 1);
  for (int j = 0; j < w; j++)
    for (int l = 0; l <= A.n; l++) {
      fb.at(j, l) = A.entries[0][w + j][l];
      gb.at(j, l) = A.entries[1][j][l];
    }
  int rf = 0, rg = 0;
  QMatrix ef = fb.rref(&rf), eg = gb.rref(&rg);
  if (rf != w || rg != w)
    throw std::domain_error(
        "boundary_point_even_m: blocks do not span (m/2+1)-dimensional "
        "spaces of forms");

  // unordered pair: fix a canonical order (row-major lexicographic)
  auto less = [](const QMatrix& a, const QMatrix& b) {
    for (int i = 0; i < a.rows(); i++)
      for (int j = 0; j < a.cols(); j++) {
        if (a.at(i, j) != b.at(i, j)) return a.at(i, j) < b.at(i, j);
      }
    return false;
  };
  if (less(eg, ef)) std::swap(ef, eg);
  return {ef, eg};
}

std::vector<int> leading_zero_counts(const LinearMatrix& A) {
  A.check_shape();
  std::vector<int> counts;
  for (int i = 0; i < A.k; i++) {
    int c = 0;
    while (c < A.m + A.k && A.entry_is_zero(i, c)) c++;
    counts.push_back(c);
  }
  std::sort(counts.rbegin(), counts.rend());
  return counts;
}

CertificateCheck check_instability_certificate(
    const InstabilityCertificate& cert) {
  if (cert.k < 1 || cert.m < 1)
    throw std::invalid_argument("certificate: k and m must be positive");
  if (static_cast<int>(cert.leading_zeros.size()) != cert.k)
    throw std::invalid_argument("certificate: need exactly k counts");
  if (cert.s < 0 || cert.s >= cert.k)
    throw std::invalid_argument("certificate: s out of range");
  for (size_t i = 0; i < cert.leading_zeros.size(); i++) {
    int v = cert.leading_zeros[i];
    if (v < 0 || v > cert.m + cert.k)
      throw std::invalid_argument("certificate: count out of range");
    if (i > 0 && cert.leading_zeros[i - 1] < v)
      throw std::invalid_argument("certificate: counts must be nonincreasing");
  }
  const long is = cert.leading_zeros[cert.s];
  const long ik1 = cert.leading_zeros[cert.k - 1];
  const long bound = static_cast<long>(cert.m + cert.k) * (cert.k - 1 - cert.s);
  CertificateCheck out;
  out.not_stable =
      (cert.s != cert.k - 1 && cert.k * is >= bound) || ik1 > 0;
  out.not_semistable = cert.k * is > bound;  // s = k-1 gives i_{k-1} > 0
  return out;
}

int dual_m(int n, int m) { return 2 * n - 2 - m; }

}  // namespace steiner
