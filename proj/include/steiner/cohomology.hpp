#pragma once

#include <string>
#include <vector>

#include "steiner/weights.hpp"

namespace steiner {

// Parameters of the moduli space M_{n,m,2}. The duality
// M_{n,m,2} ~ M_{n,2n-2-m,2} normalizes m below n into the band
// n <= m <= 2n-1; parameters that cannot be normalized are rejected.
struct ModuliParams {
  int n = 0, m = 0;

  static ModuliParams make(int n, int m);

  int t() const { return (m + 1) / 2; }
  int jm() const { return (m + 3) / 2; }  // top stratum index j(m)
  long long dim() const {
    const long long w = m + 2;
    return 2 * w * (n + 1) - w * w - 3;
  }
};

// Diagonal Hodge numbers h^{p,p}(M_l) of the quotient of l points on the
// line, p = 0..l-3: partial binomial sums sum_{j<=min(p,l-3-p)} C(l-1, j).
// l must be odd and >= 3.
std::vector<long long> hodge_Ml(int l);
long long euler_Ml(int l);

// Bialynicki-Birula assembly: every type-1 point adds 1 at h[n(A)], every
// type-2 component adds hodge_Ml(l) shifted by n(A). Type-1 enumeration is
// chunked across `jobs` workers; partial sums merge by addition, so the
// result is independent of the partition. `ok` is false when the sign
// convention is incoherent somewhere (a calibration probe, never the
// calibrated convention) with the first reason in `reject`.
struct Assembly {
  std::vector<long long> hodge;
  bool ok = false;
  std::string reject;
};

Assembly assemble_hodge(const ModuliParams& params, const SignConvention& conv,
                        int jobs);

// b_{2p} = h^{p,p}, odd Betti numbers zero: length 2*dim+1.
std::vector<long long> betti_from_hodge(const std::vector<long long>& hodge);

// Closed-form Euler characteristic:
//   C(n+1,2) C(n,t)^2 + sum_{d>=1} C(n+1, t-d) C(n+1-t+d, 2d+1) e(M_{2d+1}).
long long euler_formula(const ModuliParams& params);

// Independent census route: #type-1 points + sum of e(M_l) over type-2
// components, by enumeration.
long long census_euler(const ModuliParams& params);

// Codimension (j+m-n)(j-1) - 1 of the semistable stratum S^j, 2 <= j < j(m).
long long strata_codim(const ModuliParams& params, int j);

// Dimension (n - m/2)(m/2 + 1) of the strictly-semistable boundary for even
// m (the symmetric square of a Grassmannian); throws for odd m, where the
// boundary is empty.
long long boundary_dim_even_m(int n, int m);

}  // namespace steiner
