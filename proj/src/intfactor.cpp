#include "steiner/intfactor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace steiner {

namespace {

// Miller-Rabin is deterministic for n < 3.3e24 with these bases.
const unsigned long kMrBases[] = {2,  3,  5,  7,  11, 13,
                                  17, 19, 23, 29, 31, 37};

bool miller_rabin(const Int& n) {
  Int d = n - 1;
  unsigned long r = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    r++;
  }
  for (unsigned long a : kMrBases) {
    if (Int(a) % n == 0) continue;
    Int x;
    Int base(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned long i = 0; i + 1 < r; i++) {
      x = (x * x) % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's cycle variant of Pollard rho, x -> x^2 + c, fixed c sequence.
Int pollard_brent(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; c++) {
    Int x = 2, y = 2, d = 1;
    Int q = 1;
    unsigned long lam = 1;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < lam; i++) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < lam && d == 1) {
        Int ys = y;
        unsigned long lim = std::min<unsigned long>(128, lam - k);
        for (unsigned long i = 0; i < lim; i++) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        if (d == n) {
          // batch overshot a factor; redo one step at a time
          d = 1;
          do {
            ys = (ys * ys + c) % n;
            Int diff = abs(x - ys);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
          } while (d == 1);
          break;
        }
        k += lim;
      }
      lam *= 2;
    }
    if (d != n) return d;
    // cycle collapsed for this c; try the next one
  }
}

void factor_rec(Int n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n]++;
    return;
  }
  Int d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul,
                          29ul, 31ul, 37ul}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  return miller_rabin(n);
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n <= 0) throw std::invalid_argument("factorize: n <= 0");
  std::map<Int, int> acc;
  // strip small primes first; keeps rho off easy inputs
  for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
    if (Int(p) * p > n) break;
    while (n % p == 0) {
      acc[Int(p)]++;
      n /= p;
    }
  }
  if (n > 1) factor_rec(n, acc);
  return {acc.begin(), acc.end()};
}

std::vector<Int> divisors(const Int& n) {
  if (n == 0) throw std::invalid_argument("divisors: n == 0");
  std::vector<Int> divs = {1};
  for (const auto& [p, e] : factorize(abs(n))) {
    size_t base = divs.size();
    Int pk = 1;
    for (int i = 1; i <= e; i++) {
      pk *= p;
      for (size_t j = 0; j < base; j++) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace steiner
