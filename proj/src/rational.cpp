#include "steiner/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace steiner {

Int binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n < 0");
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

std::optional<Rational> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  // strict shape check first; mpq_set_str is lenient about some junk
  size_t i = 0;
  auto digits = [&](size_t& p) {
    size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) p++;
    return p > start;
  };
  if (s[i] == '+' || s[i] == '-') i++;
  if (!digits(i)) return std::nullopt;
  if (i < s.size()) {
    if (s[i] != '/') return std::nullopt;
    i++;
    size_t den_start = i;
    if (!digits(i) || i != s.size()) return std::nullopt;
    if (s.find_first_not_of('0', den_start) == std::string::npos)
      return std::nullopt;  // q = 0
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::string rat_str(const Rational& q) { return q.get_str(); }

long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("Int does not fit in long");
  return z.get_si();
}

}  // namespace steiner
