#pragma once

#include <string>
#include <utility>
#include <vector>

#include "steiner/rational.hpp"

namespace steiner {

// Univariate polynomial over Q. Coefficients are stored lowest degree first
// and kept normalized (no trailing zeros); the zero polynomial has an empty
// coefficient vector and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& c);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly x();                       // the monomial x
  static Poly linear_root(const Rational& r);  // x - r

  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  // coefficient of x^i; 0 outside the stored range
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& v) const;
  Rational lead() const;  // throws on the zero polynomial

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  // Field division with remainder: a = q*b + r, deg r < deg b.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  Poly divided_by(const Poly& b) const;  // throws unless division is exact

  Poly derivative() const;
  Poly monic() const;
  static Poly gcd(Poly a, Poly b);  // monic (or zero)
  Poly squarefree_part() const;     // p / gcd(p, p'), monic

  // Coefficients scaled to content-free integers (same roots).
  std::vector<Int> primitive_int_coeffs() const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// All rational roots with multiplicities, sorted increasing.
std::vector<std::pair<Rational, int>> rational_roots(const Poly& p);

}  // namespace steiner
