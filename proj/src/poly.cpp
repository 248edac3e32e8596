#include "steiner/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "steiner/intfactor.hpp"

namespace steiner {

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return Poly({Rational(0), Rational(1)}); }

Poly Poly::linear_root(const Rational& r) {
  return Poly({-r, Rational(1)});
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly::coeff(int i) const {
  static const Rational zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

Rational Poly::eval(const Rational& v) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

Rational Poly::lead() const {
  if (is_zero()) throw std::domain_error("lead of zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < r.c_.size(); i++)
    r.c_[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  Poly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); i++)
    for (size_t j = 0; j < o.c_.size(); j++) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

Poly Poly::operator*(const Rational& s) const {
  if (s == 0) return Poly();
  Poly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  q = Poly();
  r = a;
  const Rational lb = b.lead();
  const int db = b.deg();
  while (!r.is_zero() && r.deg() >= db) {
    int shift = r.deg() - db;
    Rational f = r.lead() / lb;
    // r -= f * x^shift * b, q += f * x^shift
    if (q.c_.size() < static_cast<size_t>(shift + 1))
      q.c_.resize(shift + 1, Rational(0));
    q.c_[shift] += f;
    for (int i = 0; i <= db; i++) r.c_[i + shift] -= f * b.c_[i];
    r.trim();
  }
  q.trim();
}

Poly Poly::divided_by(const Poly& b) const {
  Poly q, r;
  divmod(*this, b, q, r);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly Poly::derivative() const {
  Poly r;
  for (size_t i = 1; i < c_.size(); i++)
    r.c_.push_back(c_[i] * Rational(static_cast<long>(i)));
  r.trim();
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  return *this * (Rational(1) / lead());
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly Poly::squarefree_part() const {
  if (deg() <= 0) return monic();
  Poly g = gcd(*this, derivative());
  return divided_by(g).monic();
}

std::vector<Int> Poly::primitive_int_coeffs() const {
  std::vector<Int> out;
  if (is_zero()) return out;
  Int l = 1;
  for (const auto& q : c_) {
    Int lc;
    mpz_lcm(lc.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    l = lc;
  }
  out.reserve(c_.size());
  for (const auto& q : c_) out.push_back(Int(q.get_num()) * (l / q.get_den()));
  Int content = 0;
  for (const auto& z : out) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
  if (content > 1)
    for (auto& z : out) z /= content;
  return out;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; i--) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::vector<std::pair<Rational, int>> rational_roots(const Poly& p) {
  std::vector<std::pair<Rational, int>> out;
  if (p.deg() <= 0) return out;
  Poly w = p;

  // root at 0: strip trailing x factors
  int mult0 = 0;
  while (!w.is_zero() && w.coeff(0) == 0) {
    w = w.divided_by(Poly::x());
    mult0++;
  }
  if (mult0 > 0) out.push_back({Rational(0), mult0});

  // candidates p/q with p | trailing and q | leading coefficient of the
  // primitive integer form; classic (p - q) | P(1), (p + q) | P(-1) screens
  std::vector<Int> zc = w.primitive_int_coeffs();
  if (zc.size() >= 2) {
    Int p1 = 0, pm1 = 0;
    for (size_t i = 0; i < zc.size(); i++) {
      p1 += zc[i];
      pm1 += (i % 2 == 0) ? zc[i] : -zc[i];
    }
    std::vector<Int> ps = divisors(zc.front());
    std::vector<Int> qs = divisors(zc.back());
    std::vector<Rational> candidates;
    for (const Int& den : qs)
      for (const Int& num : ps) {
        Int g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (g != 1) continue;
        for (int sign : {1, -1}) {
          Int snum = sign * num;
          if (p1 != 0 && (snum - den) != 0 && p1 % (snum - den) != 0) continue;
          if (pm1 != 0 && (snum + den) != 0 && pm1 % (snum + den) != 0)
            continue;
          candidates.emplace_back(snum, den);
        }
      }
    std::sort(candidates.begin(), candidates.end());
    for (const Rational& r : candidates) {
      int mult = 0;
      while (!w.is_constant() && w.eval(r) == 0) {
        w = w.divided_by(Poly::linear_root(r));
        mult++;
      }
      if (mult > 0) out.push_back({r, mult});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace steiner
