#pragma once

// Integer Laurent polynomials in t, plus the dense rational polynomials used
// for gcd and root analysis.

#include "hbraid/integer.hpp"

#include <algorithm>
#include <cstdlib>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hbraid {

class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& c) {                  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_[0] = c;
  }
  /// From (exponent, coefficient) pairs.
  LaurentPoly(std::initializer_list<std::pair<int, int>> terms) {
    for (const auto& [k, c] : terms) add(k, c);
  }

  static LaurentPoly monomial(const Integer& c, int k) {
    LaurentPoly p;
    p.add(k, c);
    return p;
  }
  static LaurentPoly t(int k = 1) { return monomial(1, k); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  Integer coefficient(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Units of Z[t, t^-1] are +-t^k.
  bool is_unit() const {
    return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LaurentPoly operator-() const {
    LaurentPoly p;
    for (const auto& [k, c] : terms_) p.terms_[k] = -c;
    return p;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) p.add(ka + kb, ca * cb);
    return p;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly pow(int e) const {
    if (e < 0) throw Error("negative powers of a Laurent polynomial are only defined for units");
    LaurentPoly out = 1;
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  Rational evaluate(const Rational& t0) const {
    if (t0 == 0 && !terms_.empty() && terms_.begin()->first < 0) throw Error("cannot evaluate t^-k at t = 0");
    Rational total = 0;
    for (const auto& [k, c] : terms_) {
      Rational x = 1;
      const Rational base = k < 0 ? Rational(1) / t0 : t0;
      for (int i = 0; i < std::abs(k); ++i) x *= base;
      total += x * c;
    }
    return total;
  }

  /// Sparse c*t^k terms in ascending k.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      Integer mag = c < 0 ? Integer(-c) : c;
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      if (k == 0) {
        s += hbraid::to_string(mag);
        continue;
      }
      if (mag != 1) s += hbraid::to_string(mag) + "*";
      s += k == 1 ? "t" : "t^" + std::to_string(k);
    }
    return s;
  }

 private:
  void add(int k, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// p = u * q for a unit u = +-t^k.
inline bool equal_up_to_unit(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  const int shift = p.min_degree() - q.min_degree();
  for (const Integer& sign : {Integer(1), Integer(-1)})
    if (p == LaurentPoly::monomial(sign, shift) * q) return true;
  return false;
}

/// Dense polynomial over Q, coefficients in ascending degree, no trailing zeros.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// Drops the power of t so the result is an honest polynomial.
  static RationalPoly from_laurent(const LaurentPoly& p) {
    std::vector<Rational> c;
    if (!p.is_zero()) {
      c.resize(p.max_degree() - p.min_degree() + 1);
      for (const auto& [k, v] : p.terms()) c[k - p.min_degree()] = v;
    }
    return RationalPoly(std::move(c));
  }

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }

  RationalPoly monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> c = c_;
    for (auto& x : c) x /= c_.back();
    return RationalPoly(std::move(c));
  }

  Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Quotient and remainder.
  std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& d) const {
    if (d.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rational> r = c_;
    if (degree() < d.degree()) return {RationalPoly(), *this};
    std::vector<Rational> q(degree() - d.degree() + 1);
    for (int i = degree(); i >= d.degree(); --i) {
      Rational f = r[i] / d.leading();
      q[i - d.degree()] = f;
      for (int j = 0; j <= d.degree(); ++j) r[i - d.degree() + j] -= f * d.c_[j];
    }
    return {RationalPoly(std::move(q)), RationalPoly(std::move(r))};
  }

  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RationalPoly(std::move(c));
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      const Rational& c = c_[k];
      if (c == 0) continue;
      Rational mag = c < 0 ? Rational(-c) : c;
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      if (k == 0 || mag != 1) s += hbraid::to_string(mag) + (k == 0 ? "" : "*");
      if (k > 0) s += k == 1 ? "t" : "t^" + std::to_string(k);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic gcd over Q.
inline RationalPoly gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Largest m with (t - root)^m dividing p; p must be nonzero.
inline int root_multiplicity(RationalPoly p, const Rational& root) {
  const RationalPoly linear({-root, Rational(1)});
  int m = 0;
  while (!p.is_zero() && p.evaluate(root) == 0) {
    p = p.divmod(linear).first;
    ++m;
  }
  return m;
}

namespace detail {

inline std::vector<Integer> positive_divisors(Integer x) {
  if (x < 0) x = -x;
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= x; ++d)
    if (x % d == 0) {
      out.push_back(d);
      if (d * d != x) out.push_back(x / d);
    }
  return out;
}

}  // namespace detail

/// Distinct rational roots, ascending, by the rational root test.
inline std::vector<Rational> rational_roots(const RationalPoly& p) {
  if (p.is_zero()) throw Error("the zero polynomial has every root");
  // clear denominators
  Integer lcm = 1;
  for (const auto& c : p.coefficients()) {
    Integer d = boost::multiprecision::denominator(c);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<Integer> ints;
  for (const auto& c : p.coefficients()) ints.push_back(Integer(boost::multiprecision::numerator(Rational(c * lcm))));
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  for (const auto& num : detail::positive_divisors(ints[low]))
    for (const auto& den : detail::positive_divisors(ints.back()))
      for (int sign : {1, -1}) {
        Rational r(Integer(sign * num), den);
        if (p.evaluate(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace hbraid
