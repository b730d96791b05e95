#pragma once

// Multivariate polynomials with rational coefficients. Used as a symbolic
// exponent ring: the B^_3 arithmetic is generic in its exponent type, so the
// same code runs on integers and on polynomials in (alpha, beta, gamma, delta).

#include "hbraid/integer.hpp"

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hbraid {

class Polynomial {
 public:
  /// Exponent vector without trailing zeros.
  using Monomial = std::vector<int>;
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const Integer& c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_[{}] = c;
  }

  static Polynomial variable(int index) {
    Monomial m(index + 1, 0);
    m[index] = 1;
    Polynomial p;
    p.terms_[m] = 1;
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    Monomial key = m;
    trim(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  Polynomial operator-() const {
    Polynomial p;
    for (const auto& [m, c] : terms_) p.terms_[m] = -c;
    return p;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial p;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(std::max(ma.size(), mb.size()), 0);
        for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
        for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
        p.add(m, ca * cb);
      }
    return p;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Rational evaluate(std::span<const Rational> values) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (int e = 0; e < m[i]; ++e) term *= values[i];
      total += term;
    }
    return total;
  }

  /// Replaces variable `index` by `value`.
  Polynomial substitute(int index, const Polynomial& value) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      int power = 0;
      if (index < static_cast<int>(rest.size())) {
        power = rest[index];
        rest[index] = 0;
      }
      trim(rest);
      Polynomial term;
      term.terms_[rest] = c;
      for (int e = 0; e < power; ++e) term *= value;
      out += term;
    }
    return out;
  }

  /// True when every coefficient is an integer.
  bool has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return boost::multiprecision::denominator(kv.second) == 1; });
  }

  /// True when the polynomial has integer coefficients that are all divisible
  /// by `modulus`, i.e. it vanishes mod `modulus` at every integer point.
  bool coefficients_divisible_by(const Integer& modulus) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) {
      return boost::multiprecision::denominator(kv.second) == 1 &&
             boost::multiprecision::numerator(kv.second) % modulus == 0;
    });
  }

  std::string to_string(std::span<const std::string> names = {}) const {
    if (terms_.empty()) return "0";
    std::string s;
    // highest total degree first
    std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      int da = 0, db = 0;
      for (int e : a.first) da += e;
      for (int e : b.first) db += e;
      return da != db ? da > db : a.first > b.first;
    });
    for (const auto& [m, c] : ordered) {
      std::string mono;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += i < names.size() ? names[i] : "v" + std::to_string(i);
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      Rational mag = c < 0 ? Rational(-c) : c;
      std::string coef = hbraid::to_string(mag);
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      if (mono.empty())
        s += coef;
      else
        s += (mag == 1 ? "" : coef + "*") + mono;
    }
    return s;
  }

 private:
  static void trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
  }

  void add(Monomial m, const Rational& c) {
    if (c == 0) return;
    trim(m);
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// m(m-1)/2 as a polynomial.
inline Polynomial binom2(const Polynomial& m) { return m * (m - Polynomial(1)) * Polynomial(Rational(1, 2)); }

}  // namespace hbraid
