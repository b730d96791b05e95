#pragma once

// Reduced Magnus expansion: x_i -> 1 + X_i into the ring of noncommutative
// polynomials in X_1 .. X_n where every monomial with a repeated variable is
// zero. It is evaluated directly on words and serves as an independent
// distinguisher for the collection engine.

#include "hbraid/free_group.hpp"
#include "hbraid/integer.hpp"
#include "hbraid/reduced_free.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hbraid {

/// A monomial X_{i1} ... X_{ik} with pairwise distinct indices (at most 15).
struct Monomial {
  std::uint64_t code = 0;  // 4 bits per index, first index in the low bits
  std::uint16_t mask = 0;  // bit i set iff X_i occurs
  std::uint8_t length = 0;

  static constexpr int kMaxIndex = 15;

  static Monomial variable(int i) { return Monomial{static_cast<std::uint64_t>(i), static_cast<std::uint16_t>(1u << i), 1}; }

  bool disjoint(const Monomial& o) const { return (mask & o.mask) == 0; }

  Monomial operator*(const Monomial& o) const {
    return Monomial{code | (o.code << (4 * length)), static_cast<std::uint16_t>(mask | o.mask),
                    static_cast<std::uint8_t>(length + o.length)};
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int p = 0; p < length; ++p) out.push_back(static_cast<int>((code >> (4 * p)) & 0xF));
    return out;
  }

  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.length != b.length) return a.length < b.length;
    for (int p = 0; p < a.length; ++p) {
      const auto x = (a.code >> (4 * p)) & 0xF, y = (b.code >> (4 * p)) & 0xF;
      if (x != y) return x < y;
    }
    return false;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.code == b.code && a.length == b.length; }
};

class ReducedTensor {
 public:
  using Terms = std::map<Monomial, Integer>;

  explicit ReducedTensor(int n) : n_(n) {
    if (n < 1 || n > Monomial::kMaxIndex) throw CapacityError("reduced Magnus ring supports 1 <= n <= 15");
  }

  static ReducedTensor one(int n) {
    ReducedTensor t(n);
    t.terms_[Monomial{}] = 1;
    return t;
  }

  /// 1 + s X_i
  static ReducedTensor generator(int n, int i, int s = 1) {
    ReducedTensor t = one(n);
    t.terms_[Monomial::variable(i)] = s;
    return t;
  }

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }

  Integer coefficient(const std::vector<int>& indices) const {
    Monomial m;
    for (int i : indices) m = m * Monomial::variable(i);
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  ReducedTensor& operator+=(const ReducedTensor& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }

  ReducedTensor operator-() const {
    ReducedTensor out(n_);
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
  }

  friend ReducedTensor operator*(const ReducedTensor& a, const ReducedTensor& b) {
    ReducedTensor out(a.n_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        if (ma.disjoint(mb)) out.add(ma * mb, ca * cb);
    return out;
  }

  /// Inverse of a unit 1 + P with P nilpotent: sum_k (-P)^k.
  ReducedTensor inverse() const {
    auto it = terms_.find(Monomial{});
    if (it == terms_.end() || it->second != 1) throw Error("reduced tensor is not a group-like unit");
    ReducedTensor p = *this;
    p.terms_.erase(Monomial{});
    ReducedTensor minus_p = -p;
    ReducedTensor acc = one(n_);
    ReducedTensor power = one(n_);
    for (int k = 1; k <= n_; ++k) {
      power = power * minus_p;
      if (power.terms_.empty()) break;
      acc += power;
    }
    return acc;
  }

  friend bool operator==(const ReducedTensor& a, const ReducedTensor& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  std::string to_string() const {
    std::string s;
    for (const auto& [m, c] : terms_) {
      std::string mono;
      for (int i : m.indices()) mono += "X" + std::to_string(i);
      std::string coef = c.str();
      if (!s.empty()) {
        if (c < 0) {
          s += " - ";
          coef = coef.substr(1);
        } else {
          s += " + ";
        }
      }
      if (mono.empty())
        s += coef;
      else
        s += (coef == "1" ? "" : coef == "-1" ? "-" : coef) + mono;
    }
    return s.empty() ? "0" : s;
  }

 private:
  void add(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int n_;
  Terms terms_;
};

/// Image of a word; x_i -> 1 + X_i, x_i^{-1} -> 1 - X_i.
inline ReducedTensor magnus(std::span<const int> word, int n) {
  ReducedTensor acc = ReducedTensor::one(n);
  for (int k : word) {
    if (k == 0 || std::abs(k) > n) throw Error("letter " + std::to_string(k) + " out of range for n = " + std::to_string(n));
    acc = acc * ReducedTensor::generator(n, std::abs(k), k > 0 ? 1 : -1);
  }
  return acc;
}

inline ReducedTensor magnus(const FreeWord& w, int n) { return magnus(w.letters(), n); }

/// Image of a normal form, built from the bracketing of each basis commutator.
inline ReducedTensor magnus(const KnElement& g) {
  const auto& basis = g.basis();
  const int n = g.n();
  std::vector<ReducedTensor> images;
  images.reserve(basis.size());
  for (int i = 0; i < basis.size(); ++i) {
    const auto& c = basis[i];
    if (c.is_generator()) {
      images.push_back(ReducedTensor::generator(n, c.word[0]));
    } else {
      const auto& a = images[c.left];
      const auto& b = images[c.right];
      images.push_back(a.inverse() * b.inverse() * a * b);
    }
  }
  ReducedTensor acc = ReducedTensor::one(n);
  for (int i = 0; i < basis.size(); ++i) {
    Integer e = g.exponent(i);
    if (e == 0) continue;
    ReducedTensor base = e > 0 ? images[i] : images[i].inverse();
    e = abs(e);
    ReducedTensor p = ReducedTensor::one(n);
    while (e != 0) {
      if ((e & 1) != 0) p = p * base;
      e >>= 1;
      if (e != 0) base = base * base;
    }
    acc = acc * p;
  }
  return acc;
}

/// Raised when collection and the Magnus expansion disagree on equality.
class OracleDisagreement : public Error {
 public:
  using Error::Error;
};

#ifdef NDEBUG
inline constexpr bool kCrossCheckByDefault = false;
#else
inline constexpr bool kCrossCheckByDefault = true;
#endif

/// Equality in K_n decided by normal forms. With `cross_check` the reduced
/// Magnus expansions are compared as well and any disagreement throws.
inline bool equals(const KnElement& g, const KnElement& h, bool cross_check = kCrossCheckByDefault) {
  const bool verdict = g == h;
  if (cross_check) {
    const bool oracle = magnus(g) == magnus(h);
    if (oracle != verdict)
      throw OracleDisagreement("collection says " + std::string(verdict ? "equal" : "different") +
                               " but the Magnus expansion says " + (oracle ? "equal" : "different") + " for " +
                               g.to_string() + " vs " + h.to_string());
  }
  return verdict;
}

inline bool equals(const FreeWord& u, const FreeWord& v, int n, bool cross_check = kCrossCheckByDefault) {
  const bool verdict = collect(u, n) == collect(v, n);
  if (cross_check) {
    const bool oracle = magnus(u, n) == magnus(v, n);
    if (oracle != verdict)
      throw OracleDisagreement("collection and Magnus expansion disagree on " + u.to_string() + " vs " +
                               v.to_string());
  }
  return verdict;
}

}  // namespace hbraid
