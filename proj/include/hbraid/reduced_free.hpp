#pragma once

// Elements of the reduced free group K_n in collected normal form
//
//     g = c_1^{e_1} c_2^{e_2} ... c_N^{e_N}
//
// over the Hall basis of hall_basis.hpp. Multiplication collects from the
// left: appending c_j^e to a normal form moves c_j^e past every later factor
// c_i^{r} with the conjugation relation
//
//     (c_i^r)^{c_j^e} = c_i^r [c_i, c_j]^{r e},
//
// which is exact in K_n because [c_i, c_j] commutes with both c_i and c_j
// (overlapping supports) and the commutator map is bilinear on basis
// commutators with disjoint support. Factors of weight > n never arise since
// every surviving commutator has squarefree support.

#include "hbraid/free_group.hpp"
#include "hbraid/hall_basis.hpp"
#include "hbraid/integer.hpp"

#include <cstdlib>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hbraid {

class KnElement {
 public:
  KnElement() = default;

  static KnElement identity(int n, int cap = kDefaultCap) { return KnElement(HallBasis::get(n, cap)); }

  static KnElement identity(std::shared_ptr<const HallBasis> basis) { return KnElement(std::move(basis)); }

  /// x_k^e
  static KnElement generator(int n, int k, const Integer& e = 1, int cap = kDefaultCap) {
    KnElement g = identity(n, cap);
    if (k < 1 || k > n) throw Error("generator x" + std::to_string(k) + " out of range for K_" + std::to_string(n));
    g.exps_[k - 1] = e;
    return g;
  }

  /// Builds an element from its exponent vector (already in normal form).
  static KnElement from_exponents(std::shared_ptr<const HallBasis> basis, std::vector<Integer> exps) {
    if (static_cast<int>(exps.size()) != basis->size()) throw Error("exponent vector has wrong length");
    KnElement g(std::move(basis));
    g.exps_ = std::move(exps);
    return g;
  }

  int n() const { return basis_->n(); }
  const HallBasis& basis() const { return *basis_; }
  const std::shared_ptr<const HallBasis>& basis_ptr() const { return basis_; }
  const std::vector<Integer>& exponents() const { return exps_; }
  const Integer& exponent(int i) const { return exps_[i]; }

  bool is_identity() const {
    for (const auto& e : exps_)
      if (e != 0) return false;
    return true;
  }

  /// *this <- *this * c_j^e
  KnElement& multiply_basis(int j, const Integer& e) {
    mul_gen(exps_, j, e);
    return *this;
  }

  KnElement& operator*=(const KnElement& rhs) {
    check_same(rhs);
    if (&rhs == this) return *this *= KnElement(rhs);
    for (int i = 0; i < basis_->size(); ++i)
      if (rhs.exps_[i] != 0) mul_gen(exps_, i, rhs.exps_[i]);
    return *this;
  }

  friend KnElement operator*(KnElement lhs, const KnElement& rhs) { return lhs *= rhs; }

  KnElement inverse() const {
    KnElement out(basis_);
    for (int i = basis_->size() - 1; i >= 0; --i)
      if (exps_[i] != 0) mul_gen(out.exps_, i, -exps_[i]);
    return out;
  }

  KnElement pow(Integer m) const {
    KnElement base = m < 0 ? inverse() : *this;
    if (m < 0) m = -m;
    KnElement acc(basis_);
    while (m != 0) {
      if ((m & 1) != 0) acc *= base;
      m >>= 1;
      if (m != 0) base *= base;
    }
    return acc;
  }

  friend bool operator==(const KnElement& a, const KnElement& b) {
    a.check_same(b);
    return a.exps_ == b.exps_;
  }

  /// Nonzero coordinates as "c^e" factors, e.g. "x2 [x1,x2]^-1".
  std::string to_string() const {
    std::string s;
    for (int i = 0; i < basis_->size(); ++i) {
      if (exps_[i] == 0) continue;
      if (!s.empty()) s += ' ';
      s += basis_->name(i);
      if (exps_[i] != 1) s += "^" + exps_[i].str();
    }
    return s.empty() ? "1" : s;
  }

 private:
  explicit KnElement(std::shared_ptr<const HallBasis> basis)
      : basis_(std::move(basis)), exps_(static_cast<std::size_t>(basis_->size())) {}

  void check_same(const KnElement& other) const {
    if (other.basis_->n() != basis_->n())
      throw MismatchError("K_" + std::to_string(basis_->n()) + " and K_" + std::to_string(other.basis_->n()) +
                          " elements cannot be combined");
  }

  void mul_gen(std::vector<Integer>& r, int j, const Integer& e) const {
    if (e == 0) return;
    const auto& rules = basis_->rules_for(j);
    int first_moved = -1;
    for (const auto& rule : rules) {
      if (r[rule.i] != 0) {
        first_moved = rule.i;
        break;
      }
    }
    if (first_moved < 0) {
      r[j] += e;
      return;
    }
    // Factors in (j, first_moved) commute with c_j and stay put; rebuild the
    // rest of the tail conjugated by c_j^e.
    std::vector<std::pair<int, Integer>> tail;
    for (int i = first_moved; i < basis_->size(); ++i) {
      if (r[i] != 0) {
        tail.emplace_back(i, std::move(r[i]));
        r[i] = 0;
      }
    }
    r[j] += e;
    auto rule = rules.begin();
    for (const auto& [i, ri] : tail) {
      mul_gen(r, i, ri);
      while (rule != rules.end() && rule->i < i) ++rule;
      if (rule != rules.end() && rule->i == i) {
        Integer scale = ri * e;
        for (const auto& [b, m] : rule->value) mul_gen(r, b, m * scale);
      }
    }
  }

  std::shared_ptr<const HallBasis> basis_;
  std::vector<Integer> exps_;
};

/// Normal form of a word in x_1^{+-1} .. x_n^{+-1}.
inline KnElement collect(std::span<const int> word, int n, int cap = kDefaultCap) {
  KnElement g = KnElement::identity(n, cap);
  for (int k : word) {
    if (k == 0 || std::abs(k) > n)
      throw Error("letter " + std::to_string(k) + " out of range for K_" + std::to_string(n));
    g.multiply_basis(std::abs(k) - 1, k > 0 ? 1 : -1);
  }
  return g;
}

inline KnElement collect(const FreeWord& w, int n, int cap = kDefaultCap) { return collect(w.letters(), n, cap); }

inline KnElement multiply(const KnElement& g, const KnElement& h) { return g * h; }
inline KnElement inverse(const KnElement& g) { return g.inverse(); }

/// [g,h] = g^{-1} h^{-1} g h
inline KnElement commutator(const KnElement& g, const KnElement& h) { return g.inverse() * h.inverse() * g * h; }

/// g^h = h^{-1} g h
inline KnElement conjugate(const KnElement& g, const KnElement& h) { return h.inverse() * g * h; }

/// Expands a normal form back into a word in the generators.
inline FreeWord to_word(const KnElement& g) {
  const auto& basis = g.basis();
  std::vector<FreeWord> words(basis.size());
  for (int i = 0; i < basis.size(); ++i) {
    const auto& c = basis[i];
    words[i] = c.is_generator() ? FreeWord::generator(c.word[0]) : commutator(words[c.left], words[c.right]);
  }
  FreeWord out;
  for (int i = 0; i < basis.size(); ++i) {
    const Integer& e = g.exponent(i);
    if (e == 0) continue;
    FreeWord piece = e > 0 ? words[i] : words[i].inverse();
    for (Integer r = 0; r < abs(e); ++r) out *= piece;
  }
  return out;
}

}  // namespace hbraid
