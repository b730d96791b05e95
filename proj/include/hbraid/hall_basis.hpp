#pragma once

// Hall basis of the reduced free group K_n.
//
// Basis commutators are Lyndon words over {1..n} with pairwise distinct
// letters, bracketed by the standard factorization w = uv (v the longest
// proper Lyndon suffix), ordered by (weight, lexicographic word). A Lyndon
// word with distinct letters is exactly one whose first letter is its
// minimum, so there are (k-1)! C(n,k) basis commutators of weight k.
//
// Commutators with a repeated letter vanish in K_n: such a commutator lies in
// [X_i, X_i] where X_i is the normal closure of x_i. Consequently two basis
// commutators with overlapping support commute, and for disjoint supports S,
// T the group commutator [c_S, c_T] lies in the free abelian group spanned by
// the basis commutators with support exactly S u T. Its coordinates there are
// those of the Lie bracket of the corresponding Lyndon elements in the free
// Lie ring, which `lie_bracket` computes by Jacobi rewriting.

#include "hbraid/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hbraid {

using Letters = std::vector<int>;

/// Sparse integer combination of basis commutators, sorted by basis index.
using BasisVector = std::vector<std::pair<int, Integer>>;

namespace lie {

/// Integer combination of Lyndon words, each standing for its standard bracketing.
using Combination = std::map<Letters, Integer>;

/// w is Lyndon iff it is strictly smaller than each of its proper suffixes.
inline bool is_lyndon(const Letters& w) {
  if (w.empty()) return false;
  for (std::size_t s = 1; s < w.size(); ++s)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + s, w.end())) return false;
  return true;
}

/// (u, v) with v the longest proper Lyndon suffix of the Lyndon word w.
inline std::pair<Letters, Letters> standard_factorization(const Letters& w) {
  for (std::size_t s = 1; s < w.size(); ++s) {
    Letters suffix(w.begin() + s, w.end());
    if (is_lyndon(suffix)) return {Letters(w.begin(), w.begin() + s), std::move(suffix)};
  }
  throw Error("standard factorization of a single letter");
}

inline void add_to(Combination& acc, const Combination& c, const Integer& scale) {
  for (const auto& [w, coef] : c) {
    auto& slot = acc[w];
    slot += coef * scale;
    if (slot == 0) acc.erase(w);
  }
}

class BracketTable {
 public:
  /// [P_u, P_v] in the Lyndon basis, for Lyndon words u, v.
  const Combination& bracket(const Letters& u, const Letters& v) {
    auto key = std::make_pair(u, v);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Combination result = compute(u, v);
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

  Combination bracket(const Letters& u, const Combination& c) {
    Combination out;
    for (const auto& [w, coef] : c) add_to(out, bracket(u, w), coef);
    return out;
  }

  Combination bracket(const Combination& c, const Letters& v) {
    Combination out;
    for (const auto& [w, coef] : c) add_to(out, bracket(w, v), coef);
    return out;
  }

 private:
  Combination compute(const Letters& u, const Letters& v) {
    if (u == v) return {};
    if (std::lexicographical_compare(v.begin(), v.end(), u.begin(), u.end())) {
      Combination out;
      add_to(out, bracket(v, u), Integer(-1));
      return out;
    }
    // u < v: (u, v) is the standard factorization of uv iff u is a letter or
    // the right factor of u is >= v.
    if (u.size() == 1) return {{concat(u, v), Integer(1)}};
    auto [u1, u2] = standard_factorization(u);
    if (!std::lexicographical_compare(u2.begin(), u2.end(), v.begin(), v.end())) return {{concat(u, v), Integer(1)}};
    // [[u1,u2],v] = [u1,[u2,v]] + [[u1,v],u2]
    Combination out = bracket(u1, Combination(bracket(u2, v)));
    add_to(out, bracket(Combination(bracket(u1, v)), u2), Integer(1));
    return out;
  }

  static Letters concat(const Letters& a, const Letters& b) {
    Letters w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
  }

  std::map<std::pair<Letters, Letters>, Combination> memo_;
};

}  // namespace lie

struct HallCommutator {
  Letters word;
  int left = -1;  // basis index of the left bracket factor, weight > 1 only
  int right = -1;
  std::uint32_t support = 0;  // bit k-1 set iff x_k occurs

  int weight() const { return static_cast<int>(word.size()); }
  bool is_generator() const { return word.size() == 1; }

  std::string to_string(const std::vector<HallCommutator>& basis) const {
    if (is_generator()) return "x" + std::to_string(word[0]);
    return "[" + basis[left].to_string(basis) + "," + basis[right].to_string(basis) + "]";
  }
};

class HallBasis {
 public:
  /// [c_i, c_j] for i > j with disjoint supports.
  struct Rule {
    int i;
    BasisVector value;
  };

  /// Memoized, immutable basis for K_n; n must lie in [1, cap].
  static std::shared_ptr<const HallBasis> get(int n, int cap = kDefaultCap) {
    if (n < 1) throw Error("K_n needs n >= 1");
    if (n > cap)
      throw CapacityError("n = " + std::to_string(n) + " exceeds the generator cap " + std::to_string(cap) +
                          " (raise it with --max-n)");
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const HallBasis>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::shared_ptr<const HallBasis>(new HallBasis(n));
    return slot;
  }

  int n() const { return n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const HallCommutator& operator[](int i) const { return elements_[i]; }
  const std::vector<HallCommutator>& elements() const { return elements_; }

  std::optional<int> index_of(const Letters& w) const {
    if (auto it = index_.find(w); it != index_.end()) return it->second;
    return std::nullopt;
  }

  int count_of_weight(int k) const {
    return static_cast<int>(std::count_if(elements_.begin(), elements_.end(),
                                          [k](const HallCommutator& c) { return c.weight() == k; }));
  }

  bool commute(int i, int j) const { return (elements_[i].support & elements_[j].support) != 0 || i == j; }

  const std::vector<Rule>& rules_for(int j) const { return rules_[j]; }

  /// [c_i, c_j] as a combination of basis commutators (empty when they commute).
  BasisVector commutator(int i, int j) const {
    if (commute(i, j)) return {};
    if (i < j) {
      BasisVector v = commutator(j, i);
      for (auto& [b, c] : v) c = -c;
      return v;
    }
    const auto& rules = rules_[j];
    auto it = std::lower_bound(rules.begin(), rules.end(), i, [](const Rule& r, int key) { return r.i < key; });
    return it->value;
  }

  std::string name(int i) const { return elements_[i].to_string(elements_); }

 private:
  explicit HallBasis(int n) : n_(n) {
    std::vector<Letters> words;
    Letters current;
    std::vector<bool> used(n + 1, false);
    enumerate(current, used, words);
    std::sort(words.begin(), words.end(), [](const Letters& a, const Letters& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    for (const auto& w : words) {
      HallCommutator c;
      c.word = w;
      for (int k : w) c.support |= 1u << (k - 1);
      if (w.size() > 1) {
        auto [u, v] = lie::standard_factorization(w);
        c.left = index_.at(u);
        c.right = index_.at(v);
      }
      index_.emplace(w, static_cast<int>(elements_.size()));
      elements_.push_back(std::move(c));
    }
    build_rules();
  }

  void enumerate(Letters& current, std::vector<bool>& used, std::vector<Letters>& out) {
    if (!current.empty() && lie::is_lyndon(current)) out.push_back(current);
    if (static_cast<int>(current.size()) == n_) return;
    for (int k = 1; k <= n_; ++k) {
      if (used[k]) continue;
      used[k] = true;
      current.push_back(k);
      enumerate(current, used, out);
      current.pop_back();
      used[k] = false;
    }
  }

  void build_rules() {
    lie::BracketTable table;
    rules_.assign(elements_.size(), {});
    for (int j = 0; j < size(); ++j) {
      for (int i = j + 1; i < size(); ++i) {
        if (commute(i, j)) continue;
        BasisVector v;
        for (const auto& [w, coef] : table.bracket(elements_[i].word, elements_[j].word)) v.emplace_back(index_.at(w), coef);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        rules_[j].push_back({i, std::move(v)});
      }
    }
  }

  int n_;
  std::vector<HallCommutator> elements_;
  std::map<Letters, int> index_;
  std::vector<std::vector<Rule>> rules_;
};

}  // namespace hbraid
