#pragma once

// Artin action of braid words on F_n and on the reduced free group K_n.
//
// Automorphisms are stored by the images of the generators and compose as
// functions: the automorphism of a word s_1 ... s_m is phi(s_1) o ... o
// phi(s_m), so w -> phi(w) is a homomorphism. In the standard convention
//
//     sigma_i : x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i,
//
// and the mirror convention sends sigma_i to the inverse of that map.
// Conjugation identities in B_n are invariant under the mirror automorphism
// of B_n, so both conventions validate the same relation tables.

#include "hbraid/braid_word.hpp"
#include "hbraid/free_group.hpp"
#include "hbraid/reduced_free.hpp"

#include <cstdlib>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hbraid {

enum class ArtinConvention { kStandard, kMirror };

/// Image of x_k under sigma_i^{sign}, as a word.
inline FreeWord artin_generator_image(int letter, int k, ArtinConvention convention = ArtinConvention::kStandard) {
  const int i = std::abs(letter);
  bool forward = letter > 0;
  if (convention == ArtinConvention::kMirror) forward = !forward;
  if (k == i) return forward ? FreeWord({i, i + 1, -i}) : FreeWord({i + 1});
  if (k == i + 1) return forward ? FreeWord({i}) : FreeWord({-(i + 1), i, i + 1});
  return FreeWord({k});
}

class AutFn {
 public:
  explicit AutFn(int n) : images_(n) {
    for (int k = 1; k <= n; ++k) images_[k - 1] = FreeWord::generator(k);
  }
  explicit AutFn(std::vector<FreeWord> images) : images_(std::move(images)) {}

  int n() const { return static_cast<int>(images_.size()); }
  const std::vector<FreeWord>& images() const { return images_; }

  FreeWord apply(const FreeWord& w) const { return substitute(w, images_); }

  /// (*this o other)(x) = this(other(x))
  AutFn compose(const AutFn& other) const {
    std::vector<FreeWord> out;
    out.reserve(other.images_.size());
    for (const auto& im : other.images_) out.push_back(apply(im));
    return AutFn(std::move(out));
  }

  bool is_identity() const {
    for (int k = 1; k <= n(); ++k)
      if (images_[k - 1] != FreeWord::generator(k)) return false;
    return true;
  }

  friend bool operator==(const AutFn&, const AutFn&) = default;

 private:
  std::vector<FreeWord> images_;
};

class AutKn {
 public:
  explicit AutKn(int n, int cap = kDefaultCap) {
    auto basis = HallBasis::get(n, cap);
    for (int k = 1; k <= n; ++k) {
      KnElement g = KnElement::identity(basis);
      g.multiply_basis(k - 1, 1);
      images_.push_back(std::move(g));
    }
  }
  explicit AutKn(std::vector<KnElement> images) : images_(std::move(images)) {
    if (images_.empty()) throw Error("automorphism of K_0");
    for (const auto& g : images_)
      if (g.n() != n()) throw MismatchError("automorphism images must lie in K_n");
  }

  int n() const { return static_cast<int>(images_.size()); }
  const std::vector<KnElement>& images() const { return images_; }
  const HallBasis& basis() const { return images_.front().basis(); }

  /// Image of a word in x_1 .. x_n.
  KnElement apply(std::span<const int> word) const {
    KnElement out = KnElement::identity(images_.front().basis_ptr());
    for (int k : word) out *= k > 0 ? images_[k - 1] : images_[-k - 1].inverse();
    return out;
  }

  /// Image of a normal form, evaluated factor by factor.
  KnElement apply(const KnElement& g) const {
    if (g.n() != n()) throw MismatchError("element and automorphism live in different K_n");
    const auto& basis = g.basis();
    std::vector<KnElement> images;
    images.reserve(basis.size());
    for (int i = 0; i < basis.size(); ++i) {
      const auto& c = basis[i];
      if (c.is_generator())
        images.push_back(images_[c.word[0] - 1]);
      else
        images.push_back(commutator(images[c.left], images[c.right]));
    }
    KnElement out = KnElement::identity(g.basis_ptr());
    for (int i = 0; i < basis.size(); ++i)
      if (g.exponent(i) != 0) out *= images[i].pow(g.exponent(i));
    return out;
  }

  /// (*this o other)(x) = this(other(x))
  AutKn compose(const AutKn& other) const {
    std::vector<KnElement> out;
    out.reserve(other.images_.size());
    for (const auto& im : other.images_) out.push_back(apply(im));
    return AutKn(std::move(out));
  }

  bool is_identity() const {
    for (int k = 0; k < n(); ++k) {
      const auto& e = images_[k].exponents();
      for (int i = 0; i < static_cast<int>(e.size()); ++i)
        if (e[i] != (i == k ? 1 : 0)) return false;
    }
    return true;
  }

  friend bool operator==(const AutKn& a, const AutKn& b) { return a.images_ == b.images_; }

 private:
  std::vector<KnElement> images_;
};

/// Image of a braid word under B_n -> Aut F_n; images are freely reduced.
inline AutFn artin_free(const BraidWord& w, ArtinConvention convention = ArtinConvention::kStandard) {
  AutFn phi(w.strands());
  for (int letter : w.letters()) {
    std::vector<FreeWord> next;
    next.reserve(w.strands());
    for (int k = 1; k <= w.strands(); ++k) next.push_back(phi.apply(artin_generator_image(letter, k, convention)));
    phi = AutFn(std::move(next));
  }
  return phi;
}

/// Image of a braid word under B_n -> Aut K_n.
inline AutKn artin_k(const BraidWord& w, ArtinConvention convention = ArtinConvention::kStandard,
                     int cap = kDefaultCap) {
  AutKn phi(w.strands(), cap);
  for (int letter : w.letters()) {
    std::vector<KnElement> next;
    next.reserve(w.strands());
    for (int k = 1; k <= w.strands(); ++k)
      next.push_back(phi.apply(artin_generator_image(letter, k, convention).letters()));
    phi = AutKn(std::move(next));
  }
  return phi;
}

/// Decides triviality in the homotopy braid group.
inline bool is_homotopy_trivial(const BraidWord& w, ArtinConvention convention = ArtinConvention::kStandard,
                                int cap = kDefaultCap) {
  return permutation(w).is_identity() && artin_k(w, convention, cap).is_identity();
}

inline bool homotopy_equal(const BraidWord& w1, const BraidWord& w2,
                           ArtinConvention convention = ArtinConvention::kStandard, int cap = kDefaultCap) {
  return is_homotopy_trivial(w1 * w2.inverse(), convention, cap);
}

// ---------------------------------------------------------------------------
// Relation suites of B_n and of its pure braid subgroup.

struct RelationInstance {
  std::string relation_id;
  std::string instance;
  BraidWord lhs;
  BraidWord rhs;
};

struct RelationCheck {
  std::string relation_id;
  std::string instance;
  bool pass;
};

namespace detail {

inline std::string idx(std::initializer_list<std::pair<const char*, int>> vars) {
  std::string s;
  for (const auto& [name, v] : vars) s += (s.empty() ? "" : ",") + std::string(name) + "=" + std::to_string(v);
  return s;
}

}  // namespace detail

/// Braid relations, the four pure braid relation families (eps = +-1) and the
/// six conjugation rules of sigma_k on a_ij.
inline std::vector<RelationInstance> relation_instances(int n) {
  if (n < 2) throw Error("relation suites need n >= 2");
  std::vector<RelationInstance> out;
  auto s = [n](int k) { return BraidWord(n, {k}); };
  auto a = [n](int i, int j) { return pure_gen(i, j, n); };
  using detail::idx;

  for (int i = 1; i + 1 <= n - 1; ++i)
    out.push_back({"braid", idx({{"i", i}}), s(i) * s(i + 1) * s(i), s(i + 1) * s(i) * s(i + 1)});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) out.push_back({"far_commute", idx({{"i", i}, {"j", j}}), s(i) * s(j), s(j) * s(i)});

  for (int eps : {1, -1}) {
    const std::string e = eps > 0 ? "eps=+1" : "eps=-1";
    for (int i = 1; i <= n; ++i)
      for (int k = i + 1; k <= n; ++k)
        for (int j = k + 1; j <= n; ++j) {
          auto p = a(i, j) * a(k, j);
          out.push_back({"pure_1", idx({{"i", i}, {"k", k}, {"j", j}}) + "," + e, a(i, k).pow(-eps) * a(k, j) * a(i, k).pow(eps),
                         p.pow(eps) * a(k, j) * p.pow(-eps)});
        }
    for (int k = 1; k <= n; ++k)
      for (int m = k + 1; m <= n; ++m)
        for (int j = m + 1; j <= n; ++j) {
          auto p = a(k, j) * a(m, j);
          out.push_back({"pure_2", idx({{"k", k}, {"m", m}, {"j", j}}) + "," + e, a(k, m).pow(-eps) * a(k, j) * a(k, m).pow(eps),
                         p.pow(eps) * a(k, j) * p.pow(-eps)});
        }
    for (int i = 1; i <= n; ++i)
      for (int k = i + 1; k <= n; ++k)
        for (int m = k + 1; m <= n; ++m)
          for (int j = m + 1; j <= n; ++j) {
            auto c = commutator(a(i, j).pow(-eps), a(m, j).pow(-eps));
            out.push_back({"pure_3", idx({{"i", i}, {"k", k}, {"m", m}, {"j", j}}) + "," + e,
                           a(i, m).pow(-eps) * a(k, j) * a(i, m).pow(eps), c.pow(eps) * a(k, j) * c.pow(-eps)});
          }
    for (int i = 1; i <= n; ++i)
      for (int m = i + 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k)
          for (int j = k + 1; j <= n; ++j) {
            if (!((k < i && i < m && m < j) || m < k)) continue;
            out.push_back({"pure_4", idx({{"i", i}, {"m", m}, {"k", k}, {"j", j}}) + "," + e,
                           a(i, m).pow(-eps) * a(k, j) * a(i, m).pow(eps), a(k, j)});
          }
  }

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1; k <= n - 1; ++k)
        if (k != i - 1 && k != i && k != j - 1 && k != j)
          out.push_back({"sigma_fixes", idx({{"k", k}, {"i", i}, {"j", j}}), conjugate(a(i, j), s(k)), a(i, j)});
      if (j == i + 1) out.push_back({"sigma_i_on_a_i_i+1", idx({{"i", i}}), conjugate(a(i, j), s(i)), a(i, j)});
      if (i >= 2) out.push_back({"sigma_i-1", idx({{"i", i}, {"j", j}}), conjugate(a(i, j), s(i - 1)), a(i - 1, j)});
      if (j != i + 1) {
        out.push_back({"sigma_i", idx({{"i", i}, {"j", j}}), conjugate(a(i, j), s(i)),
                       a(i + 1, j) * commutator(a(i, i + 1).inverse(), a(i, j).inverse())});
        out.push_back({"sigma_j-1", idx({{"i", i}, {"j", j}}), conjugate(a(i, j), s(j - 1)), a(i, j - 1)});
      }
      if (j <= n - 1)
        out.push_back({"sigma_j", idx({{"i", i}, {"j", j}}), conjugate(a(i, j), s(j)), a(i, j) * a(i, j + 1) * a(i, j).inverse()});
    }
  return out;
}

/// Checks every relation instance inside Aut K_n.
inline std::vector<RelationCheck> verify_relations(int n, ArtinConvention convention = ArtinConvention::kStandard,
                                                   int cap = kDefaultCap) {
  std::vector<RelationCheck> out;
  for (const auto& r : relation_instances(n))
    out.push_back({r.relation_id, r.instance, artin_k(r.lhs, convention, cap) == artin_k(r.rhs, convention, cap)});
  return out;
}

// ---------------------------------------------------------------------------
// Weight-three commutators in K_3.

struct WeightThreeVerdict {
  std::string name;
  FreeWord word;
  bool trivial_in_k3;       // by collection in K_3
  bool trivial_via_p4;      // by nu_4 after x_i -> a_{i4}
  bool expected_trivial;
};

/// [[x_a, x_b], x_c] for the eight commutators listed for K_3, checked both by
/// collection and through the embedding K_3 -> P^_4, x_i -> a_{i4}.
inline std::vector<WeightThreeVerdict> weight_three_report(ArtinConvention convention = ArtinConvention::kStandard) {
  struct Case {
    int a, b, c;
    bool trivial;
  };
  const Case cases[] = {{2, 1, 1, true}, {2, 1, 2, true}, {3, 1, 1, true}, {3, 1, 3, true},
                        {3, 2, 2, true}, {3, 2, 3, true}, {2, 1, 3, false}, {3, 1, 2, false}};
  std::vector<WeightThreeVerdict> out;
  for (const auto& cs : cases) {
    auto x = [](int k) { return FreeWord::generator(k); };
    FreeWord w = commutator(commutator(x(cs.a), x(cs.b)), x(cs.c));
    auto ab = [](int k) { return pure_gen(k, 4, 4); };
    BraidWord embedded = commutator(commutator(ab(cs.a), ab(cs.b)), ab(cs.c));
    std::string name = "[[x" + std::to_string(cs.a) + ",x" + std::to_string(cs.b) + "],x" + std::to_string(cs.c) + "]";
    out.push_back({name, w, collect(w, 3).is_identity(), artin_k(embedded, convention).is_identity(), cs.trivial});
  }
  return out;
}

}  // namespace hbraid
