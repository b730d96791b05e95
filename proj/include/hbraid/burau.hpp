#pragma once

// Unreduced Burau representation over Z[t, t^-1].
//
// Row convention: entry (r, c) is the coefficient of w_c in the image of w_r,
// and burau(uv) = burau(u) * burau(v). The generator s_i sends
// w_i -> (1-t) w_i + t w_{i+1} and w_{i+1} -> w_i. Transpose to get the
// column-vector convention.

#include "hbraid/braid_word.hpp"
#include "hbraid/laurent.hpp"

#include <set>
#include <string>
#include <vector>

namespace hbraid {

template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static SquareMatrix identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int size() const { return n_; }
  T& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const T& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

  friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
    if (x.n_ != y.n_) throw MismatchError("matrix sizes differ");
    SquareMatrix out(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.n_; ++k) {
        if (x(i, k) == T(0)) continue;
        for (int j = 0; j < x.n_; ++j) out(i, j) += x(i, k) * y(k, j);
      }
    return out;
  }
  friend SquareMatrix operator-(const SquareMatrix& x, const SquareMatrix& y) {
    SquareMatrix out = x;
    for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= y.a_[i];
    return out;
  }

  bool is_identity() const { return *this == identity(n_); }
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;
  friend bool operator<(const SquareMatrix& x, const SquareMatrix& y) { return x.a_ < y.a_; }

 private:
  int n_ = 0;
  std::vector<T> a_;
};

using BurauMatrix = SquareMatrix<LaurentPoly>;
using RationalMatrix = SquareMatrix<Rational>;

inline BurauMatrix burau_sigma(int i, int n, bool inverse = false) {
  if (n < 2 || i < 1 || i > n - 1)
    throw Error("generator s" + std::to_string(i) + " out of range for " + std::to_string(n) + " strands");
  BurauMatrix m = BurauMatrix::identity(n);
  const int r = i - 1;
  if (!inverse) {
    m(r, r) = LaurentPoly{{0, 1}, {1, -1}};
    m(r, r + 1) = LaurentPoly::t();
    m(r + 1, r) = 1;
    m(r + 1, r + 1) = 0;
  } else {
    m(r, r) = 0;
    m(r, r + 1) = 1;
    m(r + 1, r) = LaurentPoly::t(-1);
    m(r + 1, r + 1) = LaurentPoly{{0, 1}, {-1, -1}};
  }
  return m;
}

inline BurauMatrix burau(const BraidWord& w) {
  BurauMatrix m = BurauMatrix::identity(w.strands());
  for (int k : w.letters()) m = m * burau_sigma(std::abs(k), w.strands(), k < 0);
  return m;
}

inline RationalMatrix specialize(const BurauMatrix& m, const Rational& t0) {
  if (t0 == 0) throw Error("cannot specialize at t = 0");
  RationalMatrix out(m.size());
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) out(r, c) = m(r, c).evaluate(t0);
  return out;
}

/// Permutation matrix with the same row convention: row r has its 1 in
/// column p(r).
inline RationalMatrix permutation_matrix(const Permutation& p) {
  const int n = static_cast<int>(p.images().size());
  RationalMatrix m(n);
  for (int r = 0; r < n; ++r) m(r, p.images()[r] - 1) = 1;
  return m;
}

/// Order of the matrix group generated by the given invertible matrices,
/// or -1 if it exceeds `limit`.
inline int generated_group_order(const std::vector<RationalMatrix>& gens, int limit = 10000) {
  if (gens.empty()) return 1;
  std::set<RationalMatrix> seen{RationalMatrix::identity(gens.front().size())};
  std::vector<RationalMatrix> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<RationalMatrix> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = x * g;
        if (seen.insert(y).second) {
          if (static_cast<int>(seen.size()) > limit) return -1;
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return static_cast<int>(seen.size());
}

// ---- homotopy obstruction on three strands --------------------------------

struct DifferenceEntry {
  int row = 0;
  int col = 0;
  LaurentPoly value;
};

struct ObstructionRelation {
  std::string name;
  BurauMatrix lhs, rhs;
  std::vector<DifferenceEntry> nonzero;
  int zero_entries = 0;
};

struct ReferenceMatch {
  LaurentPoly reference;
  int relation = -1;  // index into relations, or -1
  int row = -1, col = -1;
};

struct ObstructionReport {
  std::vector<ObstructionRelation> relations;
  bool all_vanish_at_one = false;
  RationalPoly gcd;
  int multiplicity_at_one = 0;
  RationalPoly cofactor;  // gcd / (t-1)^multiplicity_at_one
  bool gcd_is_power_of_t_minus_1 = false;
  std::vector<Rational> common_rational_roots;
  std::vector<ReferenceMatch> references;
  bool pure_generators_trivial_at_one = false;
  int image_order_at_one = 0;

  int matched_references() const {
    int k = 0;
    for (const auto& r : references) k += r.relation >= 0 ? 1 : 0;
    return k;
  }
};

/// Reference list of eight obstruction polynomials, in order.
inline std::vector<LaurentPoly> reference_obstruction_polynomials() {
  const LaurentPoly one_minus_t{{0, 1}, {1, -1}};
  const LaurentPoly sq = one_minus_t.pow(2);
  return {
      LaurentPoly{{0, 1}, {1, -3}, {2, 4}, {3, -4}, {4, 3}, {5, -1}},
      sq * LaurentPoly{{0, -1}, {1, -1}, {2, -1}, {3, 1}},
      LaurentPoly::t() * one_minus_t.pow(5),
      sq * LaurentPoly{{-1, -1}, {0, 1}, {1, -1}, {2, 1}},
      LaurentPoly::t(-1) * one_minus_t.pow(4) * LaurentPoly{{0, 1}, {2, 1}},
      sq * LaurentPoly{{0, 1}, {1, -1}, {2, 1}, {3, -1}},
      sq * LaurentPoly{{0, -1}, {1, 1}, {2, -1}, {-1, 1}},
      LaurentPoly{{0, 1}, {1, -1}, {2, -4}, {3, 8}, {4, -5}, {5, 1}},
  };
}

namespace detail {

inline ObstructionRelation commutation_difference(std::string name, const BraidWord& x, const BraidWord& y) {
  ObstructionRelation rel;
  rel.name = std::move(name);
  rel.lhs = burau(x * y);
  rel.rhs = burau(y * x);
  BurauMatrix diff = rel.lhs - rel.rhs;
  for (int r = 0; r < diff.size(); ++r)
    for (int c = 0; c < diff.size(); ++c) {
      if (diff(r, c).is_zero())
        ++rel.zero_entries;
      else
        rel.nonzero.push_back({r, c, diff(r, c)});
    }
  return rel;
}

}  // namespace detail

/// Burau images of the two relations a13 a13^a23 = a13^a23 a13 and
/// a23 a23^a13 = a23^a13 a23, which hold in the homotopy braid group, and the
/// analysis of the entries of their difference matrices.
inline ObstructionReport homotopy_obstruction_system() {
  ObstructionReport rep;
  const BraidWord a12 = pure_gen(1, 2, 3), a13 = pure_gen(1, 3, 3), a23 = pure_gen(2, 3, 3);
  rep.relations.push_back(detail::commutation_difference("a13 a13^a23 = a13^a23 a13", a13, conjugate(a13, a23)));
  rep.relations.push_back(detail::commutation_difference("a23 a23^a13 = a23^a13 a23", a23, conjugate(a23, a13)));

  rep.all_vanish_at_one = true;
  RationalPoly g;
  for (const auto& rel : rep.relations)
    for (const auto& e : rel.nonzero) {
      if (e.value.evaluate(1) != 0) rep.all_vanish_at_one = false;
      g = gcd(g, RationalPoly::from_laurent(e.value));
    }
  rep.gcd = g;
  if (!g.is_zero()) {
    rep.multiplicity_at_one = root_multiplicity(g, 1);
    rep.cofactor = g;
    for (int i = 0; i < rep.multiplicity_at_one; ++i)
      rep.cofactor = rep.cofactor.divmod(RationalPoly({Rational(-1), Rational(1)})).first;
    rep.gcd_is_power_of_t_minus_1 = rep.multiplicity_at_one >= 1 && rep.multiplicity_at_one == g.degree();
    rep.common_rational_roots = rational_roots(g);
  }

  for (const auto& ref : reference_obstruction_polynomials()) {
    ReferenceMatch m{ref};
    for (int ri = 0; ri < static_cast<int>(rep.relations.size()) && m.relation < 0; ++ri)
      for (const auto& e : rep.relations[ri].nonzero)
        if (equal_up_to_unit(ref, e.value)) {
          m.relation = ri;
          m.row = e.row;
          m.col = e.col;
          break;
        }
    rep.references.push_back(std::move(m));
  }

  rep.pure_generators_trivial_at_one = specialize(burau(a12), 1).is_identity() &&
                                       specialize(burau(a13), 1).is_identity() &&
                                       specialize(burau(a23), 1).is_identity();
  rep.image_order_at_one =
      generated_group_order({specialize(burau_sigma(1, 3), 1), specialize(burau_sigma(2, 3), 1)});
  return rep;
}

}  // namespace hbraid
