#pragma once

// Normal form arithmetic in the homotopy braid group on three strands.
//
// Every element is b12^alpha b13^beta b23^gamma z^delta lam with z = [b23, b13]
// and lam one of six coset representatives. The pure part lives in a group
// where b12 acts on the free 2-step nilpotent group <b13, b23>:
//
//   (a,b,c,d)(a',b',c',d') = (a+a', b+b', c+c', d+d' + a'(b-c) + c b')
//   (a,b,c,d)^m            = (ma, mb, mc, md + C(m,2)(a(b-c) + bc))
//   p^(b12^k)              = (a, b, c, d + k(b-c))
//
// Conjugation is x^g = g^{-1} x g and iterates as x^(gh) = (x^g)^h. The
// arithmetic is generic in the exponent ring R (Integer or Polynomial).

#include "hbraid/artin.hpp"
#include "hbraid/braid_word.hpp"
#include "hbraid/integer.hpp"
#include "hbraid/polynomial.hpp"

#include <array>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hbraid {

enum class Rep3 { e, s1, s2, s2s1, s1s2, s1s2s1 };

inline constexpr std::array<Rep3, 6> kAllReps{Rep3::e, Rep3::s1, Rep3::s2, Rep3::s2s1, Rep3::s1s2, Rep3::s1s2s1};

inline std::string_view rep_name(Rep3 r) {
  constexpr std::array<std::string_view, 6> names{"e", "s1", "s2", "s2s1", "s1s2", "s1s2s1"};
  return names[static_cast<int>(r)];
}

inline Rep3 rep_from_name(std::string_view name) {
  for (Rep3 r : kAllReps)
    if (rep_name(r) == name) return r;
  throw ParseError("unknown coset representative '" + std::string(name) + "'");
}

inline std::vector<int> rep_letters(Rep3 r) {
  switch (r) {
    case Rep3::e: return {};
    case Rep3::s1: return {1};
    case Rep3::s2: return {2};
    case Rep3::s2s1: return {2, 1};
    case Rep3::s1s2: return {1, 2};
    case Rep3::s1s2s1: return {1, 2, 1};
  }
  return {};
}

inline BraidWord rep_word(Rep3 r) { return BraidWord(3, rep_letters(r)); }

inline Permutation rep_permutation(Rep3 r) { return permutation(rep_word(r)); }

inline Rep3 rep_for_permutation(const Permutation& p) {
  for (Rep3 r : kAllReps)
    if (rep_permutation(r) == p) return r;
  throw Error("not a permutation of three points");
}

/// b12^alpha b13^beta b23^gamma z^delta.
template <class R>
struct Pure3 {
  R alpha{0}, beta{0}, gamma{0}, delta{0};
  friend bool operator==(const Pure3&, const Pure3&) = default;
};

template <class R>
struct Bhat3Element {
  R alpha{0}, beta{0}, gamma{0}, delta{0};
  Rep3 lam = Rep3::e;

  static Bhat3Element identity() { return {}; }
  static Bhat3Element from(const Pure3<R>& p, Rep3 lam) { return {p.alpha, p.beta, p.gamma, p.delta, lam}; }

  Pure3<R> pure() const { return {alpha, beta, gamma, delta}; }
  bool is_identity() const { return *this == Bhat3Element{}; }
  friend bool operator==(const Bhat3Element&, const Bhat3Element&) = default;
};

using Bhat3 = Bhat3Element<Integer>;

template <class R>
std::string to_string(const Bhat3Element<R>& g) {
  auto str = [](const R& x) {
    if constexpr (std::is_same_v<R, Polynomial>) {
      static const std::vector<std::string> names{"alpha", "beta", "gamma", "delta"};
      return x.to_string(names);
    } else {
      return hbraid::to_string(x);
    }
  };
  return "(" + str(g.alpha) + ", " + str(g.beta) + ", " + str(g.gamma) + ", " + str(g.delta) + ", " +
         std::string(rep_name(g.lam)) + ")";
}

// ---- pure part ------------------------------------------------------------

template <class R>
Pure3<R> pure_multiply(const Pure3<R>& p, const Pure3<R>& q) {
  return {p.alpha + q.alpha, p.beta + q.beta, p.gamma + q.gamma,
          p.delta + q.delta + q.alpha * (p.beta - p.gamma) + p.gamma * q.beta};
}

template <class R>
Pure3<R> pure_power(const Pure3<R>& p, const R& m) {
  using hbraid::binom2;
  return {m * p.alpha, m * p.beta, m * p.gamma,
          m * p.delta + binom2(m) * (p.alpha * (p.beta - p.gamma) + p.beta * p.gamma)};
}

template <class R>
Pure3<R> pure_inverse(const Pure3<R>& p) {
  return pure_power(p, R(-1));
}

template <class R>
Pure3<R> conj_pure_b12(const Pure3<R>& p, const R& k) {
  return {p.alpha, p.beta, p.gamma, p.delta + k * (p.beta - p.gamma)};
}

namespace detail {

/// Images of (b12, b13, b23, z) under conjugation by a letter, as integer
/// tuples. The z rows follow from the other three.
inline const std::array<std::array<int, 4>, 4>& conj_images(int letter) {
  static const std::array<std::array<int, 4>, 4> s1{{{1, 0, 0, 0}, {0, 0, 1, -1}, {0, 1, 0, 0}, {0, 0, 0, -1}}};
  static const std::array<std::array<int, 4>, 4> s1_inv{{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, -1}, {0, 0, 0, -1}}};
  static const std::array<std::array<int, 4>, 4> s2{{{0, 1, 0, -1}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}};
  static const std::array<std::array<int, 4>, 4> s2_inv{{{0, 1, 0, 0}, {1, 0, 0, -1}, {0, 0, 1, 0}, {0, 0, 0, -1}}};
  switch (letter) {
    case 1: return s1;
    case -1: return s1_inv;
    case 2: return s2;
    case -2: return s2_inv;
  }
  throw Error("letter " + std::to_string(letter) + " is not a generator of B_3");
}

template <class R>
Pure3<R> lift(const std::array<int, 4>& t) {
  return {R(t[0]), R(t[1]), R(t[2]), R(t[3])};
}

}  // namespace detail

/// p^s = s^{-1} p s for a single letter s of B_3.
template <class R>
Pure3<R> conj_pure_letter(const Pure3<R>& p, int letter) {
  const auto& im = detail::conj_images(letter);
  Pure3<R> out = pure_power(detail::lift<R>(im[0]), p.alpha);
  out = pure_multiply(out, pure_power(detail::lift<R>(im[1]), p.beta));
  out = pure_multiply(out, pure_power(detail::lift<R>(im[2]), p.gamma));
  return pure_multiply(out, pure_power(detail::lift<R>(im[3]), p.delta));
}

template <class R>
Pure3<R> conj_pure(const Pure3<R>& p, Rep3 lam) {
  Pure3<R> out = p;
  for (int s : rep_letters(lam)) out = conj_pure_letter(out, s);
  return out;
}

/// p^(lam^{-1}).
template <class R>
Pure3<R> conj_pure_inverse(const Pure3<R>& p, Rep3 lam) {
  auto letters = rep_letters(lam);
  Pure3<R> out = p;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = conj_pure_letter(out, -*it);
  return out;
}

// ---- cosets ---------------------------------------------------------------

namespace detail {

struct Transition {
  std::array<int, 4> pure;  // lam * s = pure * next
  Rep3 next;
};

/// Right multiplication of a coset representative by s1 (column 0) or s2.
inline const Transition& transition(Rep3 lam, int s) {
  static const std::array<std::array<Transition, 2>, 6> table{{
      {{{{0, 0, 0, 0}, Rep3::s1}, {{0, 0, 0, 0}, Rep3::s2}}},                // e
      {{{{1, 0, 0, 0}, Rep3::e}, {{0, 0, 0, 0}, Rep3::s1s2}}},               // s1
      {{{{0, 0, 0, 0}, Rep3::s2s1}, {{0, 0, 1, 0}, Rep3::e}}},               // s2
      {{{{0, 1, 0, 0}, Rep3::s2}, {{0, 0, 0, 0}, Rep3::s1s2s1}}},            // s2s1
      {{{{0, 0, 0, 0}, Rep3::s1s2s1}, {{0, 1, 0, -1}, Rep3::s1}}},           // s1s2
      {{{{0, 0, 1, 0}, Rep3::s1s2}, {{1, 0, 0, 0}, Rep3::s2s1}}},            // s1s2s1
  }};
  return table[static_cast<int>(lam)][s - 1];
}

}  // namespace detail

/// Right multiplication of a normal form by one letter of B_3.
template <class R>
Bhat3Element<R> right_multiply(const Bhat3Element<R>& g, int letter) {
  const int s = std::abs(letter);
  if (s != 1 && s != 2) throw Error("letter " + std::to_string(letter) + " is not a generator of B_3");
  if (letter > 0) {
    const auto& t = detail::transition(g.lam, s);
    return Bhat3Element<R>::from(pure_multiply(g.pure(), detail::lift<R>(t.pure)), t.next);
  }
  // lam s^{-1} = q^{-1} mu where mu s = q lam
  for (Rep3 mu : kAllReps) {
    const auto& t = detail::transition(mu, s);
    if (t.next == g.lam)
      return Bhat3Element<R>::from(pure_multiply(g.pure(), pure_inverse(detail::lift<R>(t.pure))), mu);
  }
  throw Error("coset table is not a permutation");
}

template <class R = Integer>
Bhat3Element<R> from_braid_word(const BraidWord& w) {
  if (w.strands() != 3) throw MismatchError("normal forms are implemented for three strands only");
  Bhat3Element<R> g;
  for (int letter : w.letters()) g = right_multiply(g, letter);
  return g;
}

namespace detail {

struct CosetProduct {
  std::array<int, 4> pure;
  Rep3 rep;
};

/// lam * lam' = pure * rep, indexed [lam][lam']. Generated by
/// coset_product_table() and frozen.
inline const std::array<std::array<CosetProduct, 6>, 6>& frozen_coset_products() {
  static const std::array<std::array<CosetProduct, 6>, 6> table = {{
#include "hbraid/detail/coset_products.inc"
  }};
  return table;
}

}  // namespace detail

/// Recomputes the 36 coset products from the letter-by-letter pipeline.
inline std::array<std::array<Bhat3, 6>, 6> coset_product_table() {
  std::array<std::array<Bhat3, 6>, 6> out;
  for (Rep3 a : kAllReps)
    for (Rep3 b : kAllReps)
      out[static_cast<int>(a)][static_cast<int>(b)] = from_braid_word(rep_word(a) * rep_word(b));
  return out;
}

template <class R>
Bhat3Element<R> multiply(const Bhat3Element<R>& g, const Bhat3Element<R>& h) {
  const auto& tau = detail::frozen_coset_products()[static_cast<int>(g.lam)][static_cast<int>(h.lam)];
  Pure3<R> p = pure_multiply(g.pure(), conj_pure_inverse(h.pure(), g.lam));
  return Bhat3Element<R>::from(pure_multiply(p, detail::lift<R>(tau.pure)), tau.rep);
}

template <class R>
Bhat3Element<R> operator*(const Bhat3Element<R>& g, const Bhat3Element<R>& h) {
  return multiply(g, h);
}

template <class R>
Bhat3Element<R> inverse(const Bhat3Element<R>& g) {
  // (p lam)^{-1} = (p^{-1})^lam lam^{-1}
  auto lam_inv = from_braid_word<R>(rep_word(g.lam).inverse());
  return Bhat3Element<R>::from(pure_multiply(conj_pure(pure_inverse(g.pure()), g.lam), lam_inv.pure()),
                               lam_inv.lam);
}

template <class R>
Bhat3Element<R> power(const Bhat3Element<R>& g, long long m) {
  Bhat3Element<R> base = m < 0 ? inverse(g) : g;
  unsigned long long e = m < 0 ? 0ULL - static_cast<unsigned long long>(m) : static_cast<unsigned long long>(m);
  Bhat3Element<R> out;
  while (e != 0) {
    if (e & 1ULL) out = multiply(out, base);
    e >>= 1;
    if (e != 0) base = multiply(base, base);
  }
  return out;
}

/// Spot-check bound used by order().
inline constexpr int kOrderSpotCheck = 12;

enum class Order { kOne, kInfinite };

inline std::string_view to_string(Order o) { return o == Order::kOne ? "1" : "infinite"; }

/// 1 for the identity, otherwise infinite (the group is torsion-free). Every
/// non-identity answer is confirmed by g^m != e for 2 <= m <= kOrderSpotCheck.
inline Order order(const Bhat3& g) {
  if (g.is_identity()) return Order::kOne;
  Bhat3 x = g;
  for (int m = 2; m <= kOrderSpotCheck; ++m) {
    x = multiply(x, g);
    if (x.is_identity()) throw Error("torsion element found: " + to_string(g) + " has order " + std::to_string(m));
  }
  return Order::kInfinite;
}

// ---- bridge to Aut K_3 ----------------------------------------------------

namespace detail {

inline AutKn aut_power(const BraidWord& w, const Integer& m, int cap) {
  AutKn base = artin_k(m < 0 ? w.inverse() : w, ArtinConvention::kStandard, cap);
  Integer e = m < 0 ? Integer(-m) : m;
  AutKn out(3, cap);
  while (e != 0) {
    if ((e & 1) != 0) out = out.compose(base);
    e >>= 1;
    if (e != 0) base = base.compose(base);
  }
  return out;
}

}  // namespace detail

/// The automorphism of K_3 induced by any braid word representing g.
inline AutKn to_aut_k3(const Bhat3& g, int cap = kDefaultCap) {
  const BraidWord b12 = pure_gen(1, 2, 3);
  const BraidWord b13 = pure_gen(1, 3, 3);
  const BraidWord b23 = pure_gen(2, 3, 3);
  AutKn out = detail::aut_power(b12, g.alpha, cap);
  out = out.compose(detail::aut_power(b13, g.beta, cap));
  out = out.compose(detail::aut_power(b23, g.gamma, cap));
  out = out.compose(detail::aut_power(commutator(b23, b13), g.delta, cap));
  return out.compose(artin_k(rep_word(g.lam), ArtinConvention::kStandard, cap));
}

/// A braid word representing g.
inline BraidWord to_braid_word(const Bhat3& g) {
  auto pw = [](const BraidWord& w, const Integer& m) {
    if (!fits_int64(m) || abs(m) > 1'000'000) throw CapacityError("exponent too large to spell as a word");
    return w.pow(static_cast<int>(m));
  };
  return pw(pure_gen(1, 2, 3), g.alpha) * pw(pure_gen(1, 3, 3), g.beta) * pw(pure_gen(2, 3, 3), g.gamma) *
         pw(commutator(pure_gen(2, 3, 3), pure_gen(1, 3, 3)), g.delta) * rep_word(g.lam);
}

// ---- torsion certificate --------------------------------------------------

struct CertificateItem {
  std::string name;
  std::string detail;
  bool pass = false;
};

struct TorsionCertificate {
  std::vector<CertificateItem> items;
  bool pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return !items.empty();
  }
};

/// Machine check of the torsion-freeness argument: the conjugacy reductions
/// to lam = s2 and lam = s1s2, and the symbolic square and cube with their
/// parity obstructions.
inline TorsionCertificate torsion_certificate() {
  TorsionCertificate cert;
  auto w = [](std::vector<int> letters) { return from_braid_word(BraidWord(3, std::move(letters))); };
  auto rep = [](Rep3 r) { return Bhat3::from({}, r); };

  {
    Bhat3 lhs = multiply(multiply(w({-1}), rep(Rep3::s2)), w({1}));
    Bhat3 rhs = multiply(Bhat3{-1, 0, 0, 0, Rep3::e}, rep(Rep3::s1s2s1));
    cert.items.push_back({"reduction s1^-1 . s2 . s1 = b12^-1 s1s2s1", to_string(lhs), lhs == rhs});
  }
  {
    Bhat3 lhs = multiply(multiply(rep(Rep3::s2s1), rep(Rep3::s2)), w({-1, -2}));
    cert.items.push_back({"reduction s2s1 . s2 . s1^-1 s2^-1 = s1", to_string(lhs), lhs == rep(Rep3::s1)});
  }
  {
    Bhat3 lhs = multiply(multiply(w({-1}), rep(Rep3::s1s2)), w({1}));
    cert.items.push_back({"reduction s1^-1 . s1s2 . s1 = s2s1", to_string(lhs), lhs == rep(Rep3::s2s1)});
  }

  using P = Polynomial;
  const P a = P::variable(0), b = P::variable(1), c = P::variable(2), d = P::variable(3);
  const std::vector<std::string> names{"alpha", "beta", "gamma", "delta"};

  {
    Bhat3Element<P> g{a, b, c, d, Rep3::s2};
    auto g2 = power(g, 2);
    Bhat3Element<P> expected{a + b, a + b, P(2) * c + P(1), a * c + b * (b - c + a - P(1)), Rep3::e};
    cert.items.push_back({"square for lam = s2", to_string(g2), g2 == expected});
    P z_on_line = g2.delta.substitute(1, -a);
    cert.items.push_back({"square for lam = s2 with alpha + beta = 0", "z^(" + z_on_line.to_string(names) + ")",
                          z_on_line == P(2) * a * c + a});
    bool odd = g2.gamma.has_integer_coefficients() && (g2.gamma - P(1)).coefficients_divisible_by(2);
    cert.items.push_back({"obstruction for lam = s2", g2.gamma.to_string(names) + " is odd, never 0", odd});
  }
  {
    Bhat3Element<P> g{a, b, c, d, Rep3::s1s2};
    auto g3 = power(g, 3);
    P lin = a + b + c + P(1);
    P quad = a * (a + P(2) * c - b) + b * b + c * c - b * c + P(3) * d + P(3) * b;
    Bhat3Element<P> expected{lin, lin, lin, quad, Rep3::e};
    cert.items.push_back({"cube for lam = s1s2", to_string(g3), g3 == expected});
    P eliminated = g3.delta.substitute(0, P(-1) - b - c);
    P target = P(3) * (b * b + P(2) * b + d) + P(1);
    bool mod3 = eliminated == target && (eliminated - P(1)).coefficients_divisible_by(3);
    cert.items.push_back({"obstruction for lam = s1s2",
                          eliminated.to_string(names) + " = 1 mod 3, never 0", mod3});
  }
  return cert;
}

}  // namespace hbraid
