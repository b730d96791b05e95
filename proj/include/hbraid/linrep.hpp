#pragma once

// The faithful representation K_2 -> UT_3(Z),
//
//   x1 -> A = I + a E12,  x2 -> B = I + b E23,  [x1,x2] -> [A,B] = I + ab E13,
//
// valid for any nonzero integers a, b. Whether K_n embeds in UT_n(Z) for
// n > 2 is open and not attempted here.

#include "hbraid/free_group.hpp"
#include "hbraid/integer.hpp"
#include "hbraid/reduced_free.hpp"

#include <array>
#include <cstdlib>
#include <string>

namespace hbraid {

class IntMatrix3 {
 public:
  using Row = std::array<Integer, 3>;

  IntMatrix3() = default;
  explicit IntMatrix3(std::array<Row, 3> rows) : m_(std::move(rows)) {}

  static IntMatrix3 identity() { return IntMatrix3({Row{1, 0, 0}, Row{0, 1, 0}, Row{0, 0, 1}}); }

  const Integer& operator()(int r, int c) const { return m_[r][c]; }
  Integer& operator()(int r, int c) { return m_[r][c]; }

  friend IntMatrix3 operator*(const IntMatrix3& x, const IntMatrix3& y) {
    IntMatrix3 out;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        for (int k = 0; k < 3; ++k) out.m_[r][c] += x.m_[r][k] * y.m_[k][c];
    return out;
  }

  bool is_unitriangular() const {
    for (int r = 0; r < 3; ++r) {
      if (m_[r][r] != 1) return false;
      for (int c = 0; c < r; ++c)
        if (m_[r][c] != 0) return false;
    }
    return true;
  }

  /// Inverse of an upper unitriangular matrix.
  IntMatrix3 unitriangular_inverse() const {
    if (!is_unitriangular()) throw Error("matrix is not upper unitriangular");
    const Integer& p = m_[0][1];
    const Integer& q = m_[1][2];
    const Integer& s = m_[0][2];
    return IntMatrix3({Row{1, -p, p * q - s}, Row{0, 1, -q}, Row{0, 0, 1}});
  }

  friend bool operator==(const IntMatrix3&, const IntMatrix3&) = default;

  std::string to_string() const {
    std::string s = "[";
    for (int r = 0; r < 3; ++r) {
      s += r ? ", [" : "[";
      for (int c = 0; c < 3; ++c) s += (c ? ", " : "") + m_[r][c].str();
      s += "]";
    }
    return s + "]";
  }

 private:
  std::array<Row, 3> m_{};
};

namespace detail {

inline void require_faithful(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) throw Error("K_2 -> UT_3(Z) needs nonzero parameters a and b");
}

}  // namespace detail

/// A^alpha B^beta C^gamma with C = [A,B]; (alpha, beta, gamma) are the K_2
/// exponents of x1, x2, [x1,x2].
inline IntMatrix3 k2_rep(const Integer& a, const Integer& b, const Integer& alpha, const Integer& beta,
                         const Integer& gamma) {
  detail::require_faithful(a, b);
  using Row = IntMatrix3::Row;
  return IntMatrix3({Row{1, a * alpha, a * b * (alpha * beta + gamma)}, Row{0, 1, b * beta}, Row{0, 0, 1}});
}

inline IntMatrix3 k2_rep(const KnElement& g, const Integer& a = 1, const Integer& b = 1) {
  if (g.n() != 2) throw MismatchError("k2_rep needs an element of K_2");
  return k2_rep(a, b, g.exponent(0), g.exponent(1), g.exponent(2));
}

/// Inverse of k2_rep: recovers (alpha, beta, gamma) from the matrix.
inline std::array<Integer, 3> k2_coordinates(const IntMatrix3& m, const Integer& a = 1, const Integer& b = 1) {
  detail::require_faithful(a, b);
  if (!m.is_unitriangular()) throw Error("matrix is not in UT_3(Z)");
  const Integer alpha = m(0, 1) / a;
  const Integer beta = m(1, 2) / b;
  if (alpha * a != m(0, 1) || beta * b != m(1, 2) || m(0, 2) % (a * b) != 0)
    throw Error("matrix is not in the image of K_2");
  return {alpha, beta, m(0, 2) / (a * b) - alpha * beta};
}

/// Product of A^{+-1}, B^{+-1} along a word in x1, x2.
inline IntMatrix3 k2_evaluate(const FreeWord& w, const Integer& a = 1, const Integer& b = 1) {
  detail::require_faithful(a, b);
  using Row = IntMatrix3::Row;
  const IntMatrix3 A({Row{1, a, 0}, Row{0, 1, 0}, Row{0, 0, 1}});
  const IntMatrix3 B({Row{1, 0, 0}, Row{0, 1, b}, Row{0, 0, 1}});
  const IntMatrix3 Ai = A.unitriangular_inverse();
  const IntMatrix3 Bi = B.unitriangular_inverse();
  IntMatrix3 acc = IntMatrix3::identity();
  for (int k : w.letters()) {
    switch (k) {
      case 1: acc = acc * A; break;
      case -1: acc = acc * Ai; break;
      case 2: acc = acc * B; break;
      case -2: acc = acc * Bi; break;
      default: throw Error("word is not over x1, x2");
    }
  }
  return acc;
}

/// Decides equality in K_2 by comparing UT_3(Z) images.
inline bool k2_oracle_equals(const FreeWord& w1, const FreeWord& w2, const Integer& a = 1, const Integer& b = 1) {
  return k2_evaluate(w1, a, b) == k2_evaluate(w2, a, b);
}

}  // namespace hbraid
