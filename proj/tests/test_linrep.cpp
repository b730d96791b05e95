#include "hbraid/linrep.hpp"
#include "random_words.hpp"

#include <gtest/gtest.h>

using namespace hbraid;
using hbraid::testing::random_free_word;
using hbraid::testing::random_int;
using Row = IntMatrix3::Row;

TEST(K2Rep, Examples) {
  EXPECT_EQ(k2_rep(1, 1, 1, 0, 0), IntMatrix3({Row{1, 1, 0}, Row{0, 1, 0}, Row{0, 0, 1}}));
  EXPECT_EQ(k2_rep(2, 3, 0, 0, 1), IntMatrix3({Row{1, 0, 6}, Row{0, 1, 0}, Row{0, 0, 1}}));
  EXPECT_EQ(k2_rep(2, 3, 1, 1, 0), IntMatrix3({Row{1, 2, 6}, Row{0, 1, 3}, Row{0, 0, 1}}));
  EXPECT_THROW(k2_rep(0, 1, 1, 0, 0), Error);
  EXPECT_THROW(k2_rep(1, 0, 1, 0, 0), Error);
}

TEST(K2Rep, CommutatorImageIsC) {
  for (int a : {1, -1, 2, 7})
    for (int b : {1, 3, -5}) {
      auto c = k2_evaluate(FreeWord({-1, -2, 1, 2}), a, b);
      EXPECT_EQ(c, k2_rep(a, b, 0, 0, 1));
      EXPECT_EQ(c(0, 2), a * b);
    }
}

TEST(K2Rep, ClosedFormMatchesProduct) {
  for (int trial = 0; trial < 100; ++trial) {
    int al = random_int(-6, 6), be = random_int(-6, 6), ga = random_int(-6, 6);
    int a = random_int(1, 4), b = -random_int(1, 4);
    IntMatrix3 prod = IntMatrix3::identity();
    auto A = k2_evaluate(FreeWord({1}), a, b), B = k2_evaluate(FreeWord({2}), a, b);
    auto C = k2_evaluate(FreeWord({-1, -2, 1, 2}), a, b);
    auto power = [](IntMatrix3 m, int e) {
      IntMatrix3 r = IntMatrix3::identity();
      if (e < 0) m = m.unitriangular_inverse();
      for (int i = 0; i < std::abs(e); ++i) r = r * m;
      return r;
    };
    prod = power(A, al) * power(B, be) * power(C, ga);
    EXPECT_EQ(prod, k2_rep(a, b, al, be, ga));
  }
}

TEST(K2Rep, HomomorphismOverCollection) {
  for (int trial = 0; trial < 100; ++trial) {
    auto g = collect(random_free_word(2, 15), 2);
    auto h = collect(random_free_word(2, 15), 2);
    EXPECT_EQ(k2_rep(g * h, 2, -3), k2_rep(g, 2, -3) * k2_rep(h, 2, -3));
  }
}

TEST(K2Rep, Faithful) {
  for (int trial = 0; trial < 200; ++trial) {
    Integer al = random_int(-20, 20), be = random_int(-20, 20), ga = random_int(-20, 20);
    auto coords = k2_coordinates(k2_rep(3, -2, al, be, ga), 3, -2);
    EXPECT_EQ(coords[0], al);
    EXPECT_EQ(coords[1], be);
    EXPECT_EQ(coords[2], ga);
  }
}

TEST(K2Oracle, Examples) {
  EXPECT_FALSE(k2_oracle_equals(FreeWord({1, 2}), FreeWord({2, 1})));
  // x1 x2 x1^{-1} x2^{-1} = [x1^{-1}, x2^{-1}], and in K_2 that equals [x1, x2]
  EXPECT_TRUE(k2_oracle_equals(FreeWord({1, 2, -1, -2}), FreeWord({-1, -2, 1, 2})));
  auto w = random_free_word(2, 30);
  EXPECT_TRUE(k2_oracle_equals(w, w));
}

TEST(K2Oracle, AgreesWithCollection) {
  for (int trial = 0; trial < 300; ++trial) {
    auto u = random_free_word(2, random_int(0, 10));
    auto v = random_free_word(2, random_int(0, 10));
    if (trial % 3 == 0) v = u * commutator(commutator(FreeWord({1}), FreeWord({2})), random_free_word(2, 4));
    EXPECT_EQ(k2_oracle_equals(u, v), collect(u, 2) == collect(v, 2));
  }
}
