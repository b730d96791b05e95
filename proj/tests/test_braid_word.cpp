#include "hbraid/braid_word.hpp"
#include "random_words.hpp"

#include <gtest/gtest.h>

using namespace hbraid;
using hbraid::testing::random_braid_word;

TEST(Parse, Tokens) {
  EXPECT_EQ(parse_braid_word("s1 s2^-1", 3).letters(), (std::vector<int>{1, -2}));
  EXPECT_TRUE(parse_braid_word("", 3).empty());
  EXPECT_TRUE(parse_braid_word("   ", 3).empty());
  EXPECT_EQ(parse_braid_word("1 -2 2", 3).letters(), (std::vector<int>{1, -2, 2}));
  EXPECT_EQ(parse_braid_word("s2^2 s1^-2", 3).letters(), (std::vector<int>{2, 2, -1, -1}));
}

TEST(Parse, GoldsmithText) {
  auto w = parse_braid_word("s1 s2^2 s1^2 s2^-2 s1^-2 s2^2 s1^-2 s2^-2 s1", 3);
  EXPECT_EQ(w.letters(), (std::vector<int>{1, 2, 2, 1, 1, -2, -2, -1, -1, 2, 2, -1, -1, -2, -2, 1}));
  EXPECT_EQ(w, goldsmith_word());
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_braid_word("s3", 3), ParseError);
  EXPECT_THROW(parse_braid_word("s0", 3), ParseError);
  EXPECT_THROW(parse_braid_word("x1", 3), ParseError);
  EXPECT_THROW(parse_braid_word("s1^", 3), ParseError);
  EXPECT_THROW(parse_braid_word("s1^0", 3), ParseError);
  EXPECT_THROW(parse_braid_word("0", 3), ParseError);
  EXPECT_THROW(parse_braid_word("-3", 3), ParseError);
  EXPECT_THROW(parse_braid_word("s1s2", 3), ParseError);
}

TEST(BraidWord, MixedStrandCountsAreRejected) {
  EXPECT_THROW(BraidWord(3, {1}) * BraidWord(4, {1}), MismatchError);
  EXPECT_THROW(BraidWord(3, {3}), Error);
}

TEST(FreeReduce, Examples) {
  EXPECT_TRUE(free_reduce(BraidWord(3, {1, -1})).empty());
  EXPECT_TRUE(free_reduce(BraidWord(3, {1, 2, -2, -1})).empty());
  EXPECT_EQ(free_reduce(BraidWord(3, {1, 2, 1})).letters(), (std::vector<int>{1, 2, 1}));
}

TEST(FreeReduce, IdempotentAndPreservesPermutation) {
  for (int trial = 0; trial < 200; ++trial) {
    auto w = random_braid_word(5, 30);
    auto r = free_reduce(w);
    EXPECT_EQ(free_reduce(r), r);
    EXPECT_EQ(permutation(r), permutation(w));
    for (std::size_t i = 1; i < r.size(); ++i) EXPECT_NE(r.letters()[i], -r.letters()[i - 1]);
  }
}

TEST(Permutation, Examples) {
  EXPECT_EQ(permutation(BraidWord(3, {1})), Permutation::transposition(3, 1, 2));
  EXPECT_TRUE(permutation(BraidWord(3)).is_identity());
  EXPECT_TRUE(permutation(goldsmith_word()).is_identity());
}

// Brute force: track where each strand position goes by swapping array slots.
TEST(Permutation, GoldsmithBySwapping) {
  std::vector<int> slots{1, 2, 3};
  const auto word = goldsmith_word();
  for (int k : word.letters()) std::swap(slots[std::abs(k) - 1], slots[std::abs(k)]);
  EXPECT_EQ(slots, (std::vector<int>{1, 2, 3}));
}

TEST(Permutation, Homomorphism) {
  for (int trial = 0; trial < 200; ++trial) {
    auto u = random_braid_word(6, 12);
    auto v = random_braid_word(6, 12);
    EXPECT_EQ(permutation(u * v), permutation(u).then(permutation(v)));
  }
}

TEST(PureGen, Examples) {
  EXPECT_EQ(pure_gen(1, 2, 3).letters(), (std::vector<int>{1, 1}));
  EXPECT_EQ(pure_gen(1, 3, 3).letters(), (std::vector<int>{2, 1, 1, -2}));
  EXPECT_EQ(pure_gen(2, 4, 4).letters(), (std::vector<int>{3, 2, 2, -3}));
  EXPECT_EQ(pure_gen(1, 4, 4).letters(), (std::vector<int>{3, 2, 1, 1, -2, -3}));
  EXPECT_THROW(pure_gen(2, 2, 3), Error);
  EXPECT_THROW(pure_gen(1, 4, 3), Error);
}

TEST(PureGen, PureBraidsHaveTrivialPermutation) {
  for (int n = 2; n <= 7; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) EXPECT_TRUE(permutation(pure_gen(i, j, n)).is_identity());
}
