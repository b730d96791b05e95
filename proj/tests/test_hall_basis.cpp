#include "hbraid/hall_basis.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <vector>

using namespace hbraid;

namespace {

long long factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }
long long choose(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// Lyndon by rotations: primitive and strictly smaller than every nontrivial rotation.
bool lyndon_by_rotation(const std::vector<int>& w) {
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::vector<int> rot(w.begin() + r, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + r);
    if (!(w < rot)) return false;
  }
  return true;
}

// Counts squarefree Lyndon words of length k over {1..n} among all n^k words.
long long brute_force_count(int n, int k) {
  long long count = 0;
  std::vector<int> w(k, 1);
  while (true) {
    std::vector<bool> seen(n + 1, false);
    bool squarefree = true;
    for (int x : w) {
      if (seen[x]) squarefree = false;
      seen[x] = true;
    }
    if (squarefree && lyndon_by_rotation(w)) ++count;
    int p = k - 1;
    while (p >= 0 && w[p] == n) w[p--] = 1;
    if (p < 0) break;
    ++w[p];
  }
  return count;
}

using Poly = std::map<std::vector<int>, long long>;

Poly expand(const std::vector<HallCommutator>& basis, int i) {
  const auto& c = basis[i];
  if (c.is_generator()) return {{c.word, 1}};
  Poly a = expand(basis, c.left), b = expand(basis, c.right), out;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) {
      std::vector<int> uv = u, vu = v;
      uv.insert(uv.end(), v.begin(), v.end());
      vu.insert(vu.end(), u.begin(), u.end());
      out[uv] += x * y;
      out[vu] -= x * y;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST(HallBasis, SmallCases) {
  auto b1 = HallBasis::get(1);
  ASSERT_EQ(b1->size(), 1);
  EXPECT_EQ(b1->name(0), "x1");

  auto b2 = HallBasis::get(2);
  ASSERT_EQ(b2->size(), 3);
  EXPECT_EQ(b2->name(0), "x1");
  EXPECT_EQ(b2->name(1), "x2");
  EXPECT_EQ(b2->name(2), "[x1,x2]");

  auto b3 = HallBasis::get(3);
  EXPECT_EQ(b3->size(), 8);
  EXPECT_EQ(b3->count_of_weight(1), 3);
  EXPECT_EQ(b3->count_of_weight(2), 3);
  EXPECT_EQ(b3->count_of_weight(3), 2);
  EXPECT_EQ(b3->name(6), "[x1,[x2,x3]]");
  EXPECT_EQ(b3->name(7), "[[x1,x3],x2]");
}

TEST(HallBasis, CountsMatchEnumerationAndFormula) {
  for (int n = 1; n <= 6; ++n) {
    auto basis = HallBasis::get(n);
    long long total = 0;
    for (int k = 1; k <= n; ++k) {
      const long long formula = factorial(k - 1) * choose(n, k);
      EXPECT_EQ(brute_force_count(n, k), formula) << "n=" << n << " k=" << k;
      EXPECT_EQ(basis->count_of_weight(k), formula) << "n=" << n << " k=" << k;
      total += formula;
    }
    EXPECT_EQ(basis->size(), total);
  }
}

TEST(HallBasis, OrderedByWeightThenLex) {
  auto basis = HallBasis::get(5);
  for (int i = 1; i < basis->size(); ++i) {
    const auto& a = (*basis)[i - 1].word;
    const auto& b = (*basis)[i].word;
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
  }
}

TEST(HallBasis, CapacityIsEnforced) {
  EXPECT_THROW(HallBasis::get(8), CapacityError);
  EXPECT_THROW(HallBasis::get(0), Error);
  EXPECT_NO_THROW(HallBasis::get(7));
}

TEST(HallBasis, SupportsAreSquarefree) {
  auto basis = HallBasis::get(6);
  for (const auto& c : basis->elements()) {
    EXPECT_EQ(std::popcount(c.support), c.weight());
    EXPECT_EQ(c.word.front(), *std::min_element(c.word.begin(), c.word.end()));
  }
}

// Each stored commutator rule equals the Lie bracket after expanding both
// sides into noncommutative polynomials.
TEST(HallBasis, CommutatorRulesMatchAssociativeExpansion) {
  for (int n = 2; n <= 5; ++n) {
    auto basis = HallBasis::get(n);
    std::vector<Poly> expansions;
    for (int i = 0; i < basis->size(); ++i) expansions.push_back(expand(basis->elements(), i));
    for (int j = 0; j < basis->size(); ++j) {
      for (const auto& rule : basis->rules_for(j)) {
        Poly lhs;
        for (const auto& [u, x] : expansions[rule.i])
          for (const auto& [v, y] : expansions[j]) {
            std::vector<int> uv = u, vu = v;
            uv.insert(uv.end(), v.begin(), v.end());
            vu.insert(vu.end(), u.begin(), u.end());
            lhs[uv] += x * y;
            lhs[vu] -= x * y;
          }
        std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
        Poly rhs;
        for (const auto& [b, coef] : rule.value)
          for (const auto& [w, c] : expansions[b]) rhs[w] += static_cast<long long>(coef) * c;
        std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
        ASSERT_EQ(lhs, rhs) << basis->name(rule.i) << " vs " << basis->name(j);
      }
    }
  }
}

TEST(HallBasis, CommutatorOfOverlappingSupportsIsTrivial) {
  auto basis = HallBasis::get(4);
  // x1 and [x1,x2] share x1
  EXPECT_TRUE(basis->commutator(basis->index_of({1, 2}).value(), 0).empty());
  // [x2, x1] = -[x1, x2]
  auto v = basis->commutator(1, 0);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].first, basis->index_of({1, 2}).value());
  EXPECT_EQ(v[0].second, -1);
}
