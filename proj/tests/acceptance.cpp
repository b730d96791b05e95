// Acceptance gate: one PASS/FAIL line per criterion, details indented below.
// Exit status is the number of failed criteria.

#include "hbraid/artin.hpp"
#include "hbraid/bhat3.hpp"
#include "hbraid/burau.hpp"
#include "hbraid/hall_basis.hpp"
#include "hbraid/linrep.hpp"
#include "hbraid/magnus.hpp"
#include "hbraid/reduced_free.hpp"

#include "random_words.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace hbraid;
using hbraid::testing::random_braid_word;
using hbraid::testing::random_free_word;
using hbraid::testing::random_int;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    pass = pass && ok;
  }
  void note(const std::string& what) { notes.push_back("     " + what); }
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> body;
};

const BraidWord b12 = pure_gen(1, 2, 3);
const BraidWord b13 = pure_gen(1, 3, 3);
const BraidWord b23 = pure_gen(2, 3, 3);
const BraidWord zw = commutator(b23, b13);

Outcome goldsmith() {
  Outcome o;
  const BraidWord w = goldsmith_word();
  o.check(w.size() == 16, "word has 16 letters");
  o.check(!artin_free(w).is_identity(), "non-identity under the Artin action on F_3");
  o.check(!burau(w).is_identity(), "Burau matrix is not the identity over Z[t, t^-1]");
  o.check(artin_k(w).is_identity(), "identity in Aut K_3");
  o.check(permutation(w).is_identity(), "identity permutation");
  o.check(from_braid_word(w).is_identity(), "normal form (0,0,0,0,e)");
  return o;
}

Outcome burau_obstruction() {
  Outcome o;
  auto rep = homotopy_obstruction_system();
  for (const auto& rel : rep.relations)
    o.note(rel.name + ": " + std::to_string(rel.nonzero.size()) + " nonzero entries, " +
           std::to_string(rel.zero_entries) + " identically zero");
  o.check(rep.all_vanish_at_one, "every obstruction entry vanishes at t = 1");
  o.check(rep.gcd_is_power_of_t_minus_1,
          "gcd over Q[t] is a unit times (t-1)^m, m >= 1 (computed gcd: " + rep.gcd.to_string() + ")");
  std::string roots;
  for (const auto& r : rep.common_rational_roots) roots += (roots.empty() ? "" : ", ") + to_string(r);
  o.note("gcd = (t-1)^" + std::to_string(rep.multiplicity_at_one) + " * (" + rep.cofactor.to_string() +
         "); common rational roots: {" + roots + "}");
  o.note("reference polynomials matched up to +-t^k (soft): " + std::to_string(rep.matched_references()) + " of " +
         std::to_string(rep.references.size()));
  for (std::size_t i = 0; i < rep.references.size(); ++i)
    if (rep.references[i].relation < 0)
      o.note("  no derived entry matches #" + std::to_string(i + 1) + ": " +
             rep.references[i].reference.to_string());
  o.check(rep.pure_generators_trivial_at_one, "a12, a13, a23 specialize to the identity at t = 1");
  o.check(rep.image_order_at_one == 6,
          "image of B_3 at t = 1 has " + std::to_string(rep.image_order_at_one) + " elements (expected 6)");
  return o;
}

Outcome torsion() {
  Outcome o;
  auto cert = torsion_certificate();
  for (const auto& item : cert.items) o.check(item.pass, item.name + ": " + item.detail);

  int bad2 = 0, bad3 = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Integer a = random_int(-10, 10), b = random_int(-10, 10), c = random_int(-10, 10), d = random_int(-10, 10);
    if (power(Bhat3{a, b, c, d, Rep3::s2}, 2) != Bhat3{a + b, a + b, 2 * c + 1, a * c + b * (b - c + a - 1), Rep3::e})
      ++bad2;
    Integer s = a + b + c + 1;
    if (power(Bhat3{a, b, c, d, Rep3::s1s2}, 3) !=
        Bhat3{s, s, s, a * (a + 2 * c - b) + b * b + c * c - b * c + 3 * d + 3 * b, Rep3::e})
      ++bad3;
  }
  o.check(bad2 == 0, "square closed form on 200 random tuples in [-10,10]^4 (" + std::to_string(bad2) + " off)");
  o.check(bad3 == 0, "cube closed form on 200 random tuples in [-10,10]^4 (" + std::to_string(bad3) + " off)");

  int sampled = 0, torsion_found = 0;
  while (sampled < 500) {
    Bhat3 g{random_int(-6, 6), random_int(-6, 6), random_int(-6, 6), random_int(-6, 6),
            kAllReps[random_int(0, 5)]};
    if (g.is_identity()) continue;
    ++sampled;
    Bhat3 x = g;
    for (int m = 2; m <= 12; ++m) {
      x = multiply(x, g);
      if (x.is_identity()) {
        ++torsion_found;
        break;
      }
    }
  }
  o.check(torsion_found == 0, "500 random non-identity elements have g^m != e for 2 <= m <= 12");
  return o;
}

Outcome weight_three() {
  Outcome o;
  for (const auto& v : weight_three_report()) {
    o.check(v.trivial_in_k3 == v.expected_trivial,
            v.name + (v.expected_trivial ? " collects to the identity in K_3" : " is not trivial in K_3"));
    o.check(v.trivial_via_p4 == v.trivial_in_k3, v.name + " agrees under x_i -> a_i4 in Aut K_4");
  }
  return o;
}

Outcome conjugation_formulas() {
  Outcome o;
  struct Formula {
    std::string name;
    BraidWord x;
    BraidWord by;
    Bhat3 rhs;
  };
  std::vector<Formula> fs;
  for (int k = -3; k <= 3; ++k) {
    std::string ks = std::to_string(k);
    fs.push_back({"b13^(b12^" + ks + ") = b13 z^" + ks, b13, b12.pow(k), {0, 1, 0, k, Rep3::e}});
    fs.push_back({"b23^(b12^" + ks + ") = b23 z^" + std::to_string(-k), b23, b12.pow(k), {0, 0, 1, -k, Rep3::e}});
    fs.push_back({"z^(b12^" + ks + ") = z", zw, b12.pow(k), {0, 0, 0, 1, Rep3::e}});
  }
  const BraidWord s1(3, {1}), s2(3, {2}), s1i(3, {-1}), s2i(3, {-2});
  fs.push_back({"b12^s1 = b12", b12, s1, {1, 0, 0, 0, Rep3::e}});
  fs.push_back({"b12^(s1^-1) = b12", b12, s1i, {1, 0, 0, 0, Rep3::e}});
  fs.push_back({"b13^s1 = b23 z^-1", b13, s1, {0, 0, 1, -1, Rep3::e}});
  fs.push_back({"b23^s1 = b13", b23, s1, {0, 1, 0, 0, Rep3::e}});
  fs.push_back({"b13^(s1^-1) = b23", b13, s1i, {0, 0, 1, 0, Rep3::e}});
  fs.push_back({"b23^(s1^-1) = b13 z^-1", b23, s1i, {0, 1, 0, -1, Rep3::e}});
  fs.push_back({"z^(s1^-1) = z^-1", zw, s1i, {0, 0, 0, -1, Rep3::e}});
  fs.push_back({"b12^s2 = b13 z^-1", b12, s2, {0, 1, 0, -1, Rep3::e}});
  fs.push_back({"b13^s2 = b12", b13, s2, {1, 0, 0, 0, Rep3::e}});
  fs.push_back({"b23^s2 = b23", b23, s2, {0, 0, 1, 0, Rep3::e}});
  fs.push_back({"b23^(s2^-1) = b23", b23, s2i, {0, 0, 1, 0, Rep3::e}});
  fs.push_back({"b12^(s2^-1) = b13", b12, s2i, {0, 1, 0, 0, Rep3::e}});
  fs.push_back({"b13^(s2^-1) = b12 z^-1", b13, s2i, {1, 0, 0, -1, Rep3::e}});
  fs.push_back({"z^(s2^-1) = z^-1", zw, s2i, {0, 0, 0, -1, Rep3::e}});

  int ok_aut = 0, ok_nf = 0;
  for (const auto& f : fs) {
    BraidWord lhs = conjugate(f.x, f.by);
    bool aut = permutation(lhs).is_identity() && artin_k(lhs) == to_aut_k3(f.rhs);
    bool nf = from_braid_word(lhs) == f.rhs;
    ok_aut += aut ? 1 : 0;
    ok_nf += nf ? 1 : 0;
    if (!aut || !nf) o.check(false, f.name);
  }
  o.check(ok_aut == static_cast<int>(fs.size()),
          std::to_string(ok_aut) + "/" + std::to_string(fs.size()) + " formulas hold in Aut K_3 via the bridge");
  o.check(ok_nf == static_cast<int>(fs.size()),
          std::to_string(ok_nf) + "/" + std::to_string(fs.size()) + " formulas hold in the normal form");
  return o;
}

Outcome relation_suites() {
  Outcome o;
  for (int n = 3; n <= 5; ++n) {
    auto checks = verify_relations(n);
    int failed = 0;
    for (const auto& c : checks)
      if (!c.pass) {
        ++failed;
        o.check(false, "n=" + std::to_string(n) + " " + c.relation_id + " " + c.instance);
      }
    std::set<std::string> families;
    for (const auto& c : checks) families.insert(c.relation_id);
    o.check(failed == 0, "n=" + std::to_string(n) + ": " + std::to_string(checks.size()) + " instances over " +
                             std::to_string(families.size()) + " families hold in Aut K_n");
  }
  return o;
}

Outcome structural_ranks() {
  Outcome o;
  bool counts = true;
  for (int n = 1; n <= 6; ++n) {
    auto basis = HallBasis::get(n);
    Integer fact = 1;
    for (int k = 1; k <= n; ++k) {
      if (k > 1) fact *= k - 1;
      Integer binom = 1;
      for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
      if (basis->count_of_weight(k) != fact * binom) counts = false;
    }
  }
  o.check(counts, "basis counts equal (k-1)! C(n,k) for n <= 6");
  for (int n = 2; n <= 5; ++n) {
    int nontrivial = 0;
    for (int trial = 0; trial < 100; ++trial) {
      FreeWord c = random_free_word(n, random_int(1, 3));
      for (int k = 0; k < n; ++k) c = commutator(c, random_free_word(n, random_int(1, 3)));
      if (!collect(c, n).is_identity() || !(magnus(c, n) == ReducedTensor::one(n))) ++nontrivial;
    }
    o.check(nontrivial == 0, "n=" + std::to_string(n) + ": 100 random weight-" + std::to_string(n + 1) +
                                 " commutators are trivial by collection and by Magnus");
  }
  return o;
}

// Pairs are equal by construction half of the time (a relator of K_n
// inserted at a random position), otherwise independent.
std::pair<FreeWord, FreeWord> random_pair(int n) {
  FreeWord u = random_free_word(n, random_int(0, 10));
  if (random_int(0, 1) == 0) return {u, random_free_word(n, random_int(0, 10))};
  int i = random_int(1, n);
  FreeWord g = random_free_word(n, random_int(1, 4));
  FreeWord xi = FreeWord::generator(random_int(0, 1) ? i : -i);
  FreeWord relator = commutator(xi, g.inverse() * xi * g);
  FreeWord h = random_free_word(n, random_int(0, 3));
  relator = h.inverse() * relator * h;
  auto cut = static_cast<std::size_t>(random_int(0, static_cast<int>(u.size())));
  std::vector<int> head(u.letters().begin(), u.letters().begin() + cut);
  std::vector<int> tail(u.letters().begin() + cut, u.letters().end());
  return {u, FreeWord(head) * relator * FreeWord(tail)};
}

Outcome oracle_concordance() {
  Outcome o;
  int agree = 0, equal = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int n = random_int(2, 5);
    auto [u, v] = random_pair(n);
    bool by_collection = collect(u, n) == collect(v, n);
    bool by_magnus = magnus(u, n) == magnus(v, n);
    agree += by_collection == by_magnus ? 1 : 0;
    equal += by_collection ? 1 : 0;
  }
  o.check(agree == 500, "collection and Magnus agree on " + std::to_string(agree) + "/500 pairs (" +
                            std::to_string(equal) + " equal)");
  agree = equal = 0;
  for (int trial = 0; trial < 500; ++trial) {
    auto [u, v] = random_pair(2);
    bool by_collection = collect(u, 2) == collect(v, 2);
    bool by_matrix = k2_oracle_equals(u, v, random_int(1, 3), -random_int(1, 3));
    agree += by_collection == by_matrix ? 1 : 0;
    equal += by_collection ? 1 : 0;
  }
  o.check(agree == 500, "collection in K_2 and UT_3(Z) agree on " + std::to_string(agree) + "/500 pairs (" +
                            std::to_string(equal) + " equal)");
  return o;
}

Outcome unipotent_structure() {
  Outcome o;
  auto nf = [](const BraidWord& w) { return from_braid_word(w); };
  auto x = [](int k) { return FreeWord::generator(k); };
  // a13 -> x1, a23 -> x2
  o.check(nf(b13 * conjugate(b13, b23)) == nf(conjugate(b13, b23) * b13), "a13 . a13^a23 = a13^a23 . a13 in B^_3");
  o.check(nf(b23 * conjugate(b23, b13)) == nf(conjugate(b23, b13) * b23), "a23 . a23^a13 = a23^a13 . a23 in B^_3");
  FreeWord c1 = x(2).inverse() * x(1) * x(2), c2 = x(1).inverse() * x(2) * x(1);
  o.check(collect(x(1) * c1, 2) == collect(c1 * x(1), 2) && collect(x(2) * c2, 2) == collect(c2 * x(2), 2),
          "both relations hold in K_2");
  o.check(nf(commutator(zw, b23)).is_identity() && nf(commutator(zw, b13)).is_identity(),
          "[[b23,b13],b23] = [[b23,b13],b13] = 1 in B^_3");
  FreeWord zf = commutator(x(2), x(1));
  o.check(collect(commutator(zf, x(2)), 2).is_identity() && collect(commutator(zf, x(1)), 2).is_identity(),
          "[[x2,x1],x2] = [[x2,x1],x1] = 1 in K_2");
  int collisions = 0, pairs = 0;
  while (pairs < 300) {
    Bhat3 g{0, random_int(-5, 5), random_int(-5, 5), random_int(-5, 5), Rep3::e};
    Bhat3 h{0, random_int(-5, 5), random_int(-5, 5), random_int(-5, 5), Rep3::e};
    if (g == h) continue;
    ++pairs;
    if (to_aut_k3(g) == to_aut_k3(h)) ++collisions;
  }
  o.check(collisions == 0, "300 random distinct b13^a b23^b z^c give distinct automorphisms of K_3");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "Goldsmith braid", 1, goldsmith},
      {"AC2", "Burau obstruction system", 5, burau_obstruction},
      {"AC3", "torsion-freeness certificate", 30, torsion},
      {"AC4", "weight-three commutators in K_3", 5, weight_three},
      {"AC5", "conjugation formulas", 5, conjugation_formulas},
      {"AC6", "relation suites n = 3, 4, 5", 60, relation_suites},
      {"AC7", "structural ranks", 60, structural_ranks},
      {"AC8", "oracle concordance", 60, oracle_concordance},
      {"AC9", "unipotent subgroup structure", 5, unipotent_structure},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out.check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs <= c.budget_seconds;
    bool pass = out.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("%s %s: %s (%.2f s of %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.title,
                secs, c.budget_seconds);
    for (const auto& n : out.notes) std::printf("    %s\n", n.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
