#pragma once

// Command-line front end. Exit status: 0 true/success, 1 false, 2 usage or
// parse error.

#include "hbraid/artin.hpp"
#include "hbraid/bhat3.hpp"
#include "hbraid/braid_word.hpp"
#include "hbraid/burau.hpp"
#include "hbraid/linrep.hpp"
#include "hbraid/reduced_free.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace hbraid::cli {

using json = nlohmann::ordered_json;

inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kUsage = 2;

struct CommandResult {
  std::string command;
  std::vector<std::string> input;
  json payload;
  int exit_status = kUsage;
  std::string output;  // what goes to stdout
  std::string error;   // what goes to stderr
};

// ---- serialization --------------------------------------------------------

inline json to_json(const Integer& v) {
  if (fits_int64(v)) return static_cast<std::int64_t>(v);
  return v.str();
}

inline json to_json(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1) return to_json(Integer(boost::multiprecision::numerator(v)));
  return hbraid::to_string(v);
}

inline json to_json(const KnElement& g) {
  json exps = json::array();
  for (int i = 0; i < static_cast<int>(g.exponents().size()); ++i)
    if (g.exponent(i) != 0) exps.push_back(json::array({i, to_json(g.exponent(i))}));
  return {{"n", g.n()}, {"exponents", exps}, {"normal_form", g.to_string()}};
}

inline json to_json(const Bhat3& g) {
  return {{"alpha", to_json(g.alpha)},
          {"beta", to_json(g.beta)},
          {"gamma", to_json(g.gamma)},
          {"delta", to_json(g.delta)},
          {"lam", std::string(rep_name(g.lam))}};
}

inline Bhat3 bhat3_from_json(const json& j) {
  auto num = [&](const char* key) {
    const auto& v = j.at(key);
    return v.is_string() ? Integer(v.get<std::string>()) : Integer(v.get<std::int64_t>());
  };
  return {num("alpha"), num("beta"), num("gamma"), num("delta"), rep_from_name(j.at("lam").get<std::string>())};
}

/// [[k, c], ...] in ascending k.
inline json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [k, c] : p.terms()) terms.push_back(json::array({k, to_json(c)}));
  return terms;
}

inline json to_json(const BurauMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.size(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

inline json to_json(const IntMatrix3& m) {
  json rows = json::array();
  for (int r = 0; r < 3; ++r) {
    json row = json::array();
    for (int c = 0; c < 3; ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

inline json to_json(const BraidWord& w) { return {{"strands", w.strands()}, {"letters", w.letters()}}; }

inline json to_json(const Permutation& p) { return p.images(); }

// ---- text helpers ---------------------------------------------------------

inline std::string matrix_text(const BurauMatrix& m) {
  std::string s;
  for (int r = 0; r < m.size(); ++r) {
    s += "w" + std::to_string(r + 1) + " ->";
    bool first = true;
    for (int c = 0; c < m.size(); ++c) {
      if (m(r, c).is_zero()) continue;
      s += std::string(first ? " " : " + ") + "(" + m(r, c).to_string() + ") w" + std::to_string(c + 1);
      first = false;
    }
    if (first) s += " 0";
    s += "\n";
  }
  return s;
}

inline std::string permutation_text(const Permutation& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.images().size(); ++i) s += (i ? " " : "") + std::to_string(p.images()[i]);
  return s + "]";
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---- command implementations ----------------------------------------------

struct Options {
  int strands = 3;
  int cap = kDefaultCap;
  bool json_out = false;
  bool from_stdin = false;
  std::vector<std::string> words;
};

namespace detail {

/// Words from the positional arguments, or from a JSON array on stdin: one
/// word as [1, -2], several as [[1], [2, 2]].
inline std::vector<std::vector<int>> stdin_words(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("stdin is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("stdin must hold a JSON array of letters or of words");
  std::vector<std::vector<int>> out;
  try {
    if (!j.empty() && j.front().is_array())
      for (const auto& w : j) out.push_back(w.get<std::vector<int>>());
    else
      out.push_back(j.get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("stdin words must be integer arrays: ") + e.what());
  }
  return out;
}

inline std::vector<BraidWord> braid_words(const Options& o, std::istream& in, std::size_t expected) {
  std::vector<BraidWord> out;
  if (o.from_stdin)
    for (auto& letters : stdin_words(in)) out.emplace_back(o.strands, std::move(letters));
  else
    for (const auto& w : o.words) out.push_back(parse_braid_word(w, o.strands));
  if (out.size() != expected)
    throw ParseError("expected " + std::to_string(expected) + " word(s), got " + std::to_string(out.size()));
  return out;
}

inline std::vector<FreeWord> free_words(const Options& o, int rank, std::istream& in, std::size_t expected) {
  std::vector<FreeWord> out;
  if (o.from_stdin)
    for (auto& letters : stdin_words(in)) {
      for (int k : letters)
        if (k == 0 || std::abs(k) > rank) throw ParseError("letter " + std::to_string(k) + " out of range");
      out.emplace_back(std::move(letters));
    }
  else
    for (const auto& w : o.words) out.push_back(parse_free_word(w, rank));
  if (out.size() != expected)
    throw ParseError("expected " + std::to_string(expected) + " word(s), got " + std::to_string(out.size()));
  return out;
}

inline void need_three_strands(const Options& o) {
  if (o.strands != 3) throw ParseError("this command works on three strands only");
}

}  // namespace detail

inline void cmd_reduce(const Options& o, bool free_group, std::istream& in, CommandResult& r) {
  if (free_group) {
    FreeWord w = detail::free_words(o, o.strands, in, 1)[0];
    KnElement g = collect(w, o.strands, o.cap);
    r.payload = to_json(g);
    r.output = g.to_string() + "\n";
  } else {
    BraidWord w = free_reduce(detail::braid_words(o, in, 1)[0]);
    r.payload = to_json(w);
    r.output = (w.empty() ? std::string("e") : w.to_string()) + "\n";
  }
  r.exit_status = kTrue;
}

inline void cmd_perm(const Options& o, std::istream& in, CommandResult& r) {
  Permutation p = permutation(detail::braid_words(o, in, 1)[0]);
  r.payload = {{"permutation", to_json(p)}, {"pure", p.is_identity()}};
  r.output = permutation_text(p) + "\n";
  r.exit_status = kTrue;
}

inline void cmd_heq(const Options& o, std::istream& in, CommandResult& r) {
  auto ws = detail::braid_words(o, in, 2);
  bool eq = homotopy_equal(ws[0], ws[1], ArtinConvention::kStandard, o.cap);
  r.payload = {{"homotopy_equal", eq}};
  r.output = std::string(eq ? "true" : "false") + "\n";
  r.exit_status = eq ? kTrue : kFalse;
}

inline void cmd_htrivial(const Options& o, std::istream& in, CommandResult& r) {
  BraidWord w = detail::braid_words(o, in, 1)[0];
  bool t = is_homotopy_trivial(w, ArtinConvention::kStandard, o.cap);
  r.payload = {{"homotopy_trivial", t}};
  r.output = std::string(t ? "true" : "false") + "\n";
  r.exit_status = t ? kTrue : kFalse;
}

inline void cmd_nf3(const Options& o, std::istream& in, CommandResult& r) {
  detail::need_three_strands(o);
  Bhat3 g = from_braid_word(detail::braid_words(o, in, 1)[0]);
  r.payload = to_json(g);
  r.output = to_string(g) + "\n";
  r.exit_status = kTrue;
}

inline void cmd_order3(const Options& o, std::istream& in, CommandResult& r) {
  detail::need_three_strands(o);
  Bhat3 g = from_braid_word(detail::braid_words(o, in, 1)[0]);
  std::string ord(to_string(order(g)));
  r.payload = {{"normal_form", to_json(g)}, {"order", ord}};
  r.output = ord + "\n";
  r.exit_status = kTrue;
}

inline void cmd_power3(const Options& o, long long m, std::istream& in, CommandResult& r) {
  detail::need_three_strands(o);
  Bhat3 g = from_braid_word(detail::braid_words(o, in, 1)[0]);
  Bhat3 p = power(g, m);
  r.payload = {{"base", to_json(g)}, {"power", m}, {"result", to_json(p)}};
  r.output = to_string(p) + "\n";
  r.exit_status = kTrue;
}

inline void cmd_burau(const Options& o, std::optional<std::string> at, std::istream& in, CommandResult& r) {
  BurauMatrix m = burau(detail::braid_words(o, in, 1)[0]);
  r.payload = {{"matrix", to_json(m)}, {"identity", m.is_identity()}};
  r.output = matrix_text(m);
  if (at) {
    Rational t0;
    try {
      t0 = Rational(*at);
    } catch (const std::exception&) {
      throw ParseError("malformed rational '" + *at + "'");
    }
    RationalMatrix s = specialize(m, t0);
    json rows = json::array();
    r.output += "at t = " + *at + ":\n";
    for (int i = 0; i < s.size(); ++i) {
      json row = json::array();
      for (int j = 0; j < s.size(); ++j) {
        row.push_back(to_json(s(i, j)));
        r.output += (j ? " " : "  ") + hbraid::to_string(s(i, j));
      }
      rows.push_back(row);
      r.output += "\n";
    }
    r.payload["specialized"] = {{"t", *at}, {"matrix", rows}};
  }
  r.exit_status = kTrue;
}

inline void cmd_prop2(CommandResult& r) {
  auto rep = homotopy_obstruction_system();
  std::ostringstream out;
  json rels = json::array();
  for (const auto& rel : rep.relations) {
    json entries = json::array();
    out << rel.name << ": " << rel.nonzero.size() << " nonzero entries, " << rel.zero_entries << " zero\n";
    for (const auto& e : rel.nonzero) {
      entries.push_back({{"row", e.row + 1}, {"col", e.col + 1}, {"terms", to_json(e.value)}});
      out << "  (" << e.row + 1 << "," << e.col + 1 << ") " << e.value.to_string() << "\n";
    }
    rels.push_back({{"relation", rel.name}, {"zero_entries", rel.zero_entries}, {"entries", entries}});
  }
  json roots = json::array();
  std::string roots_text;
  for (const auto& x : rep.common_rational_roots) {
    roots.push_back(to_json(x));
    roots_text += (roots_text.empty() ? "" : ", ") + hbraid::to_string(x);
  }
  json refs = json::array();
  for (const auto& m : rep.references) {
    json j = {{"terms", to_json(m.reference)}, {"matched", m.relation >= 0}};
    if (m.relation >= 0) j["at"] = {{"relation", m.relation + 1}, {"row", m.row + 1}, {"col", m.col + 1}};
    refs.push_back(j);
  }
  out << "all entries vanish at t = 1: " << yes_no(rep.all_vanish_at_one) << "\n"
      << "gcd over Q[t]: " << rep.gcd.to_string() << "\n"
      << "factored: (t - 1)^" << rep.multiplicity_at_one << " * (" << rep.cofactor.to_string() << ")\n"
      << "gcd is a power of (t - 1): " << yes_no(rep.gcd_is_power_of_t_minus_1) << "\n"
      << "common rational roots: {" << roots_text << "}\n"
      << "reference polynomials matched up to units: " << rep.matched_references() << " of "
      << rep.references.size() << "\n";
  for (std::size_t i = 0; i < rep.references.size(); ++i)
    if (rep.references[i].relation < 0)
      out << "  unmatched #" << i + 1 << ": " << rep.references[i].reference.to_string() << "\n";
  out << "a12, a13, a23 trivial at t = 1: " << yes_no(rep.pure_generators_trivial_at_one) << "\n"
      << "order of the image of B_3 at t = 1: " << rep.image_order_at_one << "\n";
  r.payload = {{"relations", rels},
               {"all_vanish_at_one", rep.all_vanish_at_one},
               {"gcd", rep.gcd.to_string()},
               {"multiplicity_at_one", rep.multiplicity_at_one},
               {"cofactor", rep.cofactor.to_string()},
               {"gcd_is_power_of_t_minus_1", rep.gcd_is_power_of_t_minus_1},
               {"common_rational_roots", roots},
               {"reference", refs},
               {"pure_generators_trivial_at_one", rep.pure_generators_trivial_at_one},
               {"image_order_at_one", rep.image_order_at_one}};
  r.output = out.str();
  bool only_one = rep.common_rational_roots == std::vector<Rational>{Rational(1)};
  r.exit_status = rep.all_vanish_at_one && only_one ? kTrue : kFalse;
}

inline void cmd_lemma1(CommandResult& r) {
  json rows = json::array();
  std::ostringstream out;
  bool ok = true;
  for (const auto& v : weight_three_report()) {
    bool agree = v.trivial_in_k3 == v.expected_trivial && v.trivial_via_p4 == v.expected_trivial;
    ok = ok && agree;
    rows.push_back({{"commutator", v.name},
                    {"trivial_in_k3", v.trivial_in_k3},
                    {"trivial_via_p4", v.trivial_via_p4},
                    {"expected_trivial", v.expected_trivial}});
    out << v.name << "  K_3: " << (v.trivial_in_k3 ? "trivial" : "nontrivial")
        << "  P^_4: " << (v.trivial_via_p4 ? "trivial" : "nontrivial") << (agree ? "" : "  MISMATCH") << "\n";
  }
  r.payload = {{"verdicts", rows}, {"pass", ok}};
  r.output = out.str();
  r.exit_status = ok ? kTrue : kFalse;
}

inline void cmd_relations(const Options& o, CommandResult& r) {
  auto checks = verify_relations(o.strands, ArtinConvention::kStandard, o.cap);
  json rows = json::array();
  std::ostringstream out;
  int failed = 0;
  for (const auto& c : checks) {
    rows.push_back({{"relation", c.relation_id}, {"instance", c.instance}, {"pass", c.pass}});
    if (!c.pass) {
      ++failed;
      out << "FAIL " << c.relation_id << " " << c.instance << "\n";
    }
  }
  out << checks.size() - failed << " of " << checks.size() << " relation instances hold in Aut K_" << o.strands
      << "\n";
  r.payload = {{"n", o.strands}, {"checks", rows}, {"failed", failed}};
  r.output = out.str();
  r.exit_status = failed == 0 ? kTrue : kFalse;
}

inline void cmd_torsion3(CommandResult& r) {
  auto cert = torsion_certificate();
  json items = json::array();
  std::ostringstream out;
  for (const auto& it : cert.items) {
    items.push_back({{"check", it.name}, {"detail", it.detail}, {"pass", it.pass}});
    out << (it.pass ? "ok    " : "FAIL  ") << it.name << ": " << it.detail << "\n";
  }
  r.payload = {{"items", items}, {"pass", cert.pass()}};
  r.output = out.str();
  r.exit_status = cert.pass() ? kTrue : kFalse;
}

inline void cmd_goldsmith(const Options& o, CommandResult& r) {
  const BraidWord w = goldsmith_word();
  bool free_nontrivial = !artin_free(w).is_identity();
  bool burau_nontrivial = !burau(w).is_identity();
  bool pure = permutation(w).is_identity();
  bool k3_trivial = artin_k(w, ArtinConvention::kStandard, o.cap).is_identity();
  Bhat3 nf = from_braid_word(w);
  bool ok = free_nontrivial && burau_nontrivial && pure && k3_trivial && nf.is_identity();
  r.payload = {{"word", w.to_string()},
               {"nontrivial_in_aut_f3", free_nontrivial},
               {"burau_nontrivial", burau_nontrivial},
               {"pure", pure},
               {"trivial_in_aut_k3", k3_trivial},
               {"normal_form", to_json(nf)},
               {"pass", ok}};
  std::ostringstream out;
  out << "word: " << w.to_string() << "\n"
      << "nontrivial in B_3 (Artin action on F_3): " << yes_no(free_nontrivial) << "\n"
      << "nontrivial in B_3 (Burau matrix): " << yes_no(burau_nontrivial) << "\n"
      << "pure braid: " << yes_no(pure) << "\n"
      << "trivial in Aut K_3: " << yes_no(k3_trivial) << "\n"
      << "normal form: " << to_string(nf) << "\n";
  r.output = out.str();
  r.exit_status = ok ? kTrue : kFalse;
}

inline void cmd_k2rep(const Options& o, long long a, long long b, std::istream& in, CommandResult& r) {
  FreeWord w = detail::free_words(o, 2, in, 1)[0];
  KnElement g = collect(w, 2);
  IntMatrix3 m = k2_rep(g, a, b);
  r.payload = {{"normal_form", to_json(g)}, {"matrix", to_json(m)}};
  r.output = m.to_string() + "\n";
  r.exit_status = kTrue;
}

// ---- dispatch -------------------------------------------------------------

inline CommandResult run(const std::vector<std::string>& args, std::istream& in = std::cin) {
  CommandResult r;
  r.input = args;
  Options o;
  CLI::App app{"Exact computations in braid groups, reduced free groups and homotopy braid groups", "hbraid"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hbraid 1.0");

  auto common = [&](CLI::App* sub, int max_words) {
    sub->add_option("--strands,-n", o.strands, "number of strands (or free rank)")->check(CLI::Range(2, 64));
    sub->add_option("--max-n", o.cap, "largest n allowed for K_n computations")->check(CLI::Range(2, 12));
    sub->add_flag("--json", o.json_out, "emit JSON");
    if (max_words > 0) {
      sub->add_flag("--stdin", o.from_stdin, "read words as JSON arrays from stdin");
      sub->add_option("words", o.words, "words, e.g. \"s1 s2^-1\"")->expected(0, max_words);
    }
  };

  bool free_group = false;
  auto* reduce = app.add_subcommand("reduce", "free reduction of a braid word, or K_n normal form with --free");
  common(reduce, 1);
  reduce->add_flag("--free", free_group, "read a word in x1..xn and collect it in K_n");
  common(app.add_subcommand("perm", "permutation of a braid word"), 1);
  common(app.add_subcommand("heq", "are two braid words equal in the homotopy braid group"), 2);
  common(app.add_subcommand("htrivial", "is a braid word trivial in the homotopy braid group"), 1);
  common(app.add_subcommand("nf3", "normal form on three strands"), 1);
  common(app.add_subcommand("order3", "order of an element on three strands"), 1);
  long long m = 2;
  auto* power3 = app.add_subcommand("power3", "power of an element on three strands");
  common(power3, 1);
  power3->add_option("--power,-m", m, "exponent")->required();
  std::optional<std::string> at;
  auto* burau_cmd = app.add_subcommand("burau", "Burau matrix of a braid word");
  common(burau_cmd, 1);
  burau_cmd->add_option("--at", at, "also specialize at this rational t");
  common(app.add_subcommand("prop2", "Burau obstruction for the homotopy relations on three strands"), 0);
  common(app.add_subcommand("lemma1", "weight-three commutators in K_3"), 0);
  common(app.add_subcommand("relations", "check the defining relation tables in Aut K_n"), 0);
  common(app.add_subcommand("torsion3", "certificate that the three-strand group is torsion-free"), 0);
  common(app.add_subcommand("goldsmith", "the Goldsmith braid demo"), 0);
  long long a = 1, b = 1;
  auto* k2 = app.add_subcommand("k2rep", "unitriangular matrix of a word in x1, x2");
  common(k2, 1);
  k2->add_option("-a", a, "entry for x1");
  k2->add_option("-b", b, "entry for x2");

  std::vector<const char*> argv{"hbraid"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    r.output = app.help();
    r.exit_status = kTrue;
    return r;
  } catch (const CLI::CallForVersion&) {
    r.output = "hbraid 1.0\n";
    r.exit_status = kTrue;
    return r;
  } catch (const CLI::ParseError& e) {
    r.error = std::string(e.what()) + "\n";
    r.exit_status = kUsage;
    return r;
  }

  const auto* sub = app.get_subcommands().front();
  r.command = sub->get_name();
  try {
    const std::string& c = r.command;
    if (c == "reduce") cmd_reduce(o, free_group, in, r);
    else if (c == "perm") cmd_perm(o, in, r);
    else if (c == "heq") cmd_heq(o, in, r);
    else if (c == "htrivial") cmd_htrivial(o, in, r);
    else if (c == "nf3") cmd_nf3(o, in, r);
    else if (c == "order3") cmd_order3(o, in, r);
    else if (c == "power3") cmd_power3(o, m, in, r);
    else if (c == "burau") cmd_burau(o, at, in, r);
    else if (c == "prop2") cmd_prop2(r);
    else if (c == "lemma1") cmd_lemma1(r);
    else if (c == "relations") cmd_relations(o, r);
    else if (c == "torsion3") cmd_torsion3(r);
    else if (c == "goldsmith") cmd_goldsmith(o, r);
    else if (c == "k2rep") cmd_k2rep(o, a, b, in, r);
  } catch (const Error& e) {
    r.payload = nullptr;
    r.output.clear();
    r.error = "error: " + std::string(e.what()) + "\n";
    r.exit_status = kUsage;
    return r;
  }
  if (o.json_out) r.output = r.payload.dump(2) + "\n";
  return r;
}

}  // namespace hbraid::cli
