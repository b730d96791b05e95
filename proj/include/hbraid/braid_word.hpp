#pragma once

// Braid words in the Artin generators sigma_1 .. sigma_{n-1}.
//
// A letter k > 0 stands for sigma_k, k < 0 for sigma_{|k|}^{-1}. Every word
// carries its strand count; combining words with different strand counts is
// an error.

#include "hbraid/integer.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace hbraid {

class BraidWord {
 public:
  BraidWord() = default;

  explicit BraidWord(int strands, std::vector<int> letters = {}) : strands_(strands), letters_(std::move(letters)) {
    if (strands < 1) throw Error("braid word needs at least one strand");
    for (int k : letters_) check_letter(k);
  }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const {
    std::vector<int> out(letters_.rbegin(), letters_.rend());
    for (int& k : out) k = -k;
    return BraidWord(strands_, std::move(out));
  }

  BraidWord operator*(const BraidWord& other) const {
    if (other.strands_ != strands_)
      throw MismatchError("cannot concatenate braid words on " + std::to_string(strands_) + " and " +
                          std::to_string(other.strands_) + " strands");
    std::vector<int> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return BraidWord(strands_, std::move(out));
  }

  BraidWord pow(int m) const {
    BraidWord base = m < 0 ? inverse() : *this;
    std::vector<int> out;
    for (int r = 0; r < std::abs(m); ++r) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
    return BraidWord(strands_, std::move(out));
  }

  std::string to_string() const {
    std::string s;
    for (int k : letters_) {
      if (!s.empty()) s += ' ';
      s += "s" + std::to_string(std::abs(k));
      if (k < 0) s += "^-1";
    }
    return s;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  void check_letter(int k) const {
    if (k == 0 || std::abs(k) > strands_ - 1)
      throw Error("generator index " + std::to_string(k) + " out of range for " + std::to_string(strands_) +
                  " strands");
  }

  int strands_ = 1;
  std::vector<int> letters_;
};

/// Bijection of {1..n}; images()[k-1] is the image of k.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1]) throw Error("not a permutation");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
  }

  static Permutation transposition(int n, int i, int j) {
    auto p = identity(n);
    std::swap(p.images_[i - 1], p.images_[j - 1]);
    return p;
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[k - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int k = 0; k < size(); ++k)
      if (images_[k] != k + 1) return false;
    return true;
  }

  /// Apply *this first, then `next`.
  Permutation then(const Permutation& next) const {
    if (next.size() != size()) throw MismatchError("permutation sizes differ");
    std::vector<int> im(images_.size());
    for (int k = 0; k < size(); ++k) im[k] = next(images_[k]);
    return Permutation(std::move(im));
  }

  Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (int k = 0; k < size(); ++k) im[images_[k] - 1] = k + 1;
    return Permutation(std::move(im));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

namespace detail {

inline int parse_int(std::string_view s, std::string_view token) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("malformed braid token '" + std::string(token) + "'");
  return v;
}

}  // namespace detail

/// Parses whitespace-separated tokens `sK`, `sK^e` or bare signed integers.
/// No reduction is performed.
inline BraidWord parse_braid_word(std::string_view text, int strands) {
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token[0] == 's' || token[0] == 'S') {
      std::string_view body(token);
      body.remove_prefix(1);
      int exponent = 1;
      if (auto caret = body.find('^'); caret != std::string_view::npos) {
        exponent = detail::parse_int(body.substr(caret + 1), token);
        body = body.substr(0, caret);
      }
      int k = detail::parse_int(body, token);
      if (k <= 0) throw ParseError("malformed braid token '" + token + "'");
      if (exponent == 0) throw ParseError("zero exponent in braid token '" + token + "'");
      if (k > strands - 1)
        throw ParseError("generator s" + std::to_string(k) + " out of range for " + std::to_string(strands) +
                         " strands");
      for (int r = 0; r < std::abs(exponent); ++r) letters.push_back(exponent > 0 ? k : -k);
    } else {
      int k = detail::parse_int(token, token);
      if (k == 0) throw ParseError("letter 0 is not a generator");
      if (std::abs(k) > strands - 1)
        throw ParseError("generator " + token + " out of range for " + std::to_string(strands) + " strands");
      letters.push_back(k);
    }
  }
  return BraidWord(strands, std::move(letters));
}

inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int k : w.letters()) {
    if (!out.empty() && out.back() == -k)
      out.pop_back();
    else
      out.push_back(k);
  }
  return BraidWord(w.strands(), std::move(out));
}

/// Image in S_n; the first letter acts first.
inline Permutation permutation(const BraidWord& w) {
  auto p = Permutation::identity(w.strands());
  for (int k : w.letters()) p = p.then(Permutation::transposition(w.strands(), std::abs(k), std::abs(k) + 1));
  return p;
}

/// a_ij = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^{-1} ... s_{j-1}^{-1}.
inline BraidWord pure_gen(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw Error("pure generator a_" + std::to_string(i) + "," + std::to_string(j) + " needs 1 <= i < j <= n = " +
                std::to_string(n));
  std::vector<int> letters;
  for (int k = j - 1; k > i; --k) letters.push_back(k);
  letters.push_back(i);
  letters.push_back(i);
  for (int k = i + 1; k < j; ++k) letters.push_back(-k);
  return BraidWord(n, std::move(letters));
}

/// Group commutator [a,b] = a^{-1} b^{-1} a b.
inline BraidWord commutator(const BraidWord& a, const BraidWord& b) { return a.inverse() * b.inverse() * a * b; }

/// x^g = g^{-1} x g.
inline BraidWord conjugate(const BraidWord& x, const BraidWord& g) { return g.inverse() * x * g; }

inline BraidWord goldsmith_word() {
  return BraidWord(3, {1, 2, 2, 1, 1, -2, -2, -1, -1, 2, 2, -1, -1, -2, -2, 1});
}

}  // namespace hbraid
