#pragma once

// Freely reduced words in the free group F_n on x_1 .. x_n. Letter k > 0 is
// x_k, k < 0 is x_{|k|}^{-1}.

#include "hbraid/integer.hpp"

#include <charconv>
#include <cstdlib>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace hbraid {

class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<int> letters) { append(letters); }

  static FreeWord generator(int k) { return FreeWord(std::vector<int>{k}); }

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  FreeWord inverse() const {
    FreeWord out;
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
    return out;
  }

  FreeWord& operator*=(const FreeWord& rhs) {
    append(rhs.letters_);
    return *this;
  }
  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) { return lhs *= rhs; }
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (int k : letters_) {
      if (!s.empty()) s += ' ';
      s += "x" + std::to_string(std::abs(k));
      if (k < 0) s += "^-1";
    }
    return s;
  }

 private:
  void append(std::span<const int> letters) {
    for (int k : letters) {
      if (k == 0) throw Error("letter 0 is not a free generator");
      if (!letters_.empty() && letters_.back() == -k)
        letters_.pop_back();
      else
        letters_.push_back(k);
    }
  }

  std::vector<int> letters_;
};

/// Substitutes images[k-1] for x_k in w.
inline FreeWord substitute(const FreeWord& w, std::span<const FreeWord> images) {
  FreeWord out;
  for (int k : w.letters()) {
    const FreeWord& im = images[std::abs(k) - 1];
    out *= k > 0 ? im : im.inverse();
  }
  return out;
}

inline FreeWord commutator(const FreeWord& a, const FreeWord& b) { return a.inverse() * b.inverse() * a * b; }

/// Parses "x1 x2^-1 x3^2" or signed integers "1 -2 3" over x_1 .. x_rank.
inline FreeWord parse_free_word(std::string_view text, int rank) {
  auto number = [](std::string_view digits, const std::string& token) {
    int v = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty())
      throw ParseError("malformed free group token '" + token + "'");
    return v;
  };
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    int k = 0, exponent = 1;
    if (token[0] == 'x' || token[0] == 'X') {
      std::string_view body(token);
      body.remove_prefix(1);
      if (auto caret = body.find('^'); caret != std::string_view::npos) {
        exponent = number(body.substr(caret + 1), token);
        body = body.substr(0, caret);
      }
      k = number(body, token);
      if (k <= 0) throw ParseError("malformed free group token '" + token + "'");
    } else {
      k = number(token, token);
    }
    if (k == 0 || exponent == 0) throw ParseError("zero in free group token '" + token + "'");
    if (std::abs(k) > rank)
      throw ParseError("generator " + token + " out of range for rank " + std::to_string(rank));
    if (exponent < 0) k = -k;
    for (int r = 0; r < std::abs(exponent); ++r) letters.push_back(k);
  }
  return FreeWord(std::move(letters));
}

}  // namespace hbraid
