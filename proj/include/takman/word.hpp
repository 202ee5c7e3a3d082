#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "takman/error.hpp"

namespace takman {

// Index into the generator table of the owning presentation / builder.
using GenRef = std::int32_t;

struct Syllable {
  GenRef gen = 0;
  std::int64_t exp = 0;

  friend constexpr bool operator==(const Syllable&, const Syllable&) = default;
  friend constexpr auto operator<=>(const Syllable&, const Syllable&) = default;
};

// Freely reduced word in a free group, stored as generator/exponent runs.
// Invariants: no zero exponents, adjacent syllables use distinct generators.
// Words are immutable values; every operation below returns a new word.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Syllable> raw)
      : Word(from_raw(std::span<const Syllable>(raw.begin(), raw.size()))) {}

  // Free reduction of an arbitrary syllable sequence. Idempotent.
  static Word from_raw(std::span<const Syllable> raw) {
    Word w;
    for (const Syllable& s : raw) w.push_reduced(s);
    return w;
  }

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  std::size_t size() const { return syl_.size(); }

  std::int64_t letter_count() const {
    std::int64_t total = 0;
    for (const Syllable& s : syl_) total += s.exp < 0 ? -s.exp : s.exp;
    return total;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syl_;

  void push_reduced(const Syllable& s) {
    if (s.exp == 0) return;
    if (!syl_.empty() && syl_.back().gen == s.gen) {
      syl_.back().exp += s.exp;
      if (syl_.back().exp == 0) syl_.pop_back();
    } else {
      syl_.push_back(s);
    }
  }

  friend Word concat(std::span<const Word>);
  friend Word power(const Word&, std::int64_t);
  friend Word substitute(const Word&, std::span<const Word>);
};

inline Word reduce(std::span<const Syllable> raw) { return Word::from_raw(raw); }

inline Word invert(const Word& w) {
  std::vector<Syllable> out(w.syllables().rbegin(), w.syllables().rend());
  for (Syllable& s : out) s.exp = -s.exp;
  return Word::from_raw(out);
}

inline Word concat(std::span<const Word> parts) {
  Word out;
  for (const Word& p : parts)
    for (const Syllable& s : p.syllables()) out.push_reduced(s);
  return out;
}

inline Word concat(std::initializer_list<Word> parts) {
  return concat(std::span<const Word>(parts.begin(), parts.size()));
}

inline Word concat(const Word& a, const Word& b) { return concat({a, b}); }

inline Word power(const Word& w, std::int64_t e) {
  if (e == 0 || w.empty()) return Word();
  if (e < 0) return power(invert(w), -e);
  if (w.size() == 1)
    return Word{{w.syllables().front().gen, w.syllables().front().exp * e}};
  Word out;
  for (std::int64_t i = 0; i < e; ++i)
    for (const Syllable& s : w.syllables()) out.push_reduced(s);
  return out;
}

// Homomorphism given by one image word per generator index.
inline Word substitute(const Word& w, std::span<const Word> images) {
  Word out;
  for (const Syllable& s : w.syllables()) {
    if (s.gen < 0 || static_cast<std::size_t>(s.gen) >= images.size())
      throw invalid_input("substitute: no image for generator #" +
                              std::to_string(s.gen),
                          errc::missing_image);
    Word img = power(images[static_cast<std::size_t>(s.gen)], s.exp);
    for (const Syllable& t : img.syllables()) out.push_reduced(t);
  }
  return out;
}

// Conjugacy representative: repeatedly merges the first and last syllables
// while they share a generator. The result has distinct first/last
// generators (or is a single syllable), so rotations of its syllable list
// enumerate exactly the cyclic words conjugate to w.
inline Word cyclically_reduce(const Word& w) {
  std::vector<Syllable> s = w.syllables();
  while (s.size() >= 2 && s.front().gen == s.back().gen) {
    std::int64_t e = s.front().exp + s.back().exp;
    s.pop_back();
    if (e == 0)
      s.erase(s.begin());
    else
      s.front().exp = e;
  }
  return Word::from_raw(s);
}

namespace detail {
// Lexicographically least rotation under Syllable's total order.
inline std::vector<Syllable> least_rotation(std::vector<Syllable> v) {
  if (v.size() <= 1) return v;
  std::vector<Syllable> best = v;
  for (std::size_t r = 1; r < v.size(); ++r) {
    std::rotate(v.begin(), v.begin() + 1, v.end());
    if (v < best) best = v;
  }
  return best;
}
}  // namespace detail

// True iff w1 and w2 are equal as cyclic words (conjugate), optionally also
// accepting the inverse of w2.
inline bool cyclic_equal(const Word& w1, const Word& w2,
                         bool allow_inverse = false) {
  Word r1 = cyclically_reduce(w1);
  Word r2 = cyclically_reduce(w2);
  auto c1 = detail::least_rotation(r1.syllables());
  if (c1 == detail::least_rotation(r2.syllables())) return true;
  if (!allow_inverse) return false;
  return c1 == detail::least_rotation(invert(r2).syllables());
}

// Entry i = total exponent of generator i in w.
inline std::vector<std::int64_t> exponent_sums(const Word& w,
                                               std::size_t generator_count) {
  std::vector<std::int64_t> sums(generator_count, 0);
  for (const Syllable& s : w.syllables()) {
    if (s.gen < 0 || static_cast<std::size_t>(s.gen) >= generator_count)
      throw invalid_input("exponent_sums: generator #" + std::to_string(s.gen) +
                              " outside table of size " +
                              std::to_string(generator_count),
                          errc::out_of_range);
    sums[static_cast<std::size_t>(s.gen)] += s.exp;
  }
  return sums;
}

// Word literal syntax: whitespace-separated `name^exp` tokens, `^1` omitted.
inline std::string word_to_string(const Word& w,
                                  std::span<const std::string> names) {
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (s.gen < 0 || static_cast<std::size_t>(s.gen) >= names.size())
      throw invalid_input("word_to_string: generator #" +
                              std::to_string(s.gen) + " has no name",
                          errc::out_of_range);
    if (!out.empty()) out += ' ';
    out += names[static_cast<std::size_t>(s.gen)];
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

inline Word parse_word(std::string_view text,
                       std::span<const std::string> names) {
  std::vector<Syllable> raw;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;

    std::string_view name = token;
    std::int64_t exp = 1;
    if (std::size_t caret = token.rfind('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      std::string_view digits = token.substr(caret + 1);
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exp);
      if (ec != std::errc() || p != digits.data() + digits.size())
        throw invalid_input("bad exponent in word token '" + std::string(token) + "'",
                            errc::parse);
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      throw invalid_input("unknown generator '" + std::string(name) + "' in word",
                          errc::parse);
    raw.push_back({static_cast<GenRef>(it - names.begin()), exp});
  }
  return Word::from_raw(raw);
}

}  // namespace takman
