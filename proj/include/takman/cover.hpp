#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "takman/error.hpp"
#include "takman/laurent.hpp"
#include "takman/presentation.hpp"
#include "takman/twobridge.hpp"
#include "takman/word.hpp"

namespace takman {

// Elimination tables for the cyclic presentation of the n-fold cyclic
// branched cover: words d_{k,j}, b_{k,j} over x_1..x_n, indices mod n,
// built by the recurrence
//   d_{k,1} = x_k
//   b_{k,1} = d_{k,1}^{q_1} d_{k+1,1}^{-q_1}
//   d_{k,j} = b_{k,j-1}^{-s_{j-1}} d_{k,j-1} b_{k-1,j-1}^{s_{j-1}}   (j >= 2)
//   b_{k,j} = d_{k,j}^{q_j} b_{k,j-1} d_{k+1,j}^{-q_j}               (j >= 2)
// Each table entry is computed once and shared.
struct EliminationState {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::vector<Word>> d;  // d[j][k], j = 0..m-1, k = 0..n-1
  std::vector<std::vector<Word>> b;
};

inline EliminationState build_elimination(std::span<const std::int64_t> q,
                                          std::span<const std::int64_t> s,
                                          std::size_t n) {
  if (n < 1) throw invalid_input("elimination needs n >= 1", errc::out_of_range);
  if (q.size() != s.size() || q.empty())
    throw invalid_input("q and s must have equal positive length");
  for (std::size_t j = 0; j < q.size(); ++j)
    if (q[j] == 0 || s[j] == 0)
      throw invalid_input("q_j and s_j must be nonzero (j=" +
                              std::to_string(j + 1) + ")",
                          errc::zero_parameter);

  EliminationState st;
  st.n = n;
  st.m = q.size();
  st.d.assign(st.m, std::vector<Word>(n));
  st.b.assign(st.m, std::vector<Word>(n));

  for (std::size_t k = 0; k < n; ++k)
    st.d[0][k] = Word{{static_cast<GenRef>(k), 1}};
  for (std::size_t k = 0; k < n; ++k)
    st.b[0][k] = concat(power(st.d[0][k], q[0]),
                        power(st.d[0][(k + 1) % n], -q[0]));

  for (std::size_t j = 1; j < st.m; ++j) {
    for (std::size_t k = 0; k < n; ++k)
      st.d[j][k] = concat({power(st.b[j - 1][k], -s[j - 1]), st.d[j - 1][k],
                           power(st.b[j - 1][(k + n - 1) % n], s[j - 1])});
    for (std::size_t k = 0; k < n; ++k)
      st.b[j][k] = concat({power(st.d[j][k], q[j]), st.b[j - 1][k],
                           power(st.d[j][(k + 1) % n], -q[j])});
  }
  return st;
}

// Relator w = b_{k,m}^{-s_m} d_{k,m} b_{k-1,m}^{s_m} at the given base
// index (0-based), freely reduced.
inline Word cover_word_at(std::span<const std::int64_t> q,
                          std::span<const std::int64_t> s, std::size_t n,
                          std::size_t base_k) {
  EliminationState st = build_elimination(q, s, n);
  const std::size_t k = base_k % n;
  const std::size_t km1 = (k + n - 1) % n;
  const std::size_t top = st.m - 1;
  return concat({power(st.b[top][k], -s[top]), st.d[top][k],
                 power(st.b[top][km1], s[top])});
}

inline Word cover_word(std::span<const std::int64_t> q,
                       std::span<const std::int64_t> s, std::size_t n) {
  return cover_word_at(q, s, n, 0);
}

// Cyclic presentation of the fundamental group of the n-fold cyclic
// branched cover of the two-bridge knot with the given even Conway form.
inline Presentation cover_presentation(const ConwayEven& c, std::size_t n) {
  c.validate();
  std::vector<std::int64_t> q = c.q_values();
  std::vector<std::int64_t> s = c.s_values();
  return make_cyclic_presentation(n, cover_word(q, s, n));
}

// Exponent-sum polynomial of a word over x-generators: the coefficient of
// t^k is the total exponent of generator k.
inline LaurentPoly word_polynomial(const Word& w) {
  if (w.empty()) return LaurentPoly();
  GenRef top = 0;
  for (const Syllable& s : w.syllables())
    if (s.gen > top) top = s.gen;
  std::vector<std::int64_t> sums =
      exponent_sums(w, static_cast<std::size_t>(top) + 1);
  std::vector<BigInt> coeffs(sums.begin(), sums.end());
  return LaurentPoly::from_coeffs(0, std::move(coeffs));
}

// The relator word's polynomial in the wrap-free regime: the word is built
// with n past the index span of the recurrence and based away from 0, so no
// index reduction occurs. Equal to the cover relator's algebraic shadow up
// to a unit +-t^k.
inline LaurentPoly cover_word_polynomial(std::span<const std::int64_t> q,
                                         std::span<const std::int64_t> s) {
  const std::size_t m = q.size();
  const std::size_t big_n = 4 * m + 6;
  const std::size_t base = 2 * m + 3;
  return word_polynomial(cover_word_at(q, s, big_n, base));
}

}  // namespace takman
