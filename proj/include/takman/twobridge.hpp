#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "takman/bigint.hpp"
#include "takman/error.hpp"
#include "takman/laurent.hpp"
#include "takman/presentation.hpp"
#include "takman/word.hpp"

namespace takman {

// Even Conway form of a two-bridge knot: 2m nonzero even integers
// [c_1, ..., c_2m] with c_{2j-1} = -2*q_j and c_{2j} = 2*s_j.
struct ConwayEven {
  std::vector<std::int64_t> entries;

  std::size_t m() const { return entries.size() / 2; }

  void validate() const {
    if (entries.size() < 2 || entries.size() % 2 != 0)
      throw invalid_input("Conway form needs an even number (>= 2) of entries",
                          errc::generic);
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (entries[i] == 0 || entries[i] % 2 != 0)
        throw invalid_input("Conway entry #" + std::to_string(i + 1) + " (" +
                                std::to_string(entries[i]) +
                                ") must be even and nonzero",
                            errc::generic);
  }

  std::vector<std::int64_t> q_values() const {
    std::vector<std::int64_t> q(m());
    for (std::size_t j = 0; j < m(); ++j) q[j] = -entries[2 * j] / 2;
    return q;
  }

  std::vector<std::int64_t> s_values() const {
    std::vector<std::int64_t> s(m());
    for (std::size_t j = 0; j < m(); ++j) s[j] = entries[2 * j + 1] / 2;
    return s;
  }
};

// Two-bridge knot fraction a/b: a positive odd, gcd(a, |b|) = 1.
struct Fraction {
  BigInt a;
  BigInt b;

  void validate() const {
    if (a < 1)
      throw invalid_input("fraction numerator must be positive",
                          errc::out_of_range);
    if (a % 2 == 0)
      throw invalid_input("fraction " + a.str() + "/" + b.str() +
                              " has even numerator: a two-bridge link, not a knot",
                          errc::even_numerator);
    if (a == 1)
      throw invalid_input("fraction 1/b is the unknot", errc::unknot);
    if (extended_gcd(a, b).g != 1)
      throw invalid_input("fraction " + a.str() + "/" + b.str() +
                              " is not in lowest terms",
                          errc::non_coprime);
  }

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Value of the integer continued fraction c_1 + 1/(c_2 + 1/(... + 1/c_k))
// as an exact reduced fraction with positive numerator. No knot-theoretic
// validation; fails only on a vanishing intermediate denominator.
inline std::pair<BigInt, BigInt> continued_fraction_value(
    std::span<const std::int64_t> entries) {
  if (entries.empty())
    throw invalid_input("empty continued fraction", errc::generic);
  BigInt num = entries.back();
  BigInt den = 1;
  for (std::size_t i = entries.size() - 1; i-- > 0;) {
    if (num == 0)
      throw invalid_input("continued fraction hits a zero denominator after entry #" +
                              std::to_string(i + 1),
                          errc::zero_denominator);
    // c + den/num = (c*num + den)/num
    BigInt next = entries[i] * num + den;
    den = num;
    num = next;
  }
  if (num < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

inline Fraction conway_to_fraction(const ConwayEven& c) {
  c.validate();
  auto [a, b] = continued_fraction_value(c.entries);
  Fraction f{a, b};
  f.validate();  // distinct errors for links (even a) and the unknot (a = 1)
  return f;
}

// b and b' with b*b' = 1 (mod a) name the same knot; b and -b name mirror
// images, which this library does not distinguish (all computed invariants
// are mirror-invariant). Hence: equivalent iff b2 = +-b1^{+-1} (mod a).
inline bool equivalent_fractions(const Fraction& f1, const Fraction& f2) {
  f1.validate();
  f2.validate();
  if (f1.a != f2.a) return false;
  const BigInt& a = f1.a;
  auto reduce_mod = [&](const BigInt& x) {
    BigInt r = x % a;
    if (r < 0) r += a;
    return r;
  };
  BigInt b1 = reduce_mod(f1.b);
  BigInt b2 = reduce_mod(f2.b);
  if (b1 == b2 || reduce_mod(b1 + b2) == 0) return true;
  BigInt prod = reduce_mod(b1 * b2);
  return prod == 1 || prod == a - 1;
}

// Deterministic representative: 0 < b < a, then b = min(b, b^{-1} mod a).
inline Fraction canonical_fraction(const Fraction& f) {
  f.validate();
  BigInt b = f.b % f.a;
  if (b < 0) b += f.a;
  BigInt binv = mod_inverse(b, f.a);
  if (binv < b) b = binv;
  return {f.a, b};
}

// Even continued-fraction expansion of a/b (up to two-bridge equivalence),
// by repeated division with the nearest even quotient.
inline ConwayEven fraction_to_conway(const Fraction& f) {
  Fraction fc = canonical_fraction(f);
  // Work from an even denominator representative; b - a is even when b is
  // odd because a is odd, and it names the same knot (b - a = b mod a).
  BigInt num = fc.a;
  BigInt den = fc.b % 2 == 0 ? fc.b : fc.b - fc.a;

  ConwayEven out;
  // |den| < a strictly decreases each step, so a + 2 steps are unreachable.
  // (The bound is genuinely linear: b = 1 expands to [-2, 2, -2, ...] of
  // length a - 1.)
  const BigInt guard = fc.a + 2;
  BigInt prev_abs_den = abs(den);
  for (BigInt step = 0;; ++step) {
    if (step > guard)
      throw internal_error("even continued-fraction expansion failed to terminate");
    BigInt c = 2 * round_div_half_to_zero(num, 2 * den);
    BigInt r = num - c * den;
    if (c == 0 || c % 2 != 0)
      throw internal_error("even continued-fraction quotient degenerated");
    if (abs(c) > BigInt(std::numeric_limits<std::int64_t>::max()))
      throw invalid_input("Conway entry overflows a 64-bit integer",
                          errc::out_of_range);
    out.entries.push_back(c.convert_to<std::int64_t>());
    if (r == 0) break;
    num = den;
    den = r;
    if (abs(den) >= prev_abs_den)
      throw internal_error("even continued-fraction remainder failed to shrink");
    prev_abs_den = abs(den);
  }
  out.validate();
  return out;
}

// Group presentation <u, v | l u l^-1 v^-1> of the knot b(a/b), where
// l = u^e1 v^e2 u^e3 ... v^e(a-1) and e_i = (-1)^floor(i*b'/a) for the odd
// representative b' of the class of b. (An even b would not produce a knot
// group relator; b' = a - b gives the mirror image, whose group is the
// same.)
inline Presentation schubert_presentation(const Fraction& f) {
  f.validate();
  if (f.a < 3)
    throw invalid_input("Schubert presentation needs a >= 3", errc::out_of_range);
  if (f.b <= 0 || f.b >= f.a)
    throw invalid_input("Schubert presentation needs 0 < b < a; canonicalize first",
                        errc::out_of_range);
  BigInt b_odd = f.b % 2 != 0 ? f.b : f.a - f.b;

  Presentation p;
  p.generators = {"u", "v"};
  constexpr GenRef u = 0, v = 1;

  std::vector<Syllable> l;
  for (BigInt i = 1; i < f.a; ++i) {
    std::int64_t eps = (i * b_odd / f.a) % 2 == 0 ? 1 : -1;
    l.push_back({i % 2 != 0 ? u : v, eps});
  }
  Word lw = Word::from_raw(l);
  p.relators.push_back(concat({lw, Word{{u, 1}}, invert(lw), Word{{v, -1}}}));
  return p;
}

// Abelianized Fox derivative of w with respect to generator g, with every
// generator mapping to t.
inline LaurentPoly fox_derivative(const Word& w, GenRef g) {
  LaurentPoly out;
  std::int64_t prefix = 0;  // exponent sum of the prefix read so far
  for (const Syllable& s : w.syllables()) {
    if (s.gen == g) {
      std::vector<BigInt> c(static_cast<std::size_t>(s.exp < 0 ? -s.exp : s.exp), 1);
      if (s.exp > 0) {
        // d(g^e)/dg = 1 + t + ... + t^(e-1)
        out = add(out, LaurentPoly::from_coeffs(prefix, std::move(c)));
      } else {
        // d(g^-e)/dg = -(t^-1 + ... + t^-e)
        for (BigInt& x : c) x = -1;
        out = add(out, LaurentPoly::from_coeffs(prefix + s.exp, std::move(c)));
      }
    }
    prefix += s.exp;
  }
  return out;
}

// Alexander polynomial of the two-bridge knot b(a/b), normalized to an
// ordinary polynomial with positive leading coefficient.
inline LaurentPoly alexander_polynomial(const Fraction& f) {
  Fraction fc = canonical_fraction(f);
  Presentation p = schubert_presentation(fc);
  LaurentPoly delta = normalize_unit(fox_derivative(p.relators.front(), 0));
  if (abs(evaluate_at_integer(delta, 1)) != 1)
    throw internal_error("Alexander polynomial of " + fc.a.str() + "/" +
                         fc.b.str() + " fails |delta(1)| = 1");
  if (!palindromic_up_to_sign(delta))
    throw internal_error("Alexander polynomial of " + fc.a.str() + "/" +
                         fc.b.str() + " is not palindromic");
  return delta;
}

// |H_1| of the n-fold cyclic branched cover of b(a/b):
// |Res(delta, 1 + t + ... + t^(n-1))|; empty when the resultant vanishes
// (infinite homology).
inline std::optional<BigInt> cover_homology_order(const Fraction& f,
                                                  std::size_t n) {
  if (n < 2)
    throw invalid_input("cover_homology_order needs n >= 2", errc::out_of_range);
  LaurentPoly delta = alexander_polynomial(f);
  BigInt res = resultant(delta, cyclotomic_quotient(static_cast<std::int64_t>(n)));
  if (res == 0) return std::nullopt;
  return abs(res);
}

// --- text forms ----------------------------------------------------------

inline std::string fraction_to_string(const Fraction& f) {
  return f.a.str() + "/" + f.b.str();
}

inline Fraction parse_fraction(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos)
    throw invalid_input("fraction must look like a/b", errc::parse);
  try {
    Fraction f{BigInt(std::string(text.substr(0, slash))),
               BigInt(std::string(text.substr(slash + 1)))};
    if (f.a < 0) {
      f.a = -f.a;
      f.b = -f.b;
    }
    f.validate();
    return f;
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const invalid_input*>(&e)) throw;
    throw invalid_input("cannot parse fraction '" + std::string(text) + "'",
                        errc::parse);
  }
}

inline std::string conway_to_string(const ConwayEven& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.entries.size(); ++i)
    out += (i ? "," : "") + std::to_string(c.entries[i]);
  return out + "]";
}

inline ConwayEven parse_conway(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front())))
    body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
    body.remove_suffix(1);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw invalid_input("Conway form must look like [2,2,-2,4]", errc::parse);
  body = body.substr(1, body.size() - 2);

  ConwayEven c;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string item(body.substr(pos, comma == std::string_view::npos
                                          ? std::string_view::npos
                                          : comma - pos));
    std::erase_if(item, [](unsigned char ch) { return std::isspace(ch); });
    if (item.empty())
      throw invalid_input("empty entry in Conway form", errc::parse);
    try {
      c.entries.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw invalid_input("bad Conway entry '" + item + "'", errc::parse);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  c.validate();
  return c;
}

}  // namespace takman
