#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "takman/cover.hpp"
#include "takman/takahashi.hpp"
#include "takman/twobridge.hpp"

namespace takman::verify {

// One oracle comparison. Both computed values are always recorded; a bare
// verdict is never enough to diagnose a failure.
struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Suite {
  std::string name;
  std::string description;
  std::vector<Check> checks;
  double seconds = 0;

  bool pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }

  std::size_t failures() const {
    std::size_t f = 0;
    for (const Check& c : checks)
      if (!c.pass) ++f;
    return f;
  }
};

struct Report {
  std::vector<Suite> suites;

  bool pass() const {
    for (const Suite& s : suites)
      if (!s.pass()) return false;
    return true;
  }
};

enum class Grid { small, full };

// The printed relator of the 7-fold cover of the knot 8_12 (Conway form
// [2,2,2,2]), written at base index 1 over x1..x7.
inline const char* eight12_relator_fixture() {
  return "x2^-1 x1 x2^-2 x3 x2^-1 x1 x2^-1 x1^2 x7^-1 x1 x2^-1 x1^2 x7^-1 x1 "
         "x7^-1 x6 x7^-2 x1 x7^-1 x1 x2^-1 x1^2 x7^-1 x1";
}

namespace detail {

inline void expect_eq(Suite& st, std::string name, std::string expected,
                      std::string actual) {
  bool ok = expected == actual;
  st.checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
}

inline void expect(Suite& st, std::string name, bool pass, std::string expected,
                   std::string actual) {
  st.checks.push_back({std::move(name), std::move(expected), std::move(actual), pass});
}

template <typename F>
Suite timed(std::string name, std::string description, F&& body) {
  Suite st;
  st.name = std::move(name);
  st.description = std::move(description);
  auto t0 = std::chrono::steady_clock::now();
  body(st);
  st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return st;
}

// Valid (numerator, denominator) pairs with numerator >= 0 drawn from the
// +-1, +-2 coefficient set.
inline const std::vector<std::pair<std::int64_t, std::int64_t>>& small_coeff_pairs() {
  static const std::vector<std::pair<std::int64_t, std::int64_t>> pairs = {
      {1, -2}, {1, -1}, {1, 1}, {1, 2}, {2, -1}, {2, 1}};
  return pairs;
}

inline SurgeryData random_small_surgery(std::mt19937_64& rng, std::size_t n,
                                        std::size_t m) {
  const auto& pairs = small_coeff_pairs();
  std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
  SurgeryData d;
  d.n = n;
  d.m = m;
  for (std::size_t i = 0; i < n * m; ++i) {
    auto [p, q] = pairs[pick(rng)];
    auto [r, s] = pairs[pick(rng)];
    d.p.push_back(p);
    d.q.push_back(q);
    d.r.push_back(r);
    d.s.push_back(s);
  }
  return d;
}

// Every valid even Conway form with entries from {+-2, +-4} and the given
// number of entries, paired with its fraction.
inline std::vector<std::pair<ConwayEven, Fraction>> conway_grid(std::size_t length) {
  static const std::int64_t values[4] = {-4, -2, 2, 4};
  std::vector<std::pair<ConwayEven, Fraction>> out;
  std::vector<std::size_t> digit(length, 0);
  while (true) {
    ConwayEven c;
    for (std::size_t i = 0; i < length; ++i) c.entries.push_back(values[digit[i]]);
    try {
      Fraction f = conway_to_fraction(c);
      out.emplace_back(std::move(c), std::move(f));
    } catch (const invalid_input&) {
      // links and unknots are not part of the grid
    }
    std::size_t i = 0;
    while (i < length && ++digit[i] == 4) digit[i++] = 0;
    if (i == length) break;
  }
  return out;
}

inline std::vector<std::pair<ConwayEven, Fraction>> conway_grid_for(Grid grid) {
  std::vector<std::pair<ConwayEven, Fraction>> out = conway_grid(2);
  if (grid == Grid::full) {
    auto longer = conway_grid(4);
    out.insert(out.end(), longer.begin(), longer.end());
  }
  return out;
}

}  // namespace detail

// [2,2] -> 5/2 and [2,2,2,2] -> 29/12, exactly.
inline Suite conway_anchor_suite() {
  return detail::timed("conway-anchors", "continued fraction evaluation anchors",
                       [](Suite& st) {
    detail::expect_eq(st, "conway [2,2]", "5/2",
                      fraction_to_string(conway_to_fraction(ConwayEven{{2, 2}})));
    detail::expect_eq(st, "conway [2,2,2,2]", "29/12",
                      fraction_to_string(conway_to_fraction(ConwayEven{{2, 2, 2, 2}})));
    detail::expect_eq(st, "conway [2,-2]", "3/2",
                      fraction_to_string(conway_to_fraction(ConwayEven{{2, -2}})));
  });
}

// The 5-fold figure-eight cover relator equals the printed word
// x2^-1 x1^2 x5^-1 x1 as a cyclic word.
inline Suite figure_eight_word_suite() {
  return detail::timed("figure-eight-relator", "m=1 cover relator at q=-1, s=1, n=5",
                       [](Suite& st) {
    std::vector<std::int64_t> q{-1}, s{1};
    Word w = cover_word(q, s, 5);
    Presentation names = make_cyclic_presentation(5, Word());
    std::string expected = "x2^-1 x1^2 x5^-1 x1";
    Word printed = parse_word(expected, names.generators);
    detail::expect(st, "relator matches printed word (up to cyclic rotation/inversion)",
                   cyclic_equal(w, printed, true), expected,
                   word_to_string(w, names.generators));
  });
}

// The 7-fold 8_12 cover relator equals the transcribed fixture.
inline Suite eight12_word_suite() {
  return detail::timed("8_12-relator", "m=2 cover relator at q=(-1,-1), s=(1,1), n=7",
                       [](Suite& st) {
    std::vector<std::int64_t> q{-1, -1}, s{1, 1};
    Word w = cover_word(q, s, 7);
    Presentation names = make_cyclic_presentation(7, Word());
    Word fixture = parse_word(eight12_relator_fixture(), names.generators);
    detail::expect(st, "relator matches fixture (up to cyclic rotation/inversion)",
                   cyclic_equal(w, fixture, true), eight12_relator_fixture(),
                   word_to_string(w, names.generators));
  });
}

// At n = 1 the chain presentation collapses: H1 is the direct sum of
// Z/p_j and Z/r_j over j, compared in invariant-factor form.
inline Suite lens_space_homology_suite(Grid grid) {
  return detail::timed("n1-lens-sum", "n=1 homology equals the lens-space direct sum",
                       [grid](Suite& st) {
    std::mt19937_64 rng(20240811u);
    std::uniform_int_distribution<std::int64_t> numerator(0, 9);
    std::uniform_int_distribution<std::int64_t> denominator(-9, 9);
    std::uniform_int_distribution<std::size_t> mdist(1, 3);
    const int cases = grid == Grid::full ? 50 : 15;
    for (int i = 0; i < cases; ++i) {
      SurgeryData d;
      d.n = 1;
      d.m = mdist(rng);
      std::vector<BigInt> diag;
      for (std::size_t j = 0; j < d.m; ++j) {
        std::int64_t p, q, r, s;
        do {
          p = numerator(rng);
          q = denominator(rng);
        } while (std::gcd(p, q) != 1);
        do {
          r = numerator(rng);
          s = denominator(rng);
        } while (std::gcd(r, s) != 1);
        d.p.push_back(p);
        d.q.push_back(q);
        d.r.push_back(r);
        d.s.push_back(s);
      }
      for (std::size_t j = 0; j < d.m; ++j) diag.push_back(d.p[j]);
      for (std::size_t j = 0; j < d.m; ++j) diag.push_back(d.r[j]);
      AbelianGroup expected = cokernel(IntMatrix::diagonal(diag));
      AbelianGroup actual = homology(takahashi_presentation(d));
      detail::expect(st, "case " + std::to_string(i + 1) + ": " + surgery_data_to_text(d),
                     expected == actual, to_string(expected), to_string(actual));
    }
  });
}

// H1 computed three independent ways: from the balanced presentation, from
// the Wirtinger presentation with filling relators, and from the framed
// linking matrix.
inline Suite triple_oracle_suite(Grid grid) {
  return detail::timed("triple-oracle-h1", "three independent H1 computations agree",
                       [grid](Suite& st) {
    std::mt19937_64 rng(777002u);
    const int per_shape = grid == Grid::full ? 50 : 10;
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t m = 1; m <= 2; ++m)
        for (int i = 0; i < per_shape; ++i) {
          SurgeryData d = detail::random_small_surgery(rng, n, m);
          AbelianGroup a = homology(takahashi_presentation(d));
          AbelianGroup b = homology(wirtinger_surgery_presentation(d));
          AbelianGroup c = cokernel(surgery_homology_matrix(d));
          bool ok = a == b && b == c;
          detail::expect(st,
                         "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                             " case " + std::to_string(i + 1),
                         ok, "balanced = " + to_string(a),
                         "balanced " + to_string(a) + ", filled " + to_string(b) +
                             ", linking " + to_string(c));
        }
  });
}

// |H1| of the n-fold cover presentation against the resultant
// |Res(delta, 1 + t + ... + t^(n-1))|; infinite exactly when it vanishes.
inline Suite cover_order_suite(Grid grid) {
  return detail::timed("cover-order-vs-resultant",
                       "cyclic presentation H1 order equals the resultant oracle",
                       [grid](Suite& st) {
    auto anchors = [&st](const ConwayEven& c, std::size_t n, const char* want) {
      Fraction f = conway_to_fraction(c);
      auto order = cover_homology_order(f, n);
      detail::expect_eq(st,
                        "anchor " + conway_to_string(c) + " n=" + std::to_string(n),
                        want, order ? order->str() : "infinite");
    };
    anchors(ConwayEven{{2, 2}}, 2, "5");
    anchors(ConwayEven{{2, 2}}, 3, "16");
    anchors(ConwayEven{{2, -2}}, 6, "infinite");
    {
      AbelianGroup h = homology(cover_presentation(ConwayEven{{2, -2}}, 6));
      detail::expect(st, "anchor [2,-2] n=6 free rank", h.free_rank == 2, "Z^2 + torsion",
                     to_string(h));
    }

    const std::size_t n_max = grid == Grid::full ? 8 : 5;
    for (const auto& [c, f] : detail::conway_grid_for(grid)) {
      LaurentPoly delta = alexander_polynomial(f);
      for (std::size_t n = 2; n <= n_max; ++n) {
        BigInt res = resultant(delta, cyclotomic_quotient(static_cast<std::int64_t>(n)));
        AbelianGroup h = homology(cover_presentation(c, n));
        bool ok;
        std::string expected, actual;
        if (res == 0) {
          ok = h.free_rank > 0;
          expected = "infinite (resultant 0)";
          actual = to_string(h);
        } else {
          auto order = h.order();
          BigInt ares = abs(res);
          ok = order.has_value() && *order == ares;
          expected = "|H1| = " + ares.str();
          actual = order ? "|H1| = " + order->str() : "infinite: " + to_string(h);
        }
        detail::expect(st, conway_to_string(c) + " n=" + std::to_string(n), ok,
                       std::move(expected), std::move(actual));
      }
    }
  });
}

// The n-generator cyclic presentation and the 2nm-generator periodic chain
// presentation present the same group; their abelianizations must agree.
inline Suite cover_vs_chain_suite(Grid grid) {
  return detail::timed("cover-vs-chain-homology",
                       "cyclic and periodic chain presentations have equal H1",
                       [grid](Suite& st) {
    const std::size_t n_max = grid == Grid::full ? 8 : 5;
    for (const auto& [c, f] : detail::conway_grid_for(grid)) {
      for (std::size_t n = 2; n <= n_max; ++n) {
        AbelianGroup a = homology(cover_presentation(c, n));
        AbelianGroup b =
            homology(periodic_takahashi_presentation(cover_surgery_data(c, n)));
        detail::expect(st, conway_to_string(c) + " n=" + std::to_string(n), a == b,
                       to_string(a), to_string(b));
      }
    }
  });
}

// The relator word's exponent-sum polynomial is a unit multiple of the
// Alexander polynomial; determinant and normalization checks ride along.
inline Suite alexander_consistency_suite(Grid grid) {
  return detail::timed("alexander-consistency",
                       "cover relator polynomial matches the Alexander polynomial",
                       [grid](Suite& st) {
    for (const auto& [c, f] : detail::conway_grid_for(grid)) {
      LaurentPoly delta = alexander_polynomial(f);
      LaurentPoly wp = normalize_unit(cover_word_polynomial(c.q_values(), c.s_values()));
      BigInt det = abs(evaluate_at_integer(delta, -1));
      BigInt at_one = abs(evaluate_at_integer(delta, 1));
      std::string expected = poly_to_string(delta) + "; |delta(-1)| = " + f.a.str() +
                             "; |delta(1)| = 1; palindromic";
      std::string actual = poly_to_string(wp) + "; |delta(-1)| = " + det.str() +
                           "; |delta(1)| = " + at_one.str() + "; " +
                           (palindromic_up_to_sign(delta) ? "palindromic" : "not palindromic");
      detail::expect(st, conway_to_string(c) + " (" + fraction_to_string(f) + ")",
                     expected == actual, std::move(expected), std::move(actual));
    }
  });
}

// fraction -> even Conway form -> fraction lands in the same two-bridge
// equivalence class, for every valid class representative.
inline Suite round_trip_suite(Grid grid) {
  return detail::timed("conway-round-trip",
                       "even continued-fraction expansion round trip",
                       [grid](Suite& st) {
    const std::int64_t a_max = grid == Grid::full ? 199 : 99;
    for (std::int64_t a = 3; a <= a_max; a += 2) {
      std::string bad;
      int tested = 0;
      for (std::int64_t b = 1; b < a; ++b) {
        if (std::gcd(a, b) != 1) continue;
        ++tested;
        Fraction f{a, b};
        Fraction back = conway_to_fraction(fraction_to_conway(f));
        if (!equivalent_fractions(f, back)) {
          bad = fraction_to_string(f) + " -> " + fraction_to_string(back);
          break;
        }
      }
      detail::expect(st, "a = " + std::to_string(a), bad.empty(),
                     "all " + std::to_string(tested) + " classes round trip",
                     bad.empty() ? "all " + std::to_string(tested) + " classes round trip"
                                 : "mismatch " + bad);
    }
  });
}

// The 1-fold cover is the 3-sphere: every n=1 cyclic presentation must
// abelianize to the trivial group. Failure flags a wrap-convention bug.
inline Suite single_cover_sentinel_suite() {
  return detail::timed("single-cover-sentinel", "n=1 cover presentations are trivial",
                       [](Suite& st) {
    for (const auto& [c, f] : detail::conway_grid_for(Grid::full)) {
      AbelianGroup h = homology(cover_presentation(c, 1));
      detail::expect(st, conway_to_string(c), h.trivial(), "0", to_string(h));
    }
  });
}

inline Report run_all(Grid grid) {
  Report r;
  r.suites.push_back(conway_anchor_suite());
  r.suites.push_back(figure_eight_word_suite());
  r.suites.push_back(eight12_word_suite());
  r.suites.push_back(lens_space_homology_suite(grid));
  r.suites.push_back(triple_oracle_suite(grid));
  r.suites.push_back(cover_order_suite(grid));
  r.suites.push_back(cover_vs_chain_suite(grid));
  r.suites.push_back(alexander_consistency_suite(grid));
  r.suites.push_back(round_trip_suite(grid));
  r.suites.push_back(single_cover_sentinel_suite());
  return r;
}

}  // namespace takman::verify
