#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "takman/takahashi.hpp"

using namespace takman;

namespace {

SurgeryData random_valid_surgery(std::mt19937_64& rng, std::size_t n,
                                 std::size_t m) {
  static const std::pair<std::int64_t, std::int64_t> pairs[] = {
      {1, -2}, {1, -1}, {1, 1}, {1, 2}, {2, -1}, {2, 1}, {3, 2}, {0, 1}, {1, 0}};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(pairs) - 1);
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

}  // namespace

TEST_CASE("balanced presentation at n=1") {
  SECTION("m=1: both relators collapse to single powers") {
    SurgeryData d{1, 1, {5}, {2}, {3}, {1}};
    Presentation p = takahashi_presentation(d);
    CHECK(p.generators == std::vector<std::string>{"a[1][1]", "a[2][1]"});
    REQUIRE(p.relators.size() == 2);
    CHECK(cyclic_equal(p.relators[0], Word{{0, 5}}, true));
    CHECK(cyclic_equal(p.relators[1], Word{{1, 3}}, true));
  }

  SECTION("m=2: homology is the direct sum of the four lens factors") {
    SurgeryData d{1, 2, {5, 7}, {2, 3}, {3, 4}, {1, 1}};
    Presentation p = takahashi_presentation(d);
    REQUIRE(p.relators.size() == 4);
    for (const Word& r : p.relators) CHECK(r.size() == 1);
    std::vector<BigInt> diag{5, 7, 3, 4};
    CHECK(homology(p) == cokernel(IntMatrix::diagonal(diag)));
  }

  SECTION("collapse formula with p = 0 and q = 0 coefficients") {
    // p/q in {0/1, 1/0, 5/2}: Z/0 = Z and Z/1 = 0 both appear
    SurgeryData d{1, 3, {0, 1, 5}, {1, 0, 2}, {1, 2, 1}, {1, 1, -1}};
    std::vector<BigInt> diag{0, 1, 5, 1, 2, 1};
    CHECK(homology(takahashi_presentation(d)) ==
          cokernel(IntMatrix::diagonal(diag)));
  }
}

TEST_CASE("balanced presentation counts") {
  std::mt19937_64 rng(3001);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= 2; ++m) {
      SurgeryData d = random_valid_surgery(rng, n, m);
      Presentation p = takahashi_presentation(d);
      CHECK(p.generators.size() == 2 * n * m);
      CHECK(p.relators.size() == 2 * n * m);
    }
}

TEST_CASE("surgery data validation names the offending pair") {
  SurgeryData d{1, 1, {4}, {2}, {3}, {1}};
  try {
    takahashi_presentation(d);
    FAIL("expected invalid_input");
  } catch (const invalid_input& e) {
    CHECK(e.code() == errc::non_coprime);
    CHECK(std::string(e.what()).find("(k=1, j=1)") != std::string::npos);
  }

  SurgeryData neg{1, 1, {-5}, {2}, {3}, {1}};
  try {
    takahashi_presentation(neg);
    FAIL("expected invalid_input");
  } catch (const invalid_input& e) {
    CHECK(e.code() == errc::sign_constraint);
  }
}

TEST_CASE("periodic presentation") {
  SECTION("direct build equals periodize-then-build, as ordered lists") {
    std::mt19937_64 rng(3002);
    static const std::pair<std::int64_t, std::int64_t> pairs[] = {
        {1, -2}, {1, -1}, {1, 1}, {1, 2}, {2, -1}, {2, 1}};
    std::uniform_int_distribution<std::size_t> pick(0, std::size(pairs) - 1);
    for (int trial = 0; trial < 20; ++trial) {
      PeriodicSurgeryData d;
      d.n = 3;
      d.m = 2;
      for (std::size_t j = 0; j < d.m; ++j) {
        auto [p, q] = pairs[pick(rng)];
        auto [r, s] = pairs[pick(rng)];
        d.p.push_back(p);
        d.q.push_back(q);
        d.r.push_back(r);
        d.s.push_back(s);
      }
      Presentation direct = periodic_takahashi_presentation(d);
      Presentation via = takahashi_presentation(d.periodize());
      CHECK(direct.generators == via.generators);
      CHECK(direct.relators == via.relators);
    }
  }

  SECTION("figure-eight double branched cover") {
    PeriodicSurgeryData d{2, 1, {1}, {-1}, {1}, {1}};
    Presentation p = periodic_takahashi_presentation(d);
    CHECK(p.generators.size() == 4);
    CHECK(p.relators.size() == 4);
    CHECK(homology(p) == AbelianGroup{{5}, 0});
  }

  SECTION("n=1 periodic matches the plain builder") {
    PeriodicSurgeryData d{1, 1, {5}, {2}, {3}, {1}};
    Presentation direct = periodic_takahashi_presentation(d);
    Presentation via = takahashi_presentation(d.periodize());
    CHECK(direct.relators == via.relators);
  }

  SECTION("rotation shift permutes the relator multiset") {
    PeriodicSurgeryData d{3, 2, {1, 2}, {-1, 1}, {1, 1}, {2, -1}};
    Presentation p = periodic_takahashi_presentation(d);
    Presentation shifted = apply_shift(p, takahashi_shift(3, 2));
    CHECK(same_relator_multiset(p, shifted));
    CHECK(homology(shifted) == homology(p));
  }
}

TEST_CASE("chain link longitudes") {
  SECTION("n=2, m=1") {
    auto lng = chain_longitudes(2, 1);
    REQUIRE(lng.size() == 2);
    // generator table: x[1][1]=0, x[2][1]=1, y[1][1]=2, y[2][1]=3
    CHECK(lng[0].h == Word{{3, 1}, {2, -1}});  // h_{1,1} = y_{2,1} y_{1,1}^-1
    CHECK(lng[0].l == Word{{1, 1}, {0, -1}});  // l_{1,1} = x_{2,1} x_{1,1}^-1
    CHECK(lng[1].h == Word{{2, 1}, {3, -1}});
  }

  SECTION("n=1 wraps to the empty word") {
    auto lng = chain_longitudes(1, 1);
    CHECK(lng[0].h == Word());
    CHECK(lng[0].l == Word());
  }

  SECTION("longitudes are homologically trivial") {
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t m = 1; m <= 3; ++m)
        for (const auto& pair : chain_longitudes(n, m)) {
          auto hs = exponent_sums(pair.h, 2 * n * m);
          auto ls = exponent_sums(pair.l, 2 * n * m);
          CHECK(std::accumulate(hs.begin(), hs.end(), std::int64_t(0)) == 0);
          CHECK(std::accumulate(ls.begin(), ls.end(), std::int64_t(0)) == 0);
        }
  }
}

TEST_CASE("wirtinger presentation") {
  SECTION("n=1, m=1 has free abelianization of rank 2") {
    Presentation p = chain_wirtinger_presentation(1, 1);
    CHECK(p.generators.size() == 2);
    CHECK(p.relators.size() == 2);
    CHECK(homology(p) == AbelianGroup{{}, 2});
  }

  SECTION("conjugation relators have zero exponent sums") {
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t m = 1; m <= 2; ++m) {
        Presentation p = chain_wirtinger_presentation(n, m);
        CHECK(p.relators.size() == 2 * n * m);
        for (const Word& r : p.relators) {
          auto sums = exponent_sums(r, p.generators.size());
          for (std::int64_t v : sums) CHECK(v == 0);
        }
      }
  }

  SECTION("n=2, m=1 matches the printed conjugation pattern") {
    Presentation p = chain_wirtinger_presentation(2, 1);
    REQUIRE(p.relators.size() == 4);
    // gens: x[1][1]=0, x[2][1]=1, y[1][1]=2, y[2][1]=3
    // h_{1,1}^-1 x_{1,1} h_{1,1} x_{1,1}^-1 with h_{1,1} = y2 y1^-1
    CHECK(p.relators[0] ==
          Word{{2, 1}, {3, -1}, {0, 1}, {3, 1}, {2, -1}, {0, -1}});
    CHECK(p.relators[1] ==
          Word{{3, 1}, {2, -1}, {1, 1}, {2, 1}, {3, -1}, {1, -1}});
    // l_{1,1}^-1 y_{1,1} l_{1,1} y_{1,1}^-1 with l_{1,1} = x2 x1^-1
    CHECK(p.relators[2] ==
          Word{{0, 1}, {1, -1}, {2, 1}, {1, 1}, {0, -1}, {2, -1}});
    CHECK(p.relators[3] ==
          Word{{1, 1}, {0, -1}, {3, 1}, {0, 1}, {1, -1}, {3, -1}});
  }
}

TEST_CASE("wirtinger surgery presentation") {
  SECTION("n=1 example") {
    SurgeryData d{1, 1, {5}, {2}, {3}, {1}};
    Presentation p = wirtinger_surgery_presentation(d);
    CHECK(p.relators.size() == 4);
    std::vector<BigInt> diag{5, 3};
    CHECK(homology(p) == cokernel(IntMatrix::diagonal(diag)));
  }

  SECTION("trivial fillings kill every meridian") {
    SurgeryData d{2, 1, {1, 1}, {0, 0}, {1, 1}, {0, 0}};
    CHECK(homology(wirtinger_surgery_presentation(d)).trivial());
    CHECK(homology(takahashi_presentation(d)).trivial());
  }

  SECTION("agrees with the balanced presentation") {
    std::mt19937_64 rng(3003);
    for (int trial = 0; trial < 10; ++trial) {
      SurgeryData d = random_valid_surgery(rng, 2, 1);
      CHECK(homology(wirtinger_surgery_presentation(d)) ==
            homology(takahashi_presentation(d)));
    }
  }
}

TEST_CASE("bezout coefficients") {
  CHECK(bezout_coefficients(5, 2).u == -2);
  CHECK(bezout_coefficients(5, 2).v == -1);
  CHECK(bezout_coefficients(1, 0).u == 0);
  CHECK(bezout_coefficients(1, 0).v == -1);
  CHECK(bezout_coefficients(0, 1).u == 1);
  CHECK(bezout_coefficients(0, 1).v == 0);
  CHECK_THROWS_AS(bezout_coefficients(4, 2), invalid_input);

  SECTION("q*u - p*v = 1 on random coprime pairs") {
    std::mt19937_64 rng(3004);
    std::uniform_int_distribution<std::int64_t> pick(-30, 30);
    int done = 0;
    while (done < 100) {
      std::int64_t p = pick(rng), q = pick(rng);
      if (std::gcd(p, q) != 1) continue;
      ++done;
      auto [u, v] = bezout_coefficients(p, q);
      CHECK(q * u - p * v == 1);
      if (p != 0) CHECK(std::abs(u) * 2 <= std::abs(p) + 1);
    }
  }
}

TEST_CASE("linking matrix") {
  SECTION("symmetric with zero diagonal for n >= 2") {
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t m = 1; m <= 3; ++m) {
        IntMatrix lk = linking_matrix(n, m);
        REQUIRE(lk.rows() == 2 * n * m);
        for (std::size_t i = 0; i < lk.rows(); ++i) {
          CHECK(lk.at(i, i) == 0);
          for (std::size_t j = 0; j < i; ++j) CHECK(lk.at(i, j) == lk.at(j, i));
        }
      }
  }

  SECTION("n=1 emits the fully cancelled convention") {
    IntMatrix lk = linking_matrix(1, 2);
    for (std::size_t i = 0; i < lk.rows(); ++i)
      for (std::size_t j = 0; j < lk.cols(); ++j) CHECK(lk.at(i, j) == 0);
  }

  SECTION("n=2, m=1 chain pattern") {
    IntMatrix lk = linking_matrix(2, 1);
    // component order c_{1,1}, c_{2,1}, c_{3,1}, c_{4,1}
    CHECK(lk.at(0, 1) == -1);
    CHECK(lk.at(0, 3) == 1);
    CHECK(lk.at(0, 2) == 0);
    CHECK(lk.at(1, 2) == 1);
  }
}

TEST_CASE("surgery homology matrix") {
  SECTION("n=1 diagonal") {
    SurgeryData d{1, 1, {5}, {2}, {3}, {1}};
    IntMatrix m = surgery_homology_matrix(d);
    std::vector<BigInt> diag{5, 3};
    CHECK(m == IntMatrix::diagonal(diag));
    CHECK(cokernel(m) == cokernel(IntMatrix::diagonal(diag)));
  }

  SECTION("trivial fillings give the identity") {
    SurgeryData d{2, 1, {1, 1}, {0, 0}, {1, 1}, {0, 0}};
    CHECK(surgery_homology_matrix(d) == IntMatrix::identity(4));
  }

  SECTION("agrees with the balanced presentation") {
    std::mt19937_64 rng(3005);
    for (int trial = 0; trial < 10; ++trial) {
      SurgeryData d = random_valid_surgery(rng, 3, 1);
      CHECK(cokernel(surgery_homology_matrix(d)) ==
            homology(takahashi_presentation(d)));
    }
  }
}

TEST_CASE("cover surgery data") {
  PeriodicSurgeryData d = cover_surgery_data(ConwayEven{{2, 2}}, 5);
  CHECK(d.n == 5);
  CHECK(d.m == 1);
  CHECK(d.p == std::vector<std::int64_t>{1});
  CHECK(d.r == std::vector<std::int64_t>{1});
  CHECK(d.q == std::vector<std::int64_t>{-1});
  CHECK(d.s == std::vector<std::int64_t>{1});

  PeriodicSurgeryData d2 = cover_surgery_data(ConwayEven{{2, 2, 2, 2}}, 3);
  CHECK(d2.m == 2);
  CHECK(d2.q == std::vector<std::int64_t>{-1, -1});
  CHECK(d2.s == std::vector<std::int64_t>{1, 1});

  PeriodicSurgeryData d3 = cover_surgery_data(ConwayEven{{2, -2}}, 2);
  CHECK(d3.q == std::vector<std::int64_t>{-1});
  CHECK(d3.s == std::vector<std::int64_t>{-1});

  CHECK_THROWS_AS(cover_surgery_data(ConwayEven{{2, 3}}, 2), invalid_input);
}

TEST_CASE("surgery data file format") {
  const std::string text =
      "n: 3\n"
      "m: 2\n"
      "pq: (5,2) (7,3) ; (1,-1) (1,1) ; (3,2) (2,1)\n"
      "rs: (3,1) (4,1) ; (1,1) (1,-1) ; (2,1) (5,3)\n";
  SurgeryData d = parse_surgery_data(text);
  CHECK(d.n == 3);
  CHECK(d.m == 2);
  CHECK(d.p[d.idx(0, 0)] == 5);
  CHECK(d.q[d.idx(0, 1)] == 3);
  CHECK(d.q[d.idx(1, 0)] == -1);
  CHECK(d.s[d.idx(2, 1)] == 3);

  SECTION("bit-exact round trip") {
    CHECK(surgery_data_to_text(d) == text);
    CHECK(surgery_data_to_text(parse_surgery_data(surgery_data_to_text(d))) ==
          surgery_data_to_text(d));
  }

  SECTION("errors") {
    CHECK_THROWS_AS(parse_surgery_data("n: 1\nm: 1\npq: (4,2)\nrs: (1,1)\n"),
                    invalid_input);
    CHECK_THROWS_AS(parse_surgery_data("n: 1\nm: 2\npq: (1,1)\nrs: (1,1) (1,0)\n"),
                    invalid_input);
    CHECK_THROWS_AS(parse_surgery_data("m: 1\npq: (1,1)\nrs: (1,1)\n"),
                    invalid_input);
    CHECK_THROWS_AS(parse_surgery_data("n: 1\nm: 1\npq: (1,1\nrs: (1,1)\n"),
                    invalid_input);
  }
}
