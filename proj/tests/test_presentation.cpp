#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "takman/presentation.hpp"

using namespace takman;

namespace {

// x_{k+1}^-1 x_k^2 x_{k-1}^-1 x_k at k = 1, indices mod n (0-based gens).
Word figure_eight_relator(std::size_t n) {
  GenRef k = 0;
  GenRef next = static_cast<GenRef>(1 % n);
  GenRef prev = static_cast<GenRef>(n - 1);
  return Word::from_raw(std::vector<Syllable>{
      {next, -1}, {k, 2}, {prev, -1}, {k, 1}});
}

}  // namespace

TEST_CASE("abelianization matrix") {
  SECTION("single power relator") {
    Presentation p{{"a"}, {Word{{0, 5}}}};
    IntMatrix m = abelianization_matrix(p);
    REQUIRE(m.rows() == 1);
    REQUIRE(m.cols() == 1);
    CHECK(m.at(0, 0) == 5);
  }

  SECTION("figure-eight cover at n=2") {
    Presentation p = make_cyclic_presentation(2, figure_eight_relator(2));
    IntMatrix m = abelianization_matrix(p);
    REQUIRE(m.rows() == 2);
    CHECK(m.at(0, 0) == 3);
    CHECK(m.at(0, 1) == -2);
    CHECK(m.at(1, 0) == -2);
    CHECK(m.at(1, 1) == 3);
  }

  SECTION("no relators") {
    Presentation p{{"a", "b"}, {}};
    IntMatrix m = abelianization_matrix(p);
    CHECK(m.rows() == 0);
    CHECK(m.cols() == 2);
  }
}

TEST_CASE("homology") {
  CHECK(homology(Presentation{{"a"}, {Word{{0, 5}}}}) == AbelianGroup{{5}, 0});
  CHECK(homology(make_cyclic_presentation(2, figure_eight_relator(2))) ==
        AbelianGroup{{5}, 0});
  CHECK(homology(Presentation{{"a", "b"}, {}}) == AbelianGroup{{}, 2});
}

TEST_CASE("apply_shift") {
  Word w{{0, 2}, {1, -1}};
  Presentation p{{"x1", "x2"}, {w}};

  SECTION("swap") {
    Presentation q = apply_shift(p, ShiftMap::cyclic(2));
    CHECK(q.relators[0] == Word{{1, 2}, {0, -1}});
    CHECK(q.generators == p.generators);
  }

  SECTION("identity") {
    CHECK(apply_shift(p, ShiftMap::identity(2)).relators == p.relators);
  }

  SECTION("applying the cycle n times is the identity") {
    Presentation q = make_cyclic_presentation(5, figure_eight_relator(5));
    Presentation r = q;
    for (int i = 0; i < 5; ++i) r = apply_shift(r, ShiftMap::cyclic(5));
    CHECK(r.relators == q.relators);
  }

  SECTION("non-bijection rejected") {
    ShiftMap bad;
    bad.image = {0, 0};
    CHECK_THROWS_AS(apply_shift(p, bad), invalid_input);
  }

  SECTION("homology invariant under generator relabelling") {
    std::mt19937_64 rng(2001);
    Presentation q = make_cyclic_presentation(4, figure_eight_relator(4));
    std::vector<GenRef> perm{0, 1, 2, 3};
    for (int trial = 0; trial < 20; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      ShiftMap s;
      s.image = perm;
      CHECK(homology(apply_shift(q, s)) == homology(q));
    }
  }
}

TEST_CASE("is_cyclic_presentation") {
  SECTION("cover presentations are cyclic") {
    Presentation p = make_cyclic_presentation(5, figure_eight_relator(5));
    CHECK(is_cyclic_presentation(p, ShiftMap::cyclic(5)));
  }

  SECTION("shift mismatch") {
    Presentation p{{"x1", "x2"}, {Word{{0, 1}}, Word{{1, 2}}}};
    CHECK_FALSE(is_cyclic_presentation(p, ShiftMap::cyclic(2)));
  }

  SECTION("n=1 is vacuously cyclic") {
    Presentation p{{"x1"}, {Word{{0, 3}}}};
    CHECK(is_cyclic_presentation(p, ShiftMap::cyclic(1)));
  }

  SECTION("count mismatch") {
    Presentation p{{"x1", "x2"}, {Word{{0, 1}}}};
    CHECK_FALSE(is_cyclic_presentation(p, ShiftMap::cyclic(2)));
  }
}

TEST_CASE("make_cyclic_presentation") {
  SECTION("n=3 relators are the three shifts") {
    Word w{{1, -1}, {0, 2}, {2, -1}, {0, 1}};
    Presentation p = make_cyclic_presentation(3, w);
    CHECK(p.generators == std::vector<std::string>{"x1", "x2", "x3"});
    REQUIRE(p.relators.size() == 3);
    CHECK(p.relators[0] == w);
    CHECK(p.relators[1] == Word{{2, -1}, {1, 2}, {0, -1}, {1, 1}});
    CHECK(p.relators[2] == Word{{0, -1}, {2, 2}, {1, -1}, {2, 1}});
    CHECK(is_cyclic_presentation(p, ShiftMap::cyclic(3)));
  }

  SECTION("n=1") {
    Presentation p = make_cyclic_presentation(1, Word{{0, 3}});
    CHECK(p.generators == std::vector<std::string>{"x1"});
    CHECK(p.relators == std::vector<Word>{Word{{0, 3}}});
  }

  SECTION("empty word gives free abelianization") {
    Presentation p = make_cyclic_presentation(2, Word());
    CHECK(p.relators == std::vector<Word>{Word(), Word()});
    CHECK(homology(p) == AbelianGroup{{}, 2});
  }

  SECTION("out-of-range generator rejected") {
    CHECK_THROWS_AS(make_cyclic_presentation(2, Word{{2, 1}}), invalid_input);
  }

  SECTION("abelianization is circulant") {
    for (std::size_t n = 2; n <= 6; ++n) {
      IntMatrix m = abelianization_matrix(
          make_cyclic_presentation(n, figure_eight_relator(n)));
      for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          CHECK(m.at(i + 1, (j + 1) % n) == m.at(i, j));
    }
  }
}

TEST_CASE("relator multiset comparison") {
  Presentation a{{"x1", "x2"}, {Word{{0, 1}}, Word{{1, 2}}}};
  Presentation b{{"x1", "x2"}, {Word{{1, 2}}, Word{{0, 1}}}};
  CHECK(same_relator_multiset(a, b));
  Presentation c{{"x1", "x2"}, {Word{{1, 2}}, Word{{1, 2}}}};
  CHECK_FALSE(same_relator_multiset(a, c));
}

TEST_CASE("presentation file format") {
  Presentation p = make_cyclic_presentation(3, figure_eight_relator(3));
  std::string text = presentation_to_text(p);
  CHECK(text ==
        "gens: x1 x2 x3\n"
        "rel: x2^-1 x1^2 x3^-1 x1\n"
        "rel: x3^-1 x2^2 x1^-1 x2\n"
        "rel: x1^-1 x3^2 x2^-1 x3\n");

  SECTION("bit-exact round trip") {
    Presentation q = parse_presentation(text);
    CHECK(q.generators == p.generators);
    CHECK(q.relators == p.relators);
    CHECK(presentation_to_text(q) == text);
  }

  SECTION("empty relator round trips") {
    Presentation e{{"a"}, {Word()}};
    std::string t = presentation_to_text(e);
    CHECK(t == "gens: a\nrel:\n");
    CHECK(presentation_to_text(parse_presentation(t)) == t);
  }

  SECTION("no relators") {
    Presentation e{{"a", "b"}, {}};
    CHECK(presentation_to_text(e) == "gens: a b\n");
    CHECK(parse_presentation("gens: a b\n").generators ==
          std::vector<std::string>{"a", "b"});
  }

  SECTION("parse errors") {
    CHECK_THROWS_AS(parse_presentation("rel: a\n"), invalid_input);
    CHECK_THROWS_AS(parse_presentation("gens: a\nnope: x\n"), invalid_input);
    CHECK_THROWS_AS(parse_presentation("gens: a a\n"), invalid_input);
    CHECK_THROWS_AS(parse_presentation("gens: a\nrel: b\n"), invalid_input);
  }
}

TEST_CASE("generic cgt export") {
  Presentation p{{"a[1][1]", "a[2][1]"}, {Word{{0, -5}}, Word{{1, -3}}}};
  std::string out = presentation_to_cgt(p);
  CHECK(out.find("F := FreeGroup( \"g1\", \"g2\" );") != std::string::npos);
  CHECK(out.find("\"g1^-5\"") != std::string::npos);
  CHECK(out.find("\"g2^-3\"") != std::string::npos);
  CHECK(out.find("# g1 = a[1][1]") != std::string::npos);
  CHECK(out.find("G := F / ParseRelators") != std::string::npos);

  SECTION("empty presentation still yields a constructor") {
    Presentation e{{"a"}, {}};
    std::string t = presentation_to_cgt(e);
    CHECK(t.find("F := FreeGroup( \"g1\" );") != std::string::npos);
    CHECK(t.find("G := F / [];") != std::string::npos);
  }

  SECTION("mixed-sign word uses * separators") {
    Presentation w{{"u", "v"}, {Word{{0, 1}, {1, -2}, {0, 3}}}};
    CHECK(presentation_to_cgt(w).find("\"g1*g2^-2*g1^3\"") != std::string::npos);
  }
}
