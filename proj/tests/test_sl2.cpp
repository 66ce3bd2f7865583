#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "origami/errors.hpp"
#include "origami/sl2.hpp"

using namespace origami;
using namespace origami::testfix;

namespace {

Sl2Word random_word(std::mt19937& rng, int max_len) {
  std::vector<Sl2Letter> letters;
  int len = 1 + static_cast<int>(rng() % max_len);
  for (int i = 0; i < len; ++i)
    letters.push_back(static_cast<Sl2Letter>(rng() % 4));
  return Sl2Word(std::move(letters));
}

}  // namespace

TEST_CASE("word parsing, printing and free reduction", "[sl2]") {
  Sl2Word w = Sl2Word::parse("TSt");
  CHECK(w.str() == "TSt");
  CHECK(w.size() == 3);

  CHECK(Sl2Word::parse("Ss").empty());
  CHECK(Sl2Word::parse("TSst").empty());
  CHECK((Sl2Word::parse("TS") * Sl2Word::parse("st")).empty());
  CHECK(Sl2Word::parse("TSt").inverse().str() == "Tst");
  CHECK_THROWS_AS(Sl2Word::parse("TX"), std::invalid_argument);

  CHECK(Sl2Word::t_power(3).str() == "TTT");
  CHECK(Sl2Word::t_power(-2).str() == "tt");
}

TEST_CASE("word_to_matrix fixed values", "[sl2]") {
  CHECK(word_to_matrix(Sl2Word()) == Sl2Matrix::identity());
  CHECK(word_to_matrix(Sl2Word::parse("SS")) == Sl2Matrix{-1, 0, 0, -1});
  // S^3 T S = (1 0; -1 1), the sheer fixing direction (1,-1)
  Sl2Matrix a = word_to_matrix(Sl2Word::parse("SSSTS"));
  CHECK(a == Sl2Matrix{1, 0, -1, 1});
  CHECK(a.a == 1);
  CHECK(a.c == -1);
  // the string reads left to right: "TSt" is T*S*T^-1
  CHECK(word_to_matrix(Sl2Word::parse("TSt")) ==
        letter_matrix(Sl2Letter::T) * letter_matrix(Sl2Letter::S) *
            letter_matrix(Sl2Letter::TInv));
}

TEST_CASE("matrix_to_word round-trips", "[sl2]") {
  CHECK(matrix_to_word(Sl2Matrix::identity()).empty());

  for (const Sl2Matrix& m :
       {Sl2Matrix{1, 5, 0, 1}, Sl2Matrix{1, 0, -3, 1}, Sl2Matrix{-1, 0, 0, -1},
        Sl2Matrix{0, -1, 1, 0}, Sl2Matrix{19, 8, 7, 3}}) {
    REQUIRE(m.det() == 1);
    CHECK(word_to_matrix(matrix_to_word(m)) == m);
  }

  CHECK_THROWS_AS(matrix_to_word(Sl2Matrix{1, 0, 0, -1}), std::invalid_argument);

  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    Sl2Word w = random_word(rng, 30);
    Sl2Matrix m = word_to_matrix(w);
    CHECK(word_to_matrix(matrix_to_word(m)) == m);
  }
}

TEST_CASE("matrix arithmetic overflow is an error, not wraparound", "[sl2]") {
  // powers of a hyperbolic element grow exponentially
  Sl2Word block = Sl2Word::parse("Tstsss");  // matrix (2 1; 1 1)
  REQUIRE(word_to_matrix(block) == Sl2Matrix{2, 1, 1, 1});
  CHECK_THROWS_AS(word_to_matrix(block.pow(100)), Sl2OverflowError);
}

TEST_CASE("generator action rules", "[sl2]") {
  const RegularOrigami& o = a5();

  SECTION("S then S^-1 is the identity") {
    RegularOrigami r = act_generator(act_generator(o, Sl2Letter::S), Sl2Letter::SInv);
    CHECK(r.x == o.x);
    CHECK(r.y == o.y);
  }

  SECTION("T maps (x, y) to (x, y x^-1)") {
    RegularOrigami r = act_generator(o, Sl2Letter::T);
    CHECK(r.x == o.x);
    CHECK(r.y == o.y * Perm::from_cycles(5, {{1, 3, 2}}));
  }

  SECTION("S^4 is the identity on tuples") {
    RegularOrigami r = o;
    for (int i = 0; i < 4; ++i) r = act_generator(r, Sl2Letter::S);
    CHECK(r.x == o.x);
    CHECK(r.y == o.y);
  }
}

// These three tuples pin the orientation of the word action: the rightmost
// letter acts first, matching word_to_matrix under a left action.
TEST_CASE("action convention lock", "[sl2]") {
  for (const RegularOrigami& o : {d8(), a5()}) {
    const Perm &x = o.x, &y = o.y;

    RegularOrigami st = act_word(o, Sl2Word::parse("st"));  // S^-1 T^-1
    CHECK(st.x == y * x);
    CHECK(st.y == x.inverse());

    RegularOrigami ts = act_word(o, Sl2Word::parse("Ts"));  // T S^-1
    CHECK(ts.x == y);
    CHECK(ts.y == x.inverse() * y.inverse());

    for (long long m = 1; m <= 3; ++m) {
      RegularOrigami sheared = act_word(o, Sl2Word::parse("SSSTS").pow(m));
      CHECK(sheared.x == x * y.pow(m));
      CHECK(sheared.y == y);
    }
  }

  // the same formula instantiated on the swapped tuple (G, y, x)
  const RegularOrigami& o = a5();
  RegularOrigami swapped{o.group, o.y, o.x};
  RegularOrigami ts = act_word(swapped, Sl2Word::parse("Ts"));
  CHECK(ts.x == o.x);
  CHECK(ts.y == o.y.inverse() * o.x.inverse());
}

TEST_CASE("empty word acts trivially", "[sl2]") {
  const RegularOrigami& o = d8();
  RegularOrigami r = act_word(o, Sl2Word());
  CHECK(r.x == o.x);
  CHECK(r.y == o.y);
}

TEST_CASE("action is compatible with word concatenation", "[sl2]") {
  std::mt19937 rng(777);
  for (const RegularOrigami& o : {d8(), a5()}) {
    for (int trial = 0; trial < 50; ++trial) {
      Sl2Word w1 = random_word(rng, 12), w2 = random_word(rng, 12);
      RegularOrigami lhs = act_word(act_word(o, w2), w1);
      RegularOrigami rhs = act_word(o, w1 * w2);
      CHECK(lhs.x == rhs.x);
      CHECK(lhs.y == rhs.y);
    }
  }
}

TEST_CASE("SL(2,Z) relations act trivially up to equivalence", "[sl2]") {
  Sl2Word s4 = Sl2Word::parse("SSSS");
  Sl2Word st6 = Sl2Word::parse("ST").pow(6);
  REQUIRE(word_to_matrix(s4) == Sl2Matrix::identity());
  REQUIRE(word_to_matrix(st6) == Sl2Matrix::identity());
  for (const RegularOrigami& o : catalog()) {
    CHECK(equivalent(o, act_word(o, s4)));
    CHECK(equivalent(o, act_word(o, st6)));
  }
}

TEST_CASE("the action preserves group size and cone angles", "[sl2]") {
  std::mt19937 rng(31);
  for (const RegularOrigami& o : {d8(), d10(), a5()}) {
    auto base_angles = cone_angles(cayley_origami(o));
    for (int trial = 0; trial < 10; ++trial) {
      RegularOrigami image = act_word(o, random_word(rng, 10));
      CHECK(image.group->order() == o.group->order());
      CHECK(cone_angles(cayley_origami(image)) == base_angles);
    }
  }
}
