#include <doctest.h>

#include "cuspgroup/errors.hpp"
#include "cuspgroup/words.hpp"

using namespace cusp;

namespace {
constexpr int a = 1, b = 2, c = 3;
}

TEST_CASE("multiply reduces freely") {
  CHECK(Word{a, b} * Word{-b, c} == Word{a, c});
  Word w{a, -b, c, c};
  CHECK((w * invert(w)).empty());
  CHECK(Word{a, b, -a} * Word{a, b} == Word{a, b, b});
  CHECK(Word{a, -a, b} == Word{b});
  CHECK_THROWS_AS(Word({0}), InvalidParameter);
}

TEST_CASE("invert") {
  CHECK(invert(Word{a, -b, c}) == Word{-c, b, -a});
  CHECK(invert(Word{}).empty());
  CHECK(invert(Word{a}) == Word{-a});
}

TEST_CASE("conjugate, power and commutator") {
  CHECK(conjugate(Word{a}, Word{b}) == Word{-b, a, b});
  CHECK(conjugate(Word{a}, Word{}) == Word{a});
  CHECK(conjugate(Word{-b, a, b}, Word{-b}) == Word{a});
  CHECK(power(Word{a, b}, 2) == Word{a, b, a, b});
  CHECK(power(Word{a, b}, -1) == Word{-b, -a});
  CHECK(power(Word{a}, 0).empty());
  CHECK(commutator(Word{a}, Word{b}) == Word{-a, -b, a, b});
}

TEST_CASE("cyclic reduction and relator normalization") {
  CHECK(cyclic_reduce(Word{-a, b, c, a}) == Word{b, c});
  CHECK(cyclic_reduce(Word{a, b, -a}) == Word{b});
  const Word r{b, c, a};
  CHECK(normalize_relator(r) == normalize_relator(Word{a, b, c}));
  CHECK(normalize_relator(r) == normalize_relator(invert(r)));
  CHECK(normalize_relator(Word{-a, b, a}) == normalize_relator(Word{b}));
  CHECK(cyclically_equivalent(Word{a, b, -c}, Word{c, -b, -a}));
  CHECK_FALSE(cyclically_equivalent(Word{a, b}, Word{a, -b}));
}

TEST_CASE("substitution and exponent sums") {
  CHECK(substitute(Word{a, b, -a}, a, Word{c, c}) == Word{c, c, b, -c, -c});
  const std::vector<Word> images{Word{b}, Word{a}};
  CHECK(apply_map(Word{a, -b, a}, images) == Word{b, -a, b});
  CHECK(exponent_sums(Word{a, b, -a, b, b}, 3) == std::vector<long>{0, 3, 0});
}

TEST_CASE("generator names") {
  CHECK(valid_generator_name("eps_0_1"));
  CHECK(valid_generator_name("g2"));
  CHECK_FALSE(valid_generator_name("2g"));
  CHECK_FALSE(valid_generator_name(""));
  CHECK_FALSE(valid_generator_name("a-b"));
  CHECK_THROWS_AS(Presentation({"a", "a"}, {}), InvalidParameter);
  CHECK_THROWS_AS(Presentation({"a"}, {Word{2}}), InvalidParameter);
}

TEST_CASE("tietze_eliminate") {
  SUBCASE("b = a^2") {
    Presentation p({"a", "b"}, {Word{b, -a, -a}});
    Presentation q = tietze_eliminate(p, "b", Word{a, a});
    CHECK(q.generator_count() == 1);
    CHECK(q.relator_count() == 0);
  }
  SUBCASE("c = ab") {
    Presentation p({"a", "b", "c"}, {Word{c, -b, -a}, Word{c, c, c}});
    Presentation q = tietze_eliminate(p, "c", Word{a, b});
    CHECK(q.names() == std::vector<std::string>{"a", "b"});
    REQUIRE(q.relator_count() == 1);
    CHECK(cyclically_equivalent(q.relators()[0], power(Word{a, b}, 3)));
  }
  SUBCASE("a rotated or inverted relator still matches") {
    for (const Word& r : {Word{-a, b, -a}, Word{a, a, -b}}) {
      Presentation p({"a", "b"}, {r});
      CHECK(tietze_eliminate(p, "b", Word{a, a}).generator_count() == 1);
    }
  }
  SUBCASE("missing relator") {
    Presentation p({"a", "b"}, {Word{b, b}});
    CHECK_THROWS_AS(tietze_eliminate(p, "b", Word{a}), NoDefiningRelator);
    CHECK_THROWS_AS(tietze_eliminate(p, "b", Word{b}), NoDefiningRelator);
  }
}

TEST_CASE("simplify") {
  CHECK(simplify(Presentation({"a"}, {Word{a, -a}}), 10).relator_count() == 0);
  Presentation q = simplify(Presentation({"a", "b"}, {Word{b}, Word{a, a}}), 10);
  CHECK(q.names() == std::vector<std::string>{"a"});
  CHECK(q.relators() == std::vector<Word>{Word{-a, -a}});

  Presentation p({"a", "b", "c"}, {Word{c, -b, -a}, Word{c, c, c}, Word{a, b, -a, -b}});
  CHECK(simplify(p, 0).relators() == p.relators());
  SimplifyResult r = simplify_tracked(p);
  CHECK(r.presentation.names() == std::vector<std::string>{"b", "c"});
  CHECK(r.generator_images.size() == 3);
  // a = c b^-1 over the surviving generators b, c
  CHECK(r.generator_images[0] == Word{2, -1});
  CHECK(simplify(p, 1000).relators() == simplify(p, 1000).relators());
}

TEST_CASE("text format round trip") {
  Presentation p({"x", "y_1"}, {Word{1, -2, 1}, Word{2, 2}});
  const std::string text = to_text(p);
  CHECK(text == "gens: x y_1\nx y_1^-1 x\ny_1 y_1\n");
  Presentation q = parse_text(text);
  CHECK(q.names() == p.names());
  CHECK(q.relators() == p.relators());
  CHECK_THROWS_AS(parse_text("x y\n"), ParseError);
  CHECK_THROWS_AS(parse_text("gens: x\nz\n"), ParseError);
  CHECK_THROWS_AS(parse_text("gens: x\nx^2\n"), ParseError);
}
