#include <doctest.h>

#include "cuspgroup/errors.hpp"
#include "cuspgroup/homcount.hpp"

using namespace cusp;

TEST_CASE("permutations") {
  const Permutation a = Permutation::from_cycles(3, {{1, 2}});
  const Permutation b = Permutation::from_cycles(3, {{2, 3}});
  // left to right: 1 -> 2 -> 3, 3 -> 3 -> 2, 2 -> 1 -> 1
  CHECK((a * b) == Permutation::from_cycles(3, {{1, 3, 2}}));
  CHECK((a * b).to_cycle_string() == "(1 3 2)");
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
  CHECK((a * a).is_identity());
  const Permutation c = Permutation::from_cycles(4, {{1, 2, 3, 4}});
  CHECK((c * c.inverse()).is_identity());
  CHECK(c(0) == 1);
  CHECK_THROWS(Permutation::from_cycles(3, {{1, 4}}));
}

TEST_CASE("symmetric group tables") {
  SymmetricGroup s4(4);
  CHECK(s4.order() == 24);
  CHECK(s4.element(0).is_identity());
  for (std::size_t i = 0; i < s4.order(); ++i) {
    CHECK(s4.index_of(s4.element(i)) == i);
    CHECK(s4.product(i, s4.inverse(i)) == 0);
    for (std::size_t j = 0; j < s4.order(); j += 5)
      CHECK(s4.element(s4.product(i, j)) == s4.element(i) * s4.element(j));
  }
}

TEST_CASE("word images") {
  const std::vector<Permutation> asg{Permutation::from_cycles(3, {{1, 2}}), Permutation::from_cycles(3, {{2, 3}})};
  CHECK(word_image(Word{}, asg).is_identity());
  CHECK(word_image(Word{1, -1}, asg).is_identity());
  CHECK(word_image(Word{1, 2}, asg) == Permutation::from_cycles(3, {{1, 3, 2}}));
}

TEST_CASE("hom counts") {
  CHECK(count_homs(Presentation({"a"}, {Word{1, 1}}), 3).total == 4);
  CHECK(count_homs(Presentation({"a", "b"}, {Word{1, 1}, Word{2, 2, 2}}), 3).total == 12);
  CHECK(count_homs(Presentation({"a"}, {}), 3).total == 6);
  CHECK(count_homs(Presentation({"a", "b"}, {}), 4).total == 576);
  const HomCountReport r = count_homs(Presentation({"a", "b"}, {Word{1, 1}, Word{2, 2, 2}}), 3);
  CHECK(r.surjective == 6);
  CHECK(count_homs(Presentation({"a"}, {Word{1}}), 5).total == 1);
  CHECK_THROWS_AS(count_homs(Presentation({"a"}, {}), 6), InvalidParameter);
  CHECK_THROWS_AS(count_homs(Presentation({"a"}, {}), 1), InvalidParameter);
  CHECK_THROWS_AS(count_homs(Presentation({"a", "b", "c"}, {}), 4, 10), BudgetExceeded);
}

TEST_CASE("relator triviality") {
  const Presentation z2({"a"}, {Word{1, 1}});
  const Presentation z3({"b"}, {Word{1, 1, 1}});
  const TrivialityReport ok = relator_triviality_check(GroupMap{z2, z2, {Word{1}}, {}}, 3);
  CHECK(ok.pass);
  CHECK_FALSE(ok.witness);
  const TrivialityReport bad = relator_triviality_check(GroupMap{z2, z3, {Word{1}}, {}}, 3);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.witness);
  CHECK(bad.witness->k == 3);
  CHECK(bad.witness->assignment.size() == 1);
  CHECK((bad.witness->assignment[0] == "(1 2 3)" || bad.witness->assignment[0] == "(1 3 2)"));
  CHECK_THROWS_AS(relator_triviality_check(GroupMap{z2, z2, {Word{1}}, {}}, 6), InvalidParameter);
}
