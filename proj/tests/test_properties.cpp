#include <doctest.h>

#include <numeric>

#include "cuspgroup/abelian.hpp"
#include "cuspgroup/fox.hpp"
#include "cuspgroup/homcount.hpp"
#include "cuspgroup/rewriting.hpp"
#include "support.hpp"

using namespace cusp;
using testing::rng;
using testing::uniform;

namespace {

constexpr int kTrials = 200;

// Cancels adjacent inverse pairs in random order until none remain.
std::vector<int> reduce_randomly(std::vector<int> w) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == -w[i + 1]) spots.push_back(i);
    if (spots.empty()) return w;
    const std::size_t i = spots[static_cast<std::size_t>(uniform(0, static_cast<int>(spots.size()) - 1))];
    w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
  }
}

IntegerMatrix random_matrix(std::size_t r, std::size_t c, int lo, int hi) {
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(lo, hi);
  return m;
}

// d_k = gcd of all k x k minors divided by the previous one.
std::vector<mpz_class> determinantal_divisors(const IntegerMatrix& m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    mpz_class g = 0;
    std::vector<bool> rs(m.rows(), false), cs(m.cols(), false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
      do {
        IntegerMatrix sub(k, k);
        std::size_t a = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) {
          if (!rs[i]) continue;
          std::size_t b = 0;
          for (std::size_t j = 0; j < m.cols(); ++j)
            if (cs[j]) sub(a, b++) = m(i, j);
          ++a;
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(determinant(sub)).get_mpz_t());
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    if (g == 0) {
      out.resize(n, 0);
      return out;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

LaurentPolynomial random_poly(int max_terms, int range) {
  std::vector<mpz_class> c(static_cast<std::size_t>(uniform(0, max_terms)));
  for (auto& v : c) v = uniform(-range, range);
  return LaurentPolynomial(uniform(-3, 3), c);
}

std::uint64_t order_dividing(int r, int k) {
  SymmetricGroup s(k);
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < s.order(); ++i) {
    std::size_t x = 0;
    for (int e = 0; e < r; ++e) x = s.product(x, i);
    if (x == 0) ++n;
  }
  return n;
}

} // namespace

TEST_CASE("free reduction is confluent") {
  for (int t = 0; t < kTrials; ++t) {
    const auto letters = testing::random_letters(3, 30);
    CHECK(Word(reduce_randomly(letters)).letters() == Word(letters).letters());
    CHECK(reduce_randomly(letters) == Word(letters).letters());
  }
}

TEST_CASE("multiplication is associative and inversion an involution") {
  for (int t = 0; t < kTrials; ++t) {
    const Word a = testing::random_word(3, 12), b = testing::random_word(3, 12), c = testing::random_word(3, 12);
    CHECK((a * b) * c == a * (b * c));
    CHECK(invert(invert(a)) == a);
    CHECK((a * invert(a)).empty());
    CHECK(invert(a * b) == invert(b) * invert(a));
  }
}

TEST_CASE("Tietze moves preserve abelianization and S3 counts") {
  for (int t = 0; t < kTrials; ++t) {
    const Presentation p = testing::random_presentation(2, 2, 6);
    const AbelianStructure ab = abelianization(p);
    const std::uint64_t homs = count_homs(p, 3).total;

    // add d = w, then remove it again two ways
    const Word w = testing::random_word(2, 5);
    std::vector<Word> rels = p.relators();
    rels.push_back(Word{3} * invert(w));
    const Presentation bigger({"a", "b", "d"}, rels);
    CHECK(abelianization(bigger) == ab);
    CHECK(count_homs(bigger, 3).total == homs);

    const Presentation back = tietze_eliminate(bigger, "d", w);
    CHECK(abelianization(back) == ab);
    CHECK(count_homs(back, 3).total == homs);

    const Presentation s = simplify(bigger, 50);
    CHECK(s.generator_count() <= bigger.generator_count());
    CHECK(abelianization(s) == ab);
    CHECK(count_homs(s, 3).total == homs);
  }
}

TEST_CASE("Smith normal form round trip") {
  for (int t = 0; t < kTrials; ++t) {
    const IntegerMatrix m = random_matrix(5, 5, -20, 20);
    const SmithForm f = smith_normal_form(m);
    CHECK(f.left * m * f.right == f.diagonal);
    CHECK(abs(determinant(f.left)) == 1);
    CHECK(abs(determinant(f.right)) == 1);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        if (i != j) CHECK(f.diagonal(i, j) == 0);
    for (std::size_t i = 0; i + 1 < 5; ++i) {
      CHECK(f.diagonal(i, i) >= 0);
      if (f.diagonal(i, i) != 0) CHECK(f.diagonal(i + 1, i + 1) % f.diagonal(i, i) == 0);
    }
  }
  for (int t = 0; t < kTrials; ++t) {
    const IntegerMatrix m = random_matrix(static_cast<std::size_t>(uniform(1, 4)), static_cast<std::size_t>(uniform(1, 4)), -6, 6);
    const SmithForm f = smith_normal_form(m);
    CHECK(f.left * m * f.right == f.diagonal);
  }
}

TEST_CASE("Smith normal form agrees with determinantal divisors") {
  for (int t = 0; t < kTrials; ++t) {
    IntegerMatrix m = random_matrix(4, 4, -9, 9);
    if (t % 4 == 0)
      for (std::size_t j = 0; j < 4; ++j) m(3, j) = m(0, j) * 2 - m(1, j);  // rank deficient
    CHECK(invariant_factors(m) == determinantal_divisors(m));
  }
}

TEST_CASE("Smith normal form does not overflow") {
  // Products of such entries leave 64-bit range during elimination.
  IntegerMatrix m(6, 6);
  const mpz_class big("1000000000007");
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = big * (static_cast<long>(i * 7 + j * 3) % 11 - 5) + (i == j ? 997 : 991);
  const SmithForm f = smith_normal_form(m);
  CHECK(f.left * m * f.right == f.diagonal);
  mpz_class prod = 1;
  for (std::size_t i = 0; i < 6; ++i) prod *= f.diagonal(i, i);
  CHECK(prod == abs(determinant(m)));
  CHECK(invariant_factors(m) == determinantal_divisors(m));
}

TEST_CASE("Fox calculus identities") {
  for (int t = 0; t < kTrials; ++t) {
    const Weights w{uniform(-2, 2), uniform(-2, 2), uniform(-2, 2)};
    const Word u = testing::random_word(3, 10), v = testing::random_word(3, 10);
    const LaurentPolynomial phi_u = LaurentPolynomial::monomial(1, weighted_exponent(u, w));
    for (int g = 1; g <= 3; ++g)
      CHECK(fox_derivative(u * v, g, w) == fox_derivative(u, g, w) + phi_u * fox_derivative(v, g, w));

    LaurentPolynomial sum;
    for (int g = 1; g <= 3; ++g)
      sum += fox_derivative(u, g, w) * (LaurentPolynomial::monomial(1, w[static_cast<std::size_t>(g - 1)]) -
                                        LaurentPolynomial::constant(1));
    CHECK(sum == phi_u - LaurentPolynomial::constant(1));
  }
}

TEST_CASE("Laurent ring laws and gcd divisibility") {
  for (int t = 0; t < kTrials; ++t) {
    const LaurentPolynomial a = random_poly(5, 6), b = random_poly(5, 6), c = random_poly(4, 6);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);

    const LaurentPolynomial g = gcd(a * c, b * c);
    if (a.is_zero() && b.is_zero()) continue;
    if (!(a * c).is_zero()) CHECK(divides(g, a * c));
    if (!(b * c).is_zero()) CHECK(divides(g, b * c));
    if (!c.is_zero() && !g.is_zero()) CHECK(divides(c, g));
  }
}

TEST_CASE("backtracking agrees with naive enumeration") {
  for (int t = 0; t < kTrials; ++t) {
    const Presentation p = testing::random_presentation(uniform(1, 3), uniform(0, 3), 6);
    CHECK(count_homs(p, 3).total == count_homs_naive(p, 3));
  }
}

TEST_CASE("free product hom counts") {
  for (int k = 2; k <= 4; ++k)
    for (int r = 1; r <= 4; ++r)
      for (int s = 1; s <= 4; ++s) {
        const Presentation p({"a", "b"}, {power(Word{1}, r), power(Word{2}, s)});
        CHECK(count_homs(p, k).total == order_dividing(r, k) * order_dividing(s, k));
      }
}

TEST_CASE("Schreier index formula and rewriting round trip") {
  for (int t = 0; t < kTrials; ++t) {
    const int gens = uniform(1, 3);
    std::vector<long> moduli;
    for (int i = 0, c = uniform(1, 2); i < c; ++i) moduli.push_back(uniform(1, 4));
    std::vector<AbelianTarget::Element> images;
    for (int g = 0; g < gens; ++g) {
      AbelianTarget::Element e;
      for (long m : moduli) e.push_back(uniform(0, static_cast<int>(m) - 1));
      images.push_back(e);
    }
    const AbelianTarget target(moduli, images);
    if (!target.images_generate()) {
      --t;
      continue;
    }
    std::vector<std::string> names;
    for (int g = 0; g < gens; ++g) names.push_back(std::string(1, static_cast<char>('a' + g)));
    const Presentation free(names, {});
    const Presentation k = subgroup_presentation(free, target, {});
    const std::size_t index = target.order();
    CHECK(k.generator_count() == index * static_cast<std::size_t>(gens) - index + 1);
    CHECK(k.relator_count() == 0);

    std::vector<int> order(static_cast<std::size_t>(gens));
    std::iota(order.begin(), order.end(), 1);
    const Transversal tr = build_transversal(target, order);
    const SchreierSystem sys(free, target, tr);
    std::vector<Word> expansions;
    for (int i = 1; i <= static_cast<int>(sys.generator_count()); ++i) expansions.push_back(sys.expansion(i));
    Word w = testing::random_word(gens, 10);
    w = w * invert(tr.representatives[tr.position_of[target.encode(target.image(w))]]);
    REQUIRE(target.in_kernel(w));
    CHECK(apply_map(rewrite_word(w, sys), expansions) == w);
  }
}
