#include "cuspgroup/families.hpp"

#include <algorithm>
#include <set>

#include "cuspgroup/errors.hpp"
#include "cuspgroup/rewriting.hpp"

namespace cusp {

namespace {

int wrap(int a, int n) { return ((a % n) + n) % n; }

void require_n(int n) {
  if (n < 2) throw InvalidParameter("n must be at least 2, got " + std::to_string(n));
}

// Relation lhs = rhs stored as lhs * rhs^-1.
Word relation(const Word& lhs, const Word& rhs) { return lhs * invert(rhs); }

} // namespace

Presentation presentation_G_raw() {
  Presentation p({"e1", "e2", "l0", "l1", "l2"}, {});
  const Word e = p.word({{"e1", 1}});
  const Word e2 = p.word({{"e2", 1}});
  const Word l0 = p.word({{"l0", 1}});
  const Word l1 = p.word({{"l1", 1}});
  const Word l2 = p.word({{"l2", 1}});
  const Word l1_conj = invert(l1) * e * l1;  // l1^-1 e l1

  p.add_relator(relation(e, e2));                                                       // i2
  p.add_relator(commutator(e * l1 * invert(e), l2));                                    // i1
  p.add_relator(relation(power(l1 * e, 2), power(e * l1, 2)));                          // i3
  p.add_relator(relation(power(l2 * e, 2), power(e * l2, 2)));                          // i4
  p.add_relator(commutator(e * l1 * invert(e), l0));                                    // i5
  p.add_relator(relation(power(l0 * l1_conj, 2), power(l1_conj * l0, 2)));              // i6
  p.add_relator(relation(invert(l0) * l1_conj * l0, l2 * e * invert(l2)));              // i7
  p.add_relator(commutator(l2, l1_conj * l0 * invert(l1) * invert(e) * l1));            // i8
  p.add_relator(l2 * e * e * l1 * l0);                                                  // projective
  return p;
}

Presentation presentation_G() {
  Presentation p({"e", "l1", "l2"}, {});
  const Word e = p.word({{"e", 1}});
  const Word l1 = p.word({{"l1", 1}});
  const Word l2 = p.word({{"l2", 1}});
  p.add_relator(commutator(e * l1 * invert(e), l2));
  p.add_relator(relation(power(l1 * e, 2), power(e * l1, 2)));
  p.add_relator(relation(power(l2 * e, 2), power(e * l2, 2)));
  p.add_relator(relation(power(l1 * l2 * e, 2), power(e * l1 * l2, 2)));
  return p;
}

std::string eps_name(int i, int j) { return "eps_" + std::to_string(i) + "_" + std::to_string(j); }

Word long_relator(int n) {
  require_n(n);
  std::vector<Letter> letters;
  for (int k = 0; k < n; ++k) {
    letters.push_back(k * n + k + 1);
    letters.push_back(k * n + wrap(k + 1, n) + 1);
  }
  return Word(std::move(letters));
}

Presentation presentation_pi1(int n) {
  require_n(n);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) names.push_back(eps_name(i, j));
  auto eps = [n](int i, int j) { return Word::generator(wrap(i, n) * n + wrap(j, n) + 1); };

  std::vector<Word> relators;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      relators.push_back(relation(eps(i + 2, j), conjugate(eps(i, j), eps(i + 1, j))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      relators.push_back(relation(eps(i, j + 2), conjugate(eps(i, j), eps(i, j + 1))));
  relators.push_back(long_relator(n));
  return Presentation(std::move(names), std::move(relators));
}

std::vector<std::vector<Word>> reduced_generator_words(int n) {
  require_n(n);
  const auto nn = static_cast<std::size_t>(n);
  std::vector<std::vector<Word>> w(nn, std::vector<Word>(nn));
  w[0][0] = Word::generator(1);
  w[0][1] = Word::generator(2);
  w[1][0] = Word::generator(3);
  w[1][1] = Word::generator(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 2; j < nn; ++j) w[i][j] = conjugate(w[i][j - 2], w[i][j - 1]);
  for (std::size_t i = 2; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j) w[i][j] = conjugate(w[i - 2][j], w[i - 1][j]);
  return w;
}

Presentation presentation_pi1_reduced(int n) {
  const Presentation full = presentation_pi1(n);
  const auto w = reduced_generator_words(n);
  std::vector<Word> images;
  for (const auto& row : w)
    for (const auto& x : row) images.push_back(x);

  std::vector<Word> relators;
  std::set<Word> seen;
  for (const auto& r : full.relators()) {
    Word s = cyclic_reduce(apply_map(r, images));
    if (s.empty() || !seen.insert(normalize_relator(s)).second) continue;
    relators.push_back(std::move(s));
  }
  std::stable_sort(relators.begin(), relators.end(),
                   [](const Word& a, const Word& b) { return a.size() < b.size(); });
  return Presentation({eps_name(0, 0), eps_name(0, 1), eps_name(1, 0), eps_name(1, 1)}, std::move(relators));
}

Word eles_word(const Presentation& p, int n, int i, int j) {
  auto e = [&](int a, int b) {
    return Word::generator(p.index_of("e_" + std::to_string(wrap(a, n)) + "_" + std::to_string(wrap(b, n))));
  };
  return invert(e(i, j)) * e(i, 0) * invert(e(i + 1, 0)) * e(i + 1, j);
}

Derivation derive_pi1_details(int n, MeridianElimination mode, std::size_t simplify_budget) {
  require_n(n);
  const Presentation g = presentation_G();
  const int e = g.index_of("e"), l1 = g.index_of("l1"), l2 = g.index_of("l2");
  AbelianTarget target({n, n}, {{0, 0}, {1, 0}, {0, 1}});

  SubgroupOptions opts;
  opts.generator_order = {l1, l2};
  opts.mode = TransversalMode::PowerBasis;
  if (mode == MeridianElimination::PreRewrite) {
    opts.trivial.emplace_back(target.encode({n - 1, 0}), l1);
    for (int i = 0; i < n; ++i) opts.trivial.emplace_back(target.encode({i, n - 1}), l2);
  }
  const Word L1 = Word::generator(l1), L2 = Word::generator(l2), E = Word::generator(e);
  const std::vector<Word> meridians{power(L1, n), power(L2, n), power(L2 * E * E * L1, -n)};

  Derivation d;
  d.rewritten = subgroup_presentation(g, target, meridians, opts);

  Presentation p = d.rewritten;
  if (mode == MeridianElimination::PostRewrite) {
    p = tietze_eliminate(p, "l1_" + std::to_string(n - 1) + "_0", Word{});
    for (int i = 0; i < n; ++i) p = tietze_eliminate(p, "l2_" + std::to_string(i) + "_" + std::to_string(n - 1), Word{});
  }
  d.meridians_cut = p;

  for (int j = 1; j < n; ++j)
    for (int i = 0; i < n; ++i)
      p = tietze_eliminate(p, "l1_" + std::to_string(i) + "_" + std::to_string(j), eles_word(p, n, i, j));
  d.eles = p;
  d.final = simplify(p, simplify_budget);
  return d;
}

Presentation derive_pi1_via_rs(int n, MeridianElimination mode) { return derive_pi1_details(n, mode).final; }

ZariskiVariant parse_zariski_variant(const std::string& s) {
  if (s == "stated") return ZariskiVariant::Stated;
  if (s == "corrected") return ZariskiVariant::Corrected;
  throw InvalidParameter("unknown variant '" + s + "' (expected stated or corrected)");
}

std::string to_string(ZariskiVariant v) { return v == ZariskiVariant::Stated ? "stated" : "corrected"; }

Presentation presentation_zariski3(ZariskiVariant variant) {
  Presentation p({"g2", "g00", "g01", "g10", "g11"}, {});
  const Word g2 = p.word({{"g2", 1}});
  const Word g00 = p.word({{"g00", 1}}), g01 = p.word({{"g01", 1}});
  const Word g10 = p.word({{"g10", 1}}), g11 = p.word({{"g11", 1}});
  auto conj_by = [](const Word& x, const Word& y) { return x * y * invert(x); };  // x y x^-1

  const Word g20 = conj_by(g10, g00);
  const Word g21 = conj_by(g11, g10);
  const Word g02 = conj_by(g01, g00);
  const Word g12 = variant == ZariskiVariant::Stated ? conj_by(g11, g10) : conj_by(g11, g01);
  const Word g22 = conj_by(g21, g20);

  const Word table[3][3] = {{g00, g01, g02}, {g10, g11, g12}, {g20, g21, g22}};
  for (const auto& row : table)
    for (const Word& g : row) p.add_relator(relation(g2 * g * g2, g * g2 * g));
  return p;
}

GroupMap zariski_iso_candidate(ZariskiVariant variant) {
  GroupMap m;
  m.source = presentation_pi1_reduced(3);
  m.target = presentation_zariski3(variant);
  const Presentation& t = m.target;
  const Word g2 = t.word({{"g2", 1}});
  auto image = [&](const std::string& name) -> Word {
    if (name == eps_name(0, 0)) return g2 * t.word({{"g11", 1}}) * invert(g2);
    if (name == eps_name(1, 0)) return g2;
    if (name == eps_name(0, 1)) return t.word({{"g10", 1}});
    return g2 * t.word({{"g01", 1}}) * invert(g2);  // eps_1_1
  };
  for (const auto& gen : m.source.generators()) m.images.push_back(image(gen.name));

  const Presentation& s = m.source;
  const Word e00 = s.word({{eps_name(0, 0), 1}}), e01 = s.word({{eps_name(0, 1), 1}});
  const Word e11 = s.word({{eps_name(1, 1), 1}});
  m.consistency.emplace_back(e11 * conjugate(e00, e01) * invert(e11), t.word({{"g00", 1}}));
  return m;
}

Presentation presentation_oka(int n) {
  require_n(n);
  Presentation p({"a", "b"}, {});
  p.add_relator(power(p.word({{"a", 1}}), 2));
  p.add_relator(power(p.word({{"b", 1}}), n));
  return p;
}

OkaQuotient oka_quotient(int n) {
  Presentation p = presentation_pi1(n);
  for (int i = 0; i < n; ++i)
    for (int j = 1; j < n; ++j)
      p.add_relator(relation(Word::generator(i * n + j + 1), Word::generator(i * n + 1)));
  auto simplified = simplify_tracked(p, SimplifyOptions{});
  OkaQuotient q;
  q.quotient = simplified.presentation;
  q.map.source = presentation_pi1(n);
  q.map.target = q.quotient;
  q.map.images = simplified.generator_images;
  return q;
}

AbelianMapReport abelian_map_check(const GroupMap& m) {
  AbelianMapReport r;
  r.source = abelianization(m.source);
  r.target = abelianization(m.target);
  const IntegerMatrix target_relations = relator_matrix(m.target);
  const std::size_t t = m.target.generator_count();

  IntegerMatrix images(m.images.size(), t);
  for (std::size_t g = 0; g < m.images.size(); ++g) {
    auto sums = exponent_sums(m.images[g], t);
    for (std::size_t c = 0; c < t; ++c) images(g, c) = sums[c];
  }
  // each source relator must land in the target relation lattice
  r.well_defined = true;
  const IntegerMatrix source_relations = relator_matrix(m.source);
  if (source_relations.rows() > 0) {
    IntegerMatrix pushed = source_relations * images;
    r.well_defined = cokernel(IntegerMatrix::stack(target_relations, pushed)) == r.target;
  }
  r.surjective = cokernel(IntegerMatrix::stack(target_relations, images)).trivial();
  // finitely generated abelian groups are Hopfian
  r.isomorphism = r.well_defined && r.surjective && r.source == r.target;
  return r;
}

MapCheckReport map_check(const GroupMap& m, int kmax, std::uint64_t node_budget) {
  MapCheckReport report;
  report.abelian = abelian_map_check(m);
  report.triviality = relator_triviality_check(m, kmax, node_budget);
  for (int k = 2; k <= kmax; ++k)
    report.hom_counts.push_back(
        {k, count_homs(m.source, k, node_budget).total, count_homs(m.target, k, node_budget).total});
  for (const auto& [src, expected] : m.consistency) {
    bool agree = true;
    for (int k = 2; k <= kmax && agree; ++k) {
      SymmetricGroup group(k);
      std::vector<std::size_t> src_assign(m.source.generator_count());
      enumerate_homs(
          m.target, group,
          [&](const std::vector<std::size_t>& a) {
            for (std::size_t g = 0; g < m.images.size(); ++g) src_assign[g] = group.evaluate(m.images[g], a);
            agree = group.evaluate(src, src_assign) == group.evaluate(expected, a);
            return agree;
          },
          node_budget);
    }
    report.consistency.push_back(agree);
  }
  report.pass = report.abelian.well_defined && report.triviality.pass;
  return report;
}

} // namespace cusp
