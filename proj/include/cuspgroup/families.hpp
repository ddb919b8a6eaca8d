#pragma once

// Concrete presentations: the complement of a conic and three tangent
// lines, the cuspidal family pi_1(P^2 - C_n), the nine-cusp sextic
// presentation through the torus braid group, and the free products
// Z/2 * Z/n together with the maps relating them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cuspgroup/abelian.hpp"
#include "cuspgroup/homcount.hpp"
#include "cuspgroup/words.hpp"

namespace cusp {

// Generators e1, e2, l0, l1, l2; the nine monodromy and projective relations.
Presentation presentation_G_raw();
// Generators e, l1, l2; four relators.
Presentation presentation_G();

// Generator name of eps_{i,j}; indices taken mod n.
std::string eps_name(int i, int j);
// n^2 generators eps_i_j (row-major), 2n^2 conjugation relators and the
// long relator eps00 eps01 eps11 eps12 ... eps_{n-1,n-1} eps_{n-1,0}.
Presentation presentation_pi1(int n);
// The long relator of presentation_pi1(n), 2n positive letters.
Word long_relator(int n);
// Four generators eps_0_0, eps_0_1, eps_1_0, eps_1_1.
Presentation presentation_pi1_reduced(int n);
// Words W_{i,j} over the reduced generators standing for eps_{i,j}.
std::vector<std::vector<Word>> reduced_generator_words(int n);

enum class MeridianElimination {
  PostRewrite,  // rewrite first, then remove the meridian generators via their relators
  PreRewrite,   // treat the meridian Schreier generators as trivial while rewriting
};

struct Derivation {
  Presentation rewritten;      // raw Reidemeister-Schreier output
  Presentation meridians_cut;  // meridian generators l1_{n-1}_0 and l2_i_{n-1} gone
  Presentation eles;           // all l1_i_j eliminated through e-words
  Presentation final;          // after simplify
};

Derivation derive_pi1_details(int n, MeridianElimination mode = MeridianElimination::PostRewrite,
                              std::size_t simplify_budget = 1000);
Presentation derive_pi1_via_rs(int n, MeridianElimination mode = MeridianElimination::PostRewrite);
// l1_{i,j} = e_{i,j}^-1 e_{i,0} e_{i+1,0}^-1 e_{i+1,j} over the Schreier generators of p.
Word eles_word(const Presentation& p, int n, int i, int j);

enum class ZariskiVariant { Stated, Corrected };
ZariskiVariant parse_zariski_variant(const std::string& s);
std::string to_string(ZariskiVariant v);

// Generators g2, g00, g01, g10, g11; braid relations g2 g_ij g2 = g_ij g2 g_ij.
Presentation presentation_zariski3(ZariskiVariant variant);
// From presentation_pi1_reduced(3) to presentation_zariski3(variant).
GroupMap zariski_iso_candidate(ZariskiVariant variant);

// <a, b | a^2, b^n>
Presentation presentation_oka(int n);

struct OkaQuotient {
  GroupMap map;  // presentation_pi1(n) -> quotient
  Presentation quotient;
};
OkaQuotient oka_quotient(int n);

struct AbelianMapReport {
  AbelianStructure source, target;
  bool well_defined = false;
  bool surjective = false;
  bool isomorphism = false;
};
AbelianMapReport abelian_map_check(const GroupMap& m);

struct HomCountRow {
  int k = 0;
  std::uint64_t source = 0, target = 0;
};

struct MapCheckReport {
  AbelianMapReport abelian;
  TrivialityReport triviality;
  std::vector<HomCountRow> hom_counts;
  // Per consistency pair: true when both sides agree in every enumerated quotient.
  std::vector<bool> consistency;
  bool pass = false;  // abelian well-defined and triviality check passed
};
MapCheckReport map_check(const GroupMap& m, int kmax, std::uint64_t node_budget = kDefaultNodeBudget);

} // namespace cusp
