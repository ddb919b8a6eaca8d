#pragma once

#include <random>
#include <vector>

#include "cuspgroup/words.hpp"

namespace testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// Letters in +-1..gens, not necessarily reduced.
inline std::vector<int> random_letters(int gens, int max_len) {
  std::vector<int> out(static_cast<std::size_t>(uniform(0, max_len)));
  for (auto& l : out) l = uniform(1, gens) * (uniform(0, 1) ? 1 : -1);
  return out;
}

inline cusp::Word random_word(int gens, int max_len) { return cusp::Word(random_letters(gens, max_len)); }

inline cusp::Presentation random_presentation(int gens, int rels, int max_len) {
  std::vector<std::string> names;
  for (int i = 0; i < gens; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<cusp::Word> rs;
  for (int i = 0; i < rels; ++i) rs.push_back(random_word(gens, max_len));
  return cusp::Presentation(names, rs);
}

} // namespace testing
