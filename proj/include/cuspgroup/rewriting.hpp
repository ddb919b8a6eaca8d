#pragma once

// Reidemeister-Schreier presentations for kernels of maps onto finite
// abelian groups.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cuspgroup/words.hpp"

namespace cusp {

// The group Z/moduli[0] + Z/moduli[1] + ... together with the image of each
// source generator.
class AbelianTarget {
public:
  using Element = std::vector<long>;

  AbelianTarget(std::vector<long> moduli, std::vector<Element> images);

  const std::vector<long>& moduli() const { return moduli_; }
  const std::vector<Element>& images() const { return images_; }
  std::size_t order() const { return order_; }
  std::size_t source_generators() const { return images_.size(); }

  // Mixed-radix index, first coordinate most significant.
  std::size_t encode(const Element& e) const;
  Element decode(std::size_t index) const;
  // Index of (element + sign * image(g)).
  std::size_t act(std::size_t index, Letter x) const;
  Element image(const Word& w) const;
  bool in_kernel(const Word& w) const;
  // The images together with the moduli span the whole target.
  bool images_generate() const;

private:
  std::vector<long> moduli_;
  std::vector<Element> images_;
  std::size_t order_ = 1;
};

enum class TransversalMode {
  // Breadth-first search over positive generator letters in the given order.
  BreadthFirst,
  // Products g_1^i1 g_2^i2 ... in row-major order; generator k must map to
  // the k-th unit vector.
  PowerBasis,
};

struct Transversal {
  std::vector<Word> representatives;           // in discovery order
  std::vector<std::size_t> position_of;        // target index -> representative position
  std::vector<std::size_t> element_of;         // representative position -> target index
};

Transversal build_transversal(const AbelianTarget& target, const std::vector<int>& generator_order,
                              TransversalMode mode = TransversalMode::BreadthFirst);

// Bookkeeping for the Schreier generators t x rep(t x)^-1.
class SchreierSystem {
public:
  // `trivial` lists (target index, source generator) pairs to treat as the
  // identity in addition to the freely trivial ones.
  SchreierSystem(const Presentation& source, AbelianTarget target, Transversal transversal,
                 const std::vector<std::pair<std::size_t, int>>& trivial = {});

  const AbelianTarget& target() const { return target_; }
  const Transversal& transversal() const { return transversal_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t generator_count() const { return names_.size(); }

  // 1-based subgroup generator index for (target index, source generator),
  // 0 when redundant.
  int generator_at(std::size_t element, int g) const { return table_[element * source_count_ + (g - 1)]; }
  // The word over the source generators a subgroup generator stands for.
  Word expansion(int subgroup_generator) const;

  // Rewrites w starting at the coset with the given target index.
  Word rewrite(const Word& w, std::size_t start = 0) const;

private:
  AbelianTarget target_;
  Transversal transversal_;
  std::size_t source_count_;
  std::vector<int> table_;
  std::vector<std::string> names_;
  std::vector<std::pair<std::size_t, int>> origin_;  // per subgroup generator
};

Word rewrite_word(const Word& w, const SchreierSystem& system);

struct SubgroupOptions {
  std::vector<int> generator_order;  // empty: 1, 2, ..., in source order
  TransversalMode mode = TransversalMode::BreadthFirst;
  std::vector<std::pair<std::size_t, int>> trivial;
  std::size_t simplify_budget = 0;
};

// Relators tau(t r t^-1) over every representative t and every relator r
// and extra kernel word. Throws NotGenerating / NotInKernel.
Presentation subgroup_presentation(const Presentation& p, const AbelianTarget& target,
                                   const std::vector<Word>& extra_kernel_words,
                                   const SubgroupOptions& options = {});

} // namespace cusp
