#pragma once

// Homomorphisms from finitely presented groups into small symmetric groups.
//
// Composition is left to right: the image of u*v is image(u) followed by
// image(v), i.e. (a*b)(s) = b(a(s)).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cuspgroup/words.hpp"

namespace cusp {

class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // 0-based images
  static Permutation identity(int k);
  // 1-based cycle notation, e.g. {{1,2,3}}.
  static Permutation from_cycles(int k, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int s) const { return images_[static_cast<std::size_t>(s)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;
  std::string to_cycle_string() const;  // 1-based, "()" for the identity

  // this, then other
  Permutation then(const Permutation& other) const;
  friend Permutation operator*(const Permutation& a, const Permutation& b) { return a.then(b); }
  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

// All k! permutations with product and inverse tables; index 0 is the
// identity.
class SymmetricGroup {
public:
  explicit SymmetricGroup(int k);

  int degree() const { return k_; }
  std::size_t order() const { return elements_.size(); }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::size_t index_of(const Permutation& p) const;
  std::size_t product(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  // Image of a word under an assignment of element indices.
  std::size_t evaluate(const Word& w, const std::vector<std::size_t>& assignment) const;

private:
  int k_;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
};

Permutation word_image(const Word& w, const std::vector<Permutation>& assignment);

struct HomCountReport {
  int k = 0;
  std::uint64_t total = 0;
  std::uint64_t surjective = 0;  // homomorphisms with image all of S_k
  std::uint64_t nodes = 0;       // search nodes visited
};

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000ULL;

// Calls `visit` with each homomorphism (element indices into `group`);
// returning false stops the enumeration. Returns the number of search nodes.
std::uint64_t enumerate_homs(const Presentation& p, const SymmetricGroup& group,
                             const std::function<bool(const std::vector<std::size_t>&)>& visit,
                             std::uint64_t node_budget = kDefaultNodeBudget);

HomCountReport count_homs(const Presentation& p, int k, std::uint64_t node_budget = kDefaultNodeBudget);

// Reference count by trying every tuple; only for tiny inputs.
std::uint64_t count_homs_naive(const Presentation& p, int k);


struct TrivialityWitness {
  int k = 0;
  std::size_t relator = 0;                  // index of the offending source relator
  std::vector<std::string> assignment;      // target generator images, cycle notation
  std::string relator_image;
};

struct TrivialityReport {
  int kmax = 0;
  std::uint64_t homs_checked = 0;
  bool pass = true;
  std::optional<TrivialityWitness> witness;
};

// For each homomorphism of the map's target into S_k, k = 2..kmax, checks
// that every source relator maps to the identity.
TrivialityReport relator_triviality_check(const GroupMap& m, int kmax,
                                          std::uint64_t node_budget = kDefaultNodeBudget);

} // namespace cusp
