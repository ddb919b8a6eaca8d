#pragma once

// Free-group words and finitely presented groups.
//
// A letter is a nonzero signed integer: +g is the generator with 1-based
// index g, -g its inverse. Words are kept freely reduced at all times.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <span>
#include <string>
#include <vector>

namespace cusp {

using Letter = int;

class Word {
public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  static Word generator(int index) { return Word({index}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  // Largest generator index referenced, 0 for the identity.
  int max_generator() const;
  // Number of occurrences of generator g (either sign).
  std::size_t occurrences(int g) const;
  bool contains(int g) const { return occurrences(g) != 0; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

private:
  std::vector<Letter> letters_;
};

Word multiply(const Word& w1, const Word& w2);
Word invert(const Word& w);
// by^-1 * w * by
Word conjugate(const Word& w, const Word& by);
Word power(const Word& w, long exponent);
// [u,v] = u^-1 v^-1 u v
Word commutator(const Word& u, const Word& v);

inline Word operator*(const Word& a, const Word& b) { return multiply(a, b); }

// Strips matching first/last letters so the word is cyclically reduced.
Word cyclic_reduce(const Word& w);
// Cyclic reduction, then the lexicographically least rotation of the word
// and of its inverse.
Word normalize_relator(const Word& w);
// True when a and b define the same relator up to rotation and inversion.
bool cyclically_equivalent(const Word& a, const Word& b);

// Replaces every occurrence of generator g by `image`; other generator
// indices are left untouched.
Word substitute(const Word& w, int g, const Word& image);
// Applies a full endomorphism: letter +g maps to images[g-1].
Word apply_map(const Word& w, std::span<const Word> images);
// Sum of exponents of each generator, length `generator_count`.
std::vector<long> exponent_sums(const Word& w, std::size_t generator_count);

struct GeneratorId {
  int index = 0;  // 1-based
  std::string name;

  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

bool valid_generator_name(const std::string& name);

class Presentation {
public:
  Presentation() = default;
  // Generator indices are assigned 1..names.size() in order.
  Presentation(std::vector<std::string> names, std::vector<Word> relators);

  const std::vector<GeneratorId>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t generator_count() const { return generators_.size(); }
  std::size_t relator_count() const { return relators_.size(); }
  std::size_t total_length() const;

  const std::string& name(int index) const { return generators_.at(index - 1).name; }
  std::optional<int> find(const std::string& name) const;
  int index_of(const std::string& name) const;
  std::vector<std::string> names() const;

  // Word over this presentation's generators from (name, exponent) pairs.
  Word word(std::initializer_list<std::pair<std::string, int>> parts) const;

  void add_relator(Word r);

private:
  std::vector<GeneratorId> generators_;
  std::vector<Word> relators_;
};

// Removes generator g using `defining`. Some relator must be cyclically
// equivalent to g * defining^-1; it is consumed. Throws NoDefiningRelator.
Presentation tietze_eliminate(const Presentation& p, int g, const Word& defining);
Presentation tietze_eliminate(const Presentation& p, const std::string& g, const Word& defining);

struct SimplifyOptions {
  std::size_t budget = 1000;
  // Eliminations whose defining word would exceed this length are skipped.
  std::size_t max_defining_length = static_cast<std::size_t>(-1);
};

struct SimplifyResult {
  Presentation presentation;
  // Image of every input generator as a word in the output generators.
  std::vector<Word> generator_images;
  std::size_t steps = 0;
};

SimplifyResult simplify_tracked(const Presentation& p, const SimplifyOptions& options = {});
Presentation simplify(const Presentation& p, std::size_t budget);

// A homomorphism candidate: generator g of `source` maps to images[g-1],
// a word over `target`. Well-definedness is checked, not assumed.
struct GroupMap {
  Presentation source;
  Presentation target;
  std::vector<Word> images;
  // Optional extra (source word, expected target word) pairs.
  std::vector<std::pair<Word, Word>> consistency;

  Word apply(const Word& w) const { return apply_map(w, images); }
};

// Text format: "gens: a b c" then one relator per line, tokens "a" or "a^-1".
std::string to_text(const Presentation& p);
Presentation parse_text(const std::string& text);
std::string word_to_string(const Word& w, const Presentation& p);

} // namespace cusp
