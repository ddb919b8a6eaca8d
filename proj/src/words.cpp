#include "cuspgroup/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "cuspgroup/errors.hpp"

namespace cusp {

namespace {

void push_reduced(std::vector<Letter>& out, Letter x) {
  if (!out.empty() && out.back() == -x)
    out.pop_back();
  else
    out.push_back(x);
}

std::vector<Letter> rotate_copy(const std::vector<Letter>& v, std::size_t k) {
  std::vector<Letter> r;
  r.reserve(v.size());
  r.insert(r.end(), v.begin() + static_cast<long>(k), v.end());
  r.insert(r.end(), v.begin(), v.begin() + static_cast<long>(k));
  return r;
}

// Lexicographically least rotation, two-pointer scan in linear time.
std::vector<Letter> least_rotation(const std::vector<Letter>& v) {
  const std::size_t n = v.size();
  if (n < 2) return v;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Letter a = v[(i + k) % n], b = v[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return rotate_copy(v, std::min(i, j));
}

} // namespace

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter x : letters) {
    if (x == 0) throw InvalidParameter("word letter 0 is not a generator");
    push_reduced(letters_, x);
  }
}

int Word::max_generator() const {
  int m = 0;
  for (Letter x : letters_) m = std::max(m, std::abs(x));
  return m;
}

std::size_t Word::occurrences(int g) const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [g](Letter x) { return std::abs(x) == g; }));
}

Word multiply(const Word& w1, const Word& w2) {
  std::vector<Letter> out(w1.letters());
  for (Letter x : w2) push_reduced(out, x);
  return Word(std::move(out));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(-*it);
  return Word(std::move(out));
}

Word conjugate(const Word& w, const Word& by) { return invert(by) * w * by; }

Word power(const Word& w, long exponent) {
  Word base = exponent < 0 ? invert(w) : w;
  Word out;
  for (long k = 0; k < std::labs(exponent); ++k) out = out * base;
  return out;
}

Word commutator(const Word& u, const Word& v) { return invert(u) * invert(v) * u * v; }

Word cyclic_reduce(const Word& w) {
  const auto& l = w.letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(l.begin() + static_cast<long>(lo), l.begin() + static_cast<long>(hi)));
}

Word normalize_relator(const Word& w) {
  Word c = cyclic_reduce(w);
  if (c.empty()) return c;
  auto a = least_rotation(c.letters());
  auto b = least_rotation(invert(c).letters());
  return Word(std::min(a, b));
}

bool cyclically_equivalent(const Word& a, const Word& b) {
  return normalize_relator(a) == normalize_relator(b);
}

Word substitute(const Word& w, int g, const Word& image) {
  std::vector<Letter> out;
  out.reserve(w.size());
  Word inv;
  bool have_inv = false;
  for (Letter x : w) {
    if (x == g) {
      for (Letter y : image) push_reduced(out, y);
    } else if (x == -g) {
      if (!have_inv) {
        inv = invert(image);
        have_inv = true;
      }
      for (Letter y : inv) push_reduced(out, y);
    } else {
      push_reduced(out, x);
    }
  }
  return Word(std::move(out));
}

Word apply_map(const Word& w, std::span<const Word> images) {
  std::vector<Word> inverses(images.size());
  std::vector<bool> have(images.size(), false);
  std::vector<Letter> out;
  for (Letter x : w) {
    std::size_t g = static_cast<std::size_t>(std::abs(x)) - 1;
    if (g >= images.size()) throw InvalidParameter("apply_map: letter outside the map's domain");
    if (x > 0) {
      for (Letter y : images[g]) push_reduced(out, y);
    } else {
      if (!have[g]) {
        inverses[g] = invert(images[g]);
        have[g] = true;
      }
      for (Letter y : inverses[g]) push_reduced(out, y);
    }
  }
  return Word(std::move(out));
}

std::vector<long> exponent_sums(const Word& w, std::size_t generator_count) {
  std::vector<long> sums(generator_count, 0);
  for (Letter x : w) {
    std::size_t g = static_cast<std::size_t>(std::abs(x)) - 1;
    if (g >= generator_count) throw InvalidParameter("exponent_sums: letter outside generator range");
    sums[g] += x > 0 ? 1 : -1;
  }
  return sums;
}

bool valid_generator_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Presentation::Presentation(std::vector<std::string> names, std::vector<Word> relators) {
  std::set<std::string> seen;
  int index = 1;
  for (auto& n : names) {
    if (!valid_generator_name(n)) throw InvalidParameter("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw InvalidParameter("duplicate generator name '" + n + "'");
    generators_.push_back({index++, std::move(n)});
  }
  for (auto& r : relators) add_relator(std::move(r));
}

void Presentation::add_relator(Word r) {
  if (r.max_generator() > static_cast<int>(generators_.size()))
    throw InvalidParameter("relator references an undeclared generator");
  relators_.push_back(std::move(r));
}

std::size_t Presentation::total_length() const {
  std::size_t n = 0;
  for (const auto& r : relators_) n += r.size();
  return n;
}

std::optional<int> Presentation::find(const std::string& name) const {
  for (const auto& g : generators_)
    if (g.name == name) return g.index;
  return std::nullopt;
}

int Presentation::index_of(const std::string& name) const {
  auto g = find(name);
  if (!g) throw InvalidParameter("unknown generator '" + name + "'");
  return *g;
}

std::vector<std::string> Presentation::names() const {
  std::vector<std::string> out;
  for (const auto& g : generators_) out.push_back(g.name);
  return out;
}

Word Presentation::word(std::initializer_list<std::pair<std::string, int>> parts) const {
  Word w;
  for (const auto& [name, e] : parts) w = w * power(Word::generator(index_of(name)), e);
  return w;
}

namespace {

// Drops generator g (which must no longer occur) and renumbers the rest.
Presentation remove_generator(const Presentation& p, int g, const std::vector<Word>& relators) {
  std::vector<std::string> names;
  for (const auto& gen : p.generators())
    if (gen.index != g) names.push_back(gen.name);
  std::vector<Word> out;
  out.reserve(relators.size());
  for (const auto& r : relators) {
    std::vector<Letter> l;
    l.reserve(r.size());
    for (Letter x : r) {
      int a = std::abs(x);
      if (a == g) throw InvalidParameter("remove_generator: generator still occurs");
      int na = a > g ? a - 1 : a;
      l.push_back(x > 0 ? na : -na);
    }
    out.emplace_back(std::move(l));
  }
  return Presentation(std::move(names), std::move(out));
}

Word renumber_after_removal(const Word& w, int g) {
  std::vector<Letter> l;
  l.reserve(w.size());
  for (Letter x : w) {
    int a = std::abs(x);
    int na = a > g ? a - 1 : a;
    l.push_back(x > 0 ? na : -na);
  }
  return Word(std::move(l));
}

} // namespace

Presentation tietze_eliminate(const Presentation& p, int g, const Word& defining) {
  if (g < 1 || g > static_cast<int>(p.generator_count()))
    throw InvalidParameter("tietze_eliminate: generator out of range");
  if (defining.contains(g)) throw NoDefiningRelator("defining word contains the eliminated generator");
  const Word target = normalize_relator(Word::generator(g) * invert(defining));
  std::optional<std::size_t> consumed;
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    if (normalize_relator(p.relators()[i]) == target) {
      consumed = i;
      break;
    }
  }
  if (!consumed)
    throw NoDefiningRelator("no relator equivalent to " + p.name(g) + " * defining^-1");
  std::vector<Word> relators;
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    if (i == *consumed) continue;
    Word r = cyclic_reduce(substitute(p.relators()[i], g, defining));
    if (!r.empty()) relators.push_back(std::move(r));
  }
  return remove_generator(p, g, relators);
}

Presentation tietze_eliminate(const Presentation& p, const std::string& g, const Word& defining) {
  return tietze_eliminate(p, p.index_of(g), defining);
}

namespace {

// Relator cleanup: normalize, drop trivial and duplicate relators. Returns
// true when anything changed.
bool cleanup_relators(std::vector<Word>& relators) {
  std::vector<Word> out;
  std::set<Word> seen;
  bool changed = false;
  for (const auto& r : relators) {
    Word n = normalize_relator(r);
    if (n != r) changed = true;
    if (n.empty() || !seen.insert(n).second) {
      changed = true;
      continue;
    }
    out.push_back(std::move(n));
  }
  relators = std::move(out);
  return changed;
}

struct Candidate {
  std::size_t relator_length;
  int generator;
  std::size_t relator;
};

} // namespace

SimplifyResult simplify_tracked(const Presentation& p, const SimplifyOptions& options) {
  SimplifyResult result{p, {}, 0};
  for (int g = 1; g <= static_cast<int>(p.generator_count()); ++g)
    result.generator_images.push_back(Word::generator(g));
  if (options.budget == 0) return result;

  std::vector<std::string> names = p.names();
  std::vector<Word> relators = p.relators();
  std::vector<Word>& images = result.generator_images;

  if (cleanup_relators(relators)) ++result.steps;

  while (result.steps < options.budget) {
    // shortest relator first, then lowest generator index
    std::optional<Candidate> best;
    for (std::size_t i = 0; i < relators.size(); ++i) {
      const Word& r = relators[i];
      if (best && r.size() > best->relator_length) continue;
      std::map<int, std::size_t> count;
      for (Letter x : r) ++count[std::abs(x)];
      for (const auto& [g, c] : count) {
        if (c != 1) continue;
        if (r.size() - 1 > options.max_defining_length) continue;
        Candidate cand{r.size(), g, i};
        if (!best || cand.relator_length < best->relator_length ||
            (cand.relator_length == best->relator_length && cand.generator < best->generator)) {
          best = cand;
        }
        break;  // map is ordered, first hit is the lowest index
      }
    }
    if (!best) break;

    const Word& r = relators[best->relator];
    const int g = best->generator;
    // rotate so the single occurrence is first: g^e * rest = 1
    std::size_t pos = 0;
    while (std::abs(r[pos]) != g) ++pos;
    std::vector<Letter> rot(r.begin() + static_cast<long>(pos), r.end());
    rot.insert(rot.end(), r.begin(), r.begin() + static_cast<long>(pos));
    const bool positive = rot.front() > 0;
    Word rest(std::vector<Letter>(rot.begin() + 1, rot.end()));
    Word defining = positive ? invert(rest) : rest;

    std::vector<Word> next;
    next.reserve(relators.size());
    for (std::size_t i = 0; i < relators.size(); ++i) {
      if (i == best->relator) continue;
      Word s = cyclic_reduce(substitute(relators[i], g, defining));
      if (!s.empty()) next.push_back(renumber_after_removal(s, g));
    }
    for (auto& img : images) img = renumber_after_removal(substitute(img, g, defining), g);
    names.erase(names.begin() + (g - 1));
    relators = std::move(next);
    cleanup_relators(relators);
    ++result.steps;
  }
  result.presentation = Presentation(std::move(names), std::move(relators));
  return result;
}

Presentation simplify(const Presentation& p, std::size_t budget) {
  return simplify_tracked(p, SimplifyOptions{budget}).presentation;
}

std::string word_to_string(const Word& w, const Presentation& p) {
  std::string out;
  for (Letter x : w) {
    if (!out.empty()) out += ' ';
    out += p.name(std::abs(x));
    if (x < 0) out += "^-1";
  }
  return out;
}

std::string to_text(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& g : p.generators()) out += " " + g.name;
  out += '\n';
  for (const auto& r : p.relators()) out += word_to_string(r, p) + '\n';
  return out;
}

Presentation parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> names;
  bool have_header = false;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (!have_header) {
      if (tokens.empty()) continue;
      if (tokens[0] != "gens:") throw ParseError("expected 'gens:' header line");
      names.assign(tokens.begin() + 1, tokens.end());
      have_header = true;
      continue;
    }
    if (!tokens.empty()) rows.push_back(std::move(tokens));
  }
  if (!have_header) throw ParseError("missing 'gens:' header line");
  Presentation p(names, {});
  for (const auto& row : rows) {
    std::vector<Letter> letters;
    for (const auto& tok : row) {
      std::string name = tok;
      int sign = 1;
      if (name.size() > 3 && name.ends_with("^-1")) {
        name.resize(name.size() - 3);
        sign = -1;
      }
      auto g = p.find(name);
      if (!g) throw ParseError("unknown generator token '" + tok + "'");
      letters.push_back(sign * *g);
    }
    p.add_relator(Word(std::move(letters)));
  }
  return p;
}

} // namespace cusp
