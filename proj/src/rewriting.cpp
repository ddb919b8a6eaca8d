#include "cuspgroup/rewriting.hpp"

#include <cstdlib>
#include <deque>
#include <limits>

#include "cuspgroup/abelian.hpp"
#include "cuspgroup/errors.hpp"

namespace cusp {

namespace {
constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}
} // namespace

AbelianTarget::AbelianTarget(std::vector<long> moduli, std::vector<Element> images)
    : moduli_(std::move(moduli)), images_(std::move(images)) {
  for (long m : moduli_) {
    if (m < 1) throw InvalidParameter("AbelianTarget: moduli must be positive");
    order_ *= static_cast<std::size_t>(m);
  }
  for (auto& img : images_) {
    if (img.size() != moduli_.size()) throw InvalidParameter("AbelianTarget: image arity mismatch");
    for (std::size_t k = 0; k < img.size(); ++k) img[k] = mod(img[k], moduli_[k]);
  }
}

std::size_t AbelianTarget::encode(const Element& e) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < moduli_.size(); ++k)
    idx = idx * static_cast<std::size_t>(moduli_[k]) + static_cast<std::size_t>(mod(e[k], moduli_[k]));
  return idx;
}

AbelianTarget::Element AbelianTarget::decode(std::size_t index) const {
  Element e(moduli_.size());
  for (std::size_t k = moduli_.size(); k-- > 0;) {
    e[k] = static_cast<long>(index % static_cast<std::size_t>(moduli_[k]));
    index /= static_cast<std::size_t>(moduli_[k]);
  }
  return e;
}

std::size_t AbelianTarget::act(std::size_t index, Letter x) const {
  Element e = decode(index);
  const auto& img = images_.at(static_cast<std::size_t>(std::abs(x)) - 1);
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += x > 0 ? img[k] : -img[k];
  return encode(e);
}

AbelianTarget::Element AbelianTarget::image(const Word& w) const {
  Element e(moduli_.size(), 0);
  for (Letter x : w) {
    const auto& img = images_.at(static_cast<std::size_t>(std::abs(x)) - 1);
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = mod(e[k] + (x > 0 ? img[k] : -img[k]), moduli_[k]);
  }
  return e;
}

bool AbelianTarget::in_kernel(const Word& w) const {
  for (long v : image(w))
    if (v != 0) return false;
  return true;
}

bool AbelianTarget::images_generate() const {
  const std::size_t d = moduli_.size();
  IntegerMatrix m(images_.size() + d, d);
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t k = 0; k < d; ++k) m(i, k) = images_[i][k];
  for (std::size_t k = 0; k < d; ++k) m(images_.size() + k, k) = moduli_[k];
  return cokernel(m).trivial();
}

Transversal build_transversal(const AbelianTarget& target, const std::vector<int>& generator_order,
                              TransversalMode mode) {
  if (!target.images_generate()) throw NotGenerating("generator images do not generate the target");
  Transversal t;
  t.position_of.assign(target.order(), kUnset);
  auto add = [&](std::size_t element, Word rep) {
    t.position_of[element] = t.representatives.size();
    t.element_of.push_back(element);
    t.representatives.push_back(std::move(rep));
  };

  if (mode == TransversalMode::PowerBasis) {
    const auto& moduli = target.moduli();
    if (generator_order.size() != moduli.size())
      throw InvalidParameter("power-basis transversal needs one generator per cyclic factor");
    for (std::size_t k = 0; k < moduli.size(); ++k) {
      AbelianTarget::Element unit(moduli.size(), 0);
      unit[k] = moduli[k] == 1 ? 0 : 1;
      if (target.image(Word::generator(generator_order[k])) != unit)
        throw InvalidParameter("power-basis generator does not map to a unit vector");
    }
    for (std::size_t idx = 0; idx < target.order(); ++idx) {
      auto e = target.decode(idx);
      Word rep;
      for (std::size_t k = 0; k < e.size(); ++k) rep = rep * power(Word::generator(generator_order[k]), e[k]);
      add(idx, std::move(rep));
    }
    return t;
  }

  std::deque<std::size_t> queue{0};
  add(0, Word{});
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (int g : generator_order) {
      std::size_t next = target.act(cur, g);
      if (t.position_of[next] != kUnset) continue;
      add(next, t.representatives[t.position_of[cur]] * Word::generator(g));
      queue.push_back(next);
    }
  }
  if (t.representatives.size() != target.order())
    throw NotGenerating("generator order does not reach every element");
  return t;
}

SchreierSystem::SchreierSystem(const Presentation& source, AbelianTarget target, Transversal transversal,
                               const std::vector<std::pair<std::size_t, int>>& trivial)
    : target_(std::move(target)), transversal_(std::move(transversal)),
      source_count_(source.generator_count()) {
  if (target_.source_generators() != source_count_)
    throw InvalidParameter("SchreierSystem: target images do not match the source generators");
  table_.assign(target_.order() * source_count_, 0);
  std::vector<bool> forced(table_.size(), false);
  for (const auto& [element, g] : trivial) forced.at(element * source_count_ + (g - 1)) = true;

  // numbering follows the transversal order, then source generator order
  for (std::size_t pos = 0; pos < transversal_.representatives.size(); ++pos) {
    const std::size_t element = transversal_.element_of[pos];
    for (int g = 1; g <= static_cast<int>(source_count_); ++g) {
      const std::size_t slot = element * source_count_ + (g - 1);
      if (forced[slot]) continue;
      const std::size_t next = target_.act(element, g);
      Word w = transversal_.representatives[pos] * Word::generator(g) *
               invert(transversal_.representatives[transversal_.position_of[next]]);
      if (w.empty()) continue;
      std::string name = source.name(g);
      for (long c : target_.decode(element)) name += "_" + std::to_string(c);
      names_.push_back(std::move(name));
      origin_.emplace_back(element, g);
      table_[slot] = static_cast<int>(names_.size());
    }
  }
}

Word SchreierSystem::expansion(int subgroup_generator) const {
  const auto& [element, g] = origin_.at(static_cast<std::size_t>(subgroup_generator) - 1);
  const auto& reps = transversal_.representatives;
  return reps[transversal_.position_of[element]] * Word::generator(g) *
         invert(reps[transversal_.position_of[target_.act(element, g)]]);
}

Word SchreierSystem::rewrite(const Word& w, std::size_t start) const {
  std::vector<Letter> out;
  out.reserve(w.size());
  std::size_t coset = start;
  for (Letter x : w) {
    if (x > 0) {
      int s = generator_at(coset, x);
      if (s) out.push_back(s);
      coset = target_.act(coset, x);
    } else {
      coset = target_.act(coset, x);
      int s = generator_at(coset, -x);
      if (s) out.push_back(-s);
    }
  }
  return Word(std::move(out));
}

Word rewrite_word(const Word& w, const SchreierSystem& system) { return system.rewrite(w); }

Presentation subgroup_presentation(const Presentation& p, const AbelianTarget& target,
                                   const std::vector<Word>& extra_kernel_words,
                                   const SubgroupOptions& options) {
  for (const auto& w : extra_kernel_words)
    if (!target.in_kernel(w)) throw NotInKernel("extra kernel word has nonzero image in the target");
  std::vector<int> order = options.generator_order;
  if (order.empty())
    for (int g = 1; g <= static_cast<int>(p.generator_count()); ++g) order.push_back(g);

  SchreierSystem system(p, target, build_transversal(target, order, options.mode), options.trivial);
  std::vector<Word> relators;
  auto emit_all = [&](const Word& r) {
    for (std::size_t element : system.transversal().element_of) {
      Word w = cyclic_reduce(system.rewrite(r, element));
      if (!w.empty()) relators.push_back(std::move(w));
    }
  };
  for (const auto& r : p.relators()) emit_all(r);
  for (const auto& w : extra_kernel_words) emit_all(w);

  Presentation out(system.names(), std::move(relators));
  if (options.simplify_budget) out = simplify(out, options.simplify_budget);
  return out;
}

} // namespace cusp
