#include "cuspgroup/homcount.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "cuspgroup/errors.hpp"

namespace cusp {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int s : images_) {
    if (s < 0 || s >= degree() || seen[static_cast<std::size_t>(s)])
      throw InvalidParameter("Permutation: images are not a bijection");
    seen[static_cast<std::size_t>(s)] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(int k, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(k), false);
  for (const auto& c : cycles)
    for (int s : c) {
      if (s < 1 || s > k || used[static_cast<std::size_t>(s - 1)])
        throw InvalidParameter("bad cycle entry " + std::to_string(s));
      used[static_cast<std::size_t>(s - 1)] = true;
    }
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i)
      v[static_cast<std::size_t>(c[i] - 1)] = c[(i + 1) % c.size()] - 1;
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (int s = 0; s < degree(); ++s)
    if (images_[static_cast<std::size_t>(s)] != s) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(images_.size());
  for (int s = 0; s < degree(); ++s) v[static_cast<std::size_t>(images_[static_cast<std::size_t>(s)])] = s;
  return Permutation(std::move(v));
}

Permutation Permutation::then(const Permutation& other) const {
  if (other.degree() != degree()) throw InvalidParameter("Permutation: degree mismatch");
  std::vector<int> v(images_.size());
  for (int s = 0; s < degree(); ++s) v[static_cast<std::size_t>(s)] = other(images_[static_cast<std::size_t>(s)]);
  return Permutation(std::move(v));
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (int s = 0; s < degree(); ++s) {
    if (seen[static_cast<std::size_t>(s)] || (*this)(s) == s) continue;
    os << '(';
    for (int x = s; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      if (x != s) os << ' ';
      os << x + 1;
    }
    os << ')';
  }
  std::string out = os.str();
  return out.empty() ? "()" : out;
}

SymmetricGroup::SymmetricGroup(int k) : k_(k) {
  if (k < 1 || k > 7) throw InvalidParameter("SymmetricGroup: degree out of range");
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 0);
  do {
    elements_.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  const std::size_t n = elements_.size();
  table_.resize(n * n);
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      table_[a * n + b] = static_cast<std::uint32_t>(index_of(elements_[a] * elements_[b]));
    inverse_[a] = static_cast<std::uint32_t>(index_of(elements_[a].inverse()));
  }
}

std::size_t SymmetricGroup::index_of(const Permutation& p) const {
  // lexicographic rank of the image sequence (Lehmer code)
  const auto& im = p.images();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < im.size(); ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < im.size(); ++j)
      if (im[j] < im[i]) ++smaller;
    rank = rank * (im.size() - i) + smaller;
  }
  return rank;
}

std::size_t SymmetricGroup::evaluate(const Word& w, const std::vector<std::size_t>& assignment) const {
  std::size_t acc = 0;
  for (Letter x : w) {
    std::size_t e = assignment[static_cast<std::size_t>(std::abs(x)) - 1];
    acc = product(acc, x > 0 ? e : inverse(e));
  }
  return acc;
}

Permutation word_image(const Word& w, const std::vector<Permutation>& assignment) {
  if (assignment.empty()) {
    if (!w.empty()) throw InvalidParameter("word_image: no generator images");
    return {};
  }
  Permutation acc = Permutation::identity(assignment.front().degree());
  for (Letter x : w) {
    const Permutation& p = assignment.at(static_cast<std::size_t>(std::abs(x)) - 1);
    acc = acc * (x > 0 ? p : p.inverse());
  }
  return acc;
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct RelatorInfo {
  std::vector<std::pair<std::size_t, bool>> letters;  // generator (0-based), positive
  std::vector<std::size_t> generators;                // distinct
  std::vector<std::size_t> counts;                    // occurrences per distinct generator
};

class HomSearch {
public:
  HomSearch(const Presentation& p, const SymmetricGroup& group,
            const std::function<bool(const std::vector<std::size_t>&)>& visit, std::uint64_t budget)
      : group_(group), visit_(visit), budget_(budget), gens_(p.generator_count()) {
    by_generator_.resize(gens_);
    for (const auto& w : p.relators()) {
      RelatorInfo info;
      for (Letter x : w) {
        std::size_t g = static_cast<std::size_t>(std::abs(x)) - 1;
        info.letters.emplace_back(g, x > 0);
        auto it = std::find(info.generators.begin(), info.generators.end(), g);
        if (it == info.generators.end()) {
          info.generators.push_back(g);
          info.counts.push_back(1);
        } else {
          ++info.counts[static_cast<std::size_t>(it - info.generators.begin())];
        }
      }
      for (std::size_t g : info.generators) by_generator_[g].push_back(relators_.size());
      relators_.push_back(std::move(info));
    }
    order_ = greedy_order();
    assignment_.assign(gens_, kNone);
    complete_.assign(relators_.size(), false);
  }

  std::uint64_t run() {
    std::vector<std::size_t> trail_gens, trail_rels;
    bool ok = true;
    for (std::size_t r = 0; r < relators_.size() && ok; ++r) ok = examine(r, trail_gens, trail_rels);
    if (ok) search(0);
    return nodes_;
  }

private:
  std::vector<std::size_t> greedy_order() const {
    std::vector<std::size_t> order;
    std::vector<bool> chosen(gens_, false);
    for (std::size_t step = 0; step < gens_; ++step) {
      std::size_t best = kNone;
      long best_closed = -1, best_touch = -1;
      for (std::size_t g = 0; g < gens_; ++g) {
        if (chosen[g]) continue;
        long closed = 0, touch = 0;
        for (std::size_t r : by_generator_[g]) {
          const auto& info = relators_[r];
          std::size_t open = 0;
          for (std::size_t h : info.generators)
            if (h != g && !chosen[h]) ++open;
          if (open == 0) ++closed;
          ++touch;
        }
        if (closed > best_closed || (closed == best_closed && touch > best_touch)) {
          best = g;
          best_closed = closed;
          best_touch = touch;
        }
      }
      chosen[best] = true;
      order.push_back(best);
    }
    return order;
  }

  // Checks or solves relator r under the current assignment. Newly assigned
  // generators and completed relators go on the trails.
  bool examine(std::size_t r, std::vector<std::size_t>& trail_gens, std::vector<std::size_t>& trail_rels) {
    if (complete_[r]) return true;
    const auto& info = relators_[r];
    std::size_t open = kNone, open_count = 0;
    for (std::size_t i = 0; i < info.generators.size(); ++i) {
      if (assignment_[info.generators[i]] != kNone) continue;
      if (open != kNone) return true;  // two or more unknowns
      open = info.generators[i];
      open_count = info.counts[i];
    }
    if (open == kNone) {
      std::size_t acc = 0;
      for (const auto& [g, pos] : info.letters) {
        std::size_t e = assignment_[g];
        acc = group_.product(acc, pos ? e : group_.inverse(e));
      }
      if (acc != 0) return false;
      complete_[r] = true;
      trail_rels.push_back(r);
      return true;
    }
    if (open_count != 1) return true;
    // x^s * rest = 1 after rotating the single occurrence to the front
    std::size_t p = 0;
    while (info.letters[p].first != open) ++p;
    const bool positive = info.letters[p].second;
    std::size_t rest = 0;
    const std::size_t len = info.letters.size();
    for (std::size_t i = 1; i < len; ++i) {
      const auto& [g, pos] = info.letters[(p + i) % len];
      std::size_t e = assignment_[g];
      rest = group_.product(rest, pos ? e : group_.inverse(e));
    }
    std::size_t value = positive ? group_.inverse(rest) : rest;
    complete_[r] = true;
    trail_rels.push_back(r);
    return assign(open, value, trail_gens, trail_rels);
  }

  bool assign(std::size_t g, std::size_t value, std::vector<std::size_t>& trail_gens,
              std::vector<std::size_t>& trail_rels) {
    assignment_[g] = value;
    trail_gens.push_back(g);
    for (std::size_t r : by_generator_[g])
      if (!examine(r, trail_gens, trail_rels)) return false;
    return true;
  }

  void undo(std::vector<std::size_t>& trail_gens, std::vector<std::size_t>& trail_rels) {
    for (std::size_t g : trail_gens) assignment_[g] = kNone;
    for (std::size_t r : trail_rels) complete_[r] = false;
    trail_gens.clear();
    trail_rels.clear();
  }

  void search(std::size_t depth) {
    while (depth < order_.size() && assignment_[order_[depth]] != kNone) ++depth;
    if (depth == order_.size()) {
      if (!visit_(assignment_)) stopped_ = true;
      return;
    }
    const std::size_t g = order_[depth];
    std::vector<std::size_t> trail_gens, trail_rels;
    for (std::size_t value = 0; value < group_.order() && !stopped_; ++value) {
      if (++nodes_ > budget_) throw BudgetExceeded("homomorphism search exceeded its node budget");
      if (assign(g, value, trail_gens, trail_rels)) search(depth + 1);
      undo(trail_gens, trail_rels);
    }
  }

  const SymmetricGroup& group_;
  const std::function<bool(const std::vector<std::size_t>&)>& visit_;
  std::uint64_t budget_;
  std::size_t gens_;
  std::vector<RelatorInfo> relators_;
  std::vector<std::vector<std::size_t>> by_generator_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> assignment_;
  std::vector<bool> complete_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

bool generates_group(const SymmetricGroup& group, const std::vector<std::size_t>& gens) {
  std::vector<bool> seen(group.order(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t g : gens) {
      std::size_t b = group.product(a, g);
      if (!seen[b]) {
        seen[b] = true;
        ++count;
        stack.push_back(b);
      }
    }
  }
  return count == group.order();
}

} // namespace

std::uint64_t enumerate_homs(const Presentation& p, const SymmetricGroup& group,
                             const std::function<bool(const std::vector<std::size_t>&)>& visit,
                             std::uint64_t node_budget) {
  HomSearch search(p, group, visit, node_budget);
  return search.run();
}

HomCountReport count_homs(const Presentation& p, int k, std::uint64_t node_budget) {
  if (k < 2 || k > 5) throw InvalidParameter("count_homs: k must lie in 2..5");
  SymmetricGroup group(k);
  HomCountReport report;
  report.k = k;
  report.nodes = enumerate_homs(
      p, group,
      [&](const std::vector<std::size_t>& a) {
        ++report.total;
        if (generates_group(group, a)) ++report.surjective;
        return true;
      },
      node_budget);
  return report;
}

std::uint64_t count_homs_naive(const Presentation& p, int k) {
  SymmetricGroup group(k);
  const std::size_t n = p.generator_count();
  std::vector<std::size_t> a(n, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& r : p.relators())
      if (group.evaluate(r, a) != 0) {
        ok = false;
        break;
      }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n && ++a[i] == group.order()) a[i++] = 0;
    if (i == n) break;
  }
  return count;
}

TrivialityReport relator_triviality_check(const GroupMap& m, int kmax, std::uint64_t node_budget) {
  if (kmax < 2 || kmax > 5) throw InvalidParameter("relator_triviality_check: kmax must lie in 2..5");
  if (m.images.size() != m.source.generator_count())
    throw InvalidParameter("relator_triviality_check: map must give one image per source generator");
  TrivialityReport report;
  report.kmax = kmax;
  for (int k = 2; k <= kmax && report.pass; ++k) {
    SymmetricGroup group(k);
    std::vector<std::size_t> source_assignment(m.source.generator_count());
    enumerate_homs(
        m.target, group,
        [&](const std::vector<std::size_t>& a) {
          ++report.homs_checked;
          for (std::size_t g = 0; g < m.images.size(); ++g) source_assignment[g] = group.evaluate(m.images[g], a);
          for (std::size_t r = 0; r < m.source.relator_count(); ++r) {
            std::size_t img = group.evaluate(m.source.relators()[r], source_assignment);
            if (img == 0) continue;
            TrivialityWitness w;
            w.k = k;
            w.relator = r;
            for (std::size_t x : a) w.assignment.push_back(group.element(x).to_cycle_string());
            w.relator_image = group.element(img).to_cycle_string();
            report.witness = std::move(w);
            report.pass = false;
            return false;
          }
          return true;
        },
        node_budget);
  }
  return report;
}

} // namespace cusp
