#include "posetlab/labelling.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "posetlab/order_ops.hpp"

namespace posetlab {

EdgeLabelling::EdgeLabelling(PosetPtr poset, std::vector<int> labels)
    : poset_(std::move(poset)), labels_(std::move(labels)) {
  if (!poset_) throw PreconditionViolated("labelling needs a poset");
  if (labels_.size() != poset_->edges().size()) {
    throw PreconditionViolated("labelling has " + std::to_string(labels_.size()) +
                               " labels for " + std::to_string(poset_->edges().size()) +
                               " cover edges");
  }
}

EdgeLabelling EdgeLabelling::from_function(PosetPtr poset,
                                           const std::function<int(ElementId, ElementId)>& label) {
  std::vector<int> labels;
  labels.reserve(poset->edges().size());
  for (const auto& [a, b] : poset->edges()) labels.push_back(label(a, b));
  return EdgeLabelling(std::move(poset), std::move(labels));
}

int EdgeLabelling::operator()(ElementId a, ElementId b) const {
  auto e = poset_->edge_index(a, b);
  if (!e) {
    throw PreconditionViolated(poset_->name(a) + " -> " + poset_->name(b) + " is not a cover edge");
  }
  return labels_[*e];
}

std::vector<int> EdgeLabelling::word(const Chain& chain) const {
  std::vector<int> out;
  for (std::size_t i = 1; i < chain.nodes.size(); ++i) {
    out.push_back((*this)(chain.nodes[i - 1], chain.nodes[i]));
  }
  return out;
}

EdgeLabelling EdgeLabelling::shifted(int delta) const {
  std::vector<int> moved = labels_;
  for (int& l : moved) l += delta;
  return EdgeLabelling(poset_, std::move(moved));
}

LabelSet::LabelSet(std::vector<int> values) : values_(std::move(values)) {
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i - 1] >= values_[i]) {
      throw PreconditionViolated("label set must be strictly increasing");
    }
  }
}

LabelSet LabelSet::standard(std::size_t n) { return consecutive(1, n); }

LabelSet LabelSet::consecutive(int first, std::size_t n) {
  std::vector<int> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = first + static_cast<int>(i);
  return LabelSet(std::move(values));
}

bool lexicographically_less(std::span<const int> a, std::span<const int> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

// Dynamic programme over [., z] for a fixed top z: the lexicographically least
// word from each u up to z, and (saturated at 2) the number of weakly increasing
// chains that start with a given edge and end at z.
struct TargetScan {
  ElementId top{};
  std::vector<std::vector<int>> best;
  std::vector<ElementId> best_next;
  std::vector<std::uint8_t> increasing_from_edge;

  TargetScan(const EdgeLabelling& lab, ElementId z) : top(z) {
    const Poset& p = lab.poset();
    const ElementSet& below = p.down_set(z);
    best.assign(p.size(), {});
    best_next.assign(p.size(), z);
    increasing_from_edge.assign(p.edges().size(), 0);
    const auto& order = p.linear_extension();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const ElementId u = *it;
      if (!below.test(u) || u == z) continue;
      bool have = false;
      for (ElementId v : p.upper_covers(u)) {
        if (!below.test(v)) continue;
        const std::size_t e = *p.edge_index(u, v);
        const int label = lab.at(e);

        std::vector<int> candidate;
        candidate.reserve(best[v].size() + 1);
        candidate.push_back(label);
        candidate.insert(candidate.end(), best[v].begin(), best[v].end());
        if (!have || lexicographically_less(candidate, best[u])) {
          best[u] = std::move(candidate);
          best_next[u] = v;
          have = true;
        }

        unsigned count = v == z ? 1u : 0u;
        for (ElementId w : p.upper_covers(v)) {
          if (!below.test(w)) continue;
          const std::size_t f = *p.edge_index(v, w);
          if (lab.at(f) >= label) count += increasing_from_edge[f];
        }
        increasing_from_edge[e] = static_cast<std::uint8_t>(std::min(count, 2u));
      }
    }
  }

  unsigned increasing_count(const EdgeLabelling& lab, ElementId y) const {
    const Poset& p = lab.poset();
    unsigned count = 0;
    for (ElementId v : p.upper_covers(y)) {
      if (!p.leq(v, top)) continue;
      count += increasing_from_edge[*p.edge_index(y, v)];
    }
    return std::min(count, 2u);
  }

  // Only meaningful when increasing_count(y) == 1.
  Chain increasing(const EdgeLabelling& lab, ElementId y) const {
    const Poset& p = lab.poset();
    Chain chain{{y}};
    ElementId u = y;
    int last = 0;
    bool first = true;
    while (u != top) {
      for (ElementId v : p.upper_covers(u)) {
        if (!p.leq(v, top)) continue;
        const std::size_t e = *p.edge_index(u, v);
        if (increasing_from_edge[e] > 0 && (first || lab.at(e) >= last)) {
          last = lab.at(e);
          first = false;
          u = v;
          break;
        }
      }
      chain.nodes.push_back(u);
    }
    return chain;
  }

  Chain lexicographic_least(ElementId y) const {
    Chain chain{{y}};
    for (ElementId u = y; u != top; u = best_next[u]) chain.nodes.push_back(best_next[u]);
    return chain;
  }
};

std::string interval_name(const Poset& p, ElementId y, ElementId z) {
  return "[" + p.name(y) + ", " + p.name(z) + "]";
}

// Unique increasing chain per interval; with `lexicographic` also that its word is
// the lexicographic minimum.
CheckReport check_increasing_chains(const EdgeLabelling& lab, bool lexicographic) {
  const Poset& p = lab.poset();
  for (ElementId z = 0; z < p.size(); ++z) {
    const TargetScan scan(lab, z);
    const ElementSet& below = p.down_set(z);
    for (auto yi = below.find_first(); yi != ElementSet::npos; yi = below.find_next(yi)) {
      const auto y = static_cast<ElementId>(yi);
      if (y == z) continue;
      const unsigned count = scan.increasing_count(lab, y);
      if (count != 1) {
        IncreasingSearch search = find_increasing_chains(lab, y, z);
        Witness w{{y, z}, std::move(search.chains)};
        if (count == 0) w.chains.push_back(scan.lexicographic_least(y));
        return CheckReport::fail(
            std::move(w), (count == 0 ? "no increasing chain in " : "several increasing chains in ") +
                              interval_name(p, y, z));
      }
      if (!lexicographic) continue;
      Chain inc = scan.increasing(lab, y);
      if (lab.word(inc) != scan.best[y]) {
        return CheckReport::fail(Witness{{y, z}, {inc, scan.lexicographic_least(y)}},
                                 "increasing chain of " + interval_name(p, y, z) +
                                     " is not lexicographically least");
      }
    }
  }
  return CheckReport::pass();
}

}  // namespace

IncreasingSearch find_increasing_chains(const EdgeLabelling& lab, ElementId y, ElementId z) {
  const Poset& p = lab.poset();
  if (!p.leq(y, z)) throw NotComparable(p.name(y) + " is not below " + p.name(z));
  const ElementSet& below = p.down_set(z);
  IncreasingSearch result;
  Chain current{{y}};
  std::function<void(ElementId, std::optional<int>)> descend = [&](ElementId u,
                                                                   std::optional<int> last) {
    if (result.chains.size() >= 2) return;
    if (u == z) {
      result.chains.push_back(current);
      return;
    }
    for (ElementId v : p.upper_covers(u)) {
      if (!below.test(v)) continue;
      const int label = lab(u, v);
      if (last && label < *last) continue;
      current.nodes.push_back(v);
      descend(v, label);
      current.nodes.pop_back();
    }
  };
  descend(y, std::nullopt);
  result.count = result.chains.empty()       ? IncreasingCount::None
                 : result.chains.size() == 1 ? IncreasingCount::Unique
                                             : IncreasingCount::Many;
  return result;
}

std::optional<Chain> increasing_chain(const EdgeLabelling& lab, ElementId y, ElementId z) {
  IncreasingSearch search = find_increasing_chains(lab, y, z);
  if (search.count != IncreasingCount::Unique) return std::nullopt;
  return std::move(search.chains.front());
}

CheckReport is_el_labelling(const EdgeLabelling& lab) {
  return check_increasing_chains(lab, true);
}

CheckReport is_sn_el_labelling(const EdgeLabelling& lab) {
  const Poset& p = lab.poset();
  const auto rank = graded_rank(p);
  if (!rank) throw NotGraded("S_n EL-labellings need a graded poset");
  const int n = static_cast<int>(*rank);

  std::optional<CheckReport> bad;
  for_each_maximal_chain(p, p.require_bottom(), p.require_top(), [&](const Chain& c) {
    std::vector<int> word = lab.word(c);
    std::sort(word.begin(), word.end());
    for (int i = 0; i < n; ++i) {
      if (word[static_cast<std::size_t>(i)] != i + 1) {
        bad = CheckReport::fail(Witness{{}, {c}},
                                "maximal chain " + to_string(p, c) +
                                    " is not labelled by a permutation of [" + std::to_string(n) +
                                    "]");
        return false;
      }
    }
    return true;
  });
  if (bad) return *bad;
  return check_increasing_chains(lab, false);
}

CheckReport is_interpolating(const EdgeLabelling& lab) {
  CheckReport el = is_el_labelling(lab);
  if (!el) {
    el.note = "not an EL-labelling: " + el.note;
    return el;
  }
  const Poset& p = lab.poset();
  for (const auto& [y, u] : p.edges()) {
    const int lower = lab(y, u);
    for (ElementId z : p.upper_covers(u)) {
      const int upper = lab(u, z);
      if (lower < upper) continue;
      const Chain inc = *increasing_chain(lab, y, z);
      const std::vector<int> word = lab.word(inc);
      const bool strictly =
          std::adjacent_find(word.begin(), word.end(), std::greater_equal<>()) == word.end();
      if (strictly && word.front() == upper && word.back() == lower) continue;
      return CheckReport::fail(Witness{{y, u, z}, {Chain{{y, u, z}}, inc}},
                               "descent " + p.name(y) + " < " + p.name(u) + " < " + p.name(z) +
                                   " is not interpolated by the increasing chain");
    }
  }
  return CheckReport::pass();
}

ReplacementResult basic_replacement_reduce(const EdgeLabelling& lab, const Chain& chain) {
  const Poset& p = lab.poset();
  if (chain.empty() || !is_unrefinable(p, chain)) {
    throw PreconditionViolated("basic replacements need an unrefinable chain");
  }
  ReplacementResult result{chain, 0};
  std::vector<int> word = lab.word(result.chain);
  for (;;) {
    auto descent = std::adjacent_find(word.begin(), word.end(), std::greater<>());
    if (descent == word.end()) return result;
    const auto i = static_cast<std::size_t>(descent - word.begin());
    const ElementId low = result.chain.nodes[i];
    const ElementId high = result.chain.nodes[i + 2];
    auto replacement = increasing_chain(lab, low, high);
    if (!replacement) {
      throw NotELLabelled("no unique increasing chain in " + interval_name(p, low, high));
    }
    Chain next;
    next.nodes.assign(result.chain.nodes.begin(),
                      result.chain.nodes.begin() + static_cast<std::ptrdiff_t>(i));
    next.nodes.insert(next.nodes.end(), replacement->nodes.begin(), replacement->nodes.end());
    next.nodes.insert(next.nodes.end(),
                      result.chain.nodes.begin() + static_cast<std::ptrdiff_t>(i + 3),
                      result.chain.nodes.end());
    std::vector<int> next_word = lab.word(next);
    if (!lexicographically_less(next_word, word)) {
      throw NotELLabelled("basic replacement in " + interval_name(p, low, high) +
                          " did not decrease the label word");
    }
    result.chain = std::move(next);
    word = std::move(next_word);
    ++result.steps;
  }
}

CoverIndex cover_label_index(const Poset& p, const Chain& chain, ElementId y, ElementId z) {
  CoverIndex index;
  const std::size_t n = chain.length();
  std::vector<std::optional<ElementId>> joins(n + 1);
  std::vector<std::optional<ElementId>> meets(n + 1);
  std::vector<std::optional<ElementId>> projected(n + 1);
  bool all_joins = true;
  bool all_meets = true;
  for (std::size_t j = 0; j <= n; ++j) {
    joins[j] = join(p, chain.nodes[j], y);
    meets[j] = meet(p, chain.nodes[j], z);
    all_joins = all_joins && joins[j].has_value();
    all_meets = all_meets && meets[j].has_value();
    if (joins[j]) projected[j] = rel_meet(p, y, *joins[j], z);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (projected[i - 1] == y && projected[i] == z) {
      index.by_definition = i;
      break;
    }
  }
  if (all_joins) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (p.leq(z, *joins[j])) {
        index.by_join = j;
        break;
      }
    }
  }
  if (all_meets) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (p.leq(*meets[j], y)) index.by_meet = j + 1;
    }
  }
  return index;
}

EdgeLabelling induce_labelling(PosetPtr poset, const Chain& chain, const LabelSet& labels) {
  const Poset& p = *poset;
  if (!is_maximal_chain(p, chain)) {
    throw PreconditionViolated("induce_labelling needs a maximal chain");
  }
  if (labels.size() != chain.length()) {
    throw PreconditionViolated("label set size " + std::to_string(labels.size()) +
                               " differs from chain length " + std::to_string(chain.length()));
  }
  std::vector<int> values;
  values.reserve(p.edges().size());
  for (const auto& [y, z] : p.edges()) {
    const CoverIndex index = cover_label_index(p, chain, y, z);
    if (!index.consistent()) {
      auto show = [](const std::optional<std::size_t>& i) {
        return i ? std::to_string(*i) : std::string("undefined");
      };
      throw NotLeftModular("cover " + p.name(y) + " -> " + p.name(z) +
                           ": definition=" + show(index.by_definition) +
                           " min-join=" + show(index.by_join) + " max-meet=" + show(index.by_meet));
    }
    values.push_back(labels.label(*index.by_definition));
  }
  return EdgeLabelling(std::move(poset), std::move(values));
}

InducedChain induced_interval_chain(const Poset& p, const Chain& chain, ElementId y, ElementId z) {
  if (!p.leq(y, z)) throw NotComparable(p.name(y) + " is not below " + p.name(z));
  InducedChain result;
  for (std::size_t j = 0; j < chain.nodes.size(); ++j) {
    auto joined = join(p, chain.nodes[j], y);
    std::optional<ElementId> value;
    if (joined) value = rel_meet(p, y, *joined, z);
    if (!value) {
      throw NotLeftModular("(x_" + std::to_string(j) + " ∨ y) ∧_y z is undefined for " +
                           interval_name(p, y, z));
    }
    if (result.chain.nodes.empty()) {
      result.chain.nodes.push_back(*value);
    } else if (*value != result.chain.nodes.back()) {
      result.chain.nodes.push_back(*value);
      result.jumps.push_back(j);
    }
  }
  return result;
}

}  // namespace posetlab
