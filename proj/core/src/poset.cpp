#include "posetlab/poset.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace posetlab {

Poset::Poset(std::vector<std::string> names, std::vector<Edge> relation, Reduction mode)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(names_[i], static_cast<ElementId>(i)).second) {
      throw ValidationError("duplicate element '" + names_[i] + "'");
    }
  }
  for (const auto& [a, b] : relation) {
    if (a >= n || b >= n) {
      throw UnknownElement("relation references element index outside 0.." + std::to_string(n));
    }
    if (a == b) {
      throw CycleError("relation contains the loop " + names_[a] + " -> " + names_[a]);
    }
  }
  std::sort(relation.begin(), relation.end());
  relation.erase(std::unique(relation.begin(), relation.end()), relation.end());

  std::vector<std::vector<ElementId>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [a, b] : relation) {
    succ[a].push_back(b);
    ++indegree[b];
  }

  // Kahn's algorithm, smallest available id first so the order is deterministic.
  std::priority_queue<ElementId, std::vector<ElementId>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(static_cast<ElementId>(i));
  }
  topo_.reserve(n);
  while (!ready.empty()) {
    const ElementId a = ready.top();
    ready.pop();
    topo_.push_back(a);
    for (ElementId b : succ[a]) {
      if (--indegree[b] == 0) ready.push(b);
    }
  }
  if (topo_.size() != n) {
    throw CycleError("relation has a directed cycle");
  }

  up_.assign(n, ElementSet(n));
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    ElementSet& row = up_[*it];
    row.set(*it);
    for (ElementId b : succ[*it]) row |= up_[b];
  }
  down_.assign(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b = up_[a].find_first(); b != ElementSet::npos; b = up_[a].find_next(b)) {
      down_[b].set(a);
    }
  }

  auto is_cover = [&](ElementId a, ElementId b) { return (up_[a] & down_[b]).count() == 2; };

  if (mode == Reduction::Strict) {
    for (const auto& [a, b] : relation) {
      if (!is_cover(a, b)) {
        throw NotReducedError("pair " + names_[a] + " -> " + names_[b] +
                              " is implied transitively");
      }
    }
    edges_ = std::move(relation);
  } else {
    for (std::size_t a = 0; a < n; ++a) {
      for (auto b = up_[a].find_first(); b != ElementSet::npos; b = up_[a].find_next(b)) {
        if (b != a && is_cover(static_cast<ElementId>(a), static_cast<ElementId>(b))) {
          edges_.emplace_back(static_cast<ElementId>(a), static_cast<ElementId>(b));
        }
      }
    }
  }

  up_offset_.assign(n + 1, 0);
  down_adj_.assign(n, {});
  up_adj_.reserve(edges_.size());
  for (const auto& [a, b] : edges_) {
    ++up_offset_[a + 1];
    up_adj_.push_back(b);
    down_adj_[b].push_back(a);
  }
  for (std::size_t i = 0; i < n; ++i) up_offset_[i + 1] += up_offset_[i];

  std::vector<ElementId> minimal;
  std::vector<ElementId> maximal;
  for (std::size_t i = 0; i < n; ++i) {
    if (down_adj_[i].empty()) minimal.push_back(static_cast<ElementId>(i));
    if (up_offset_[i + 1] == up_offset_[i]) maximal.push_back(static_cast<ElementId>(i));
  }
  if (minimal.size() == 1) bottom_ = minimal.front();
  if (maximal.size() == 1) top_ = maximal.front();
}

void Poset::check_id(ElementId a) const {
  if (a >= names_.size()) {
    throw UnknownElement("element index " + std::to_string(a) + " out of range");
  }
}

const std::string& Poset::name(ElementId a) const {
  check_id(a);
  return names_[a];
}

ElementId Poset::id(std::string_view name) const {
  if (auto found = find(name)) return *found;
  throw UnknownElement("unknown element '" + std::string(name) + "'");
}

std::optional<ElementId> Poset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Poset::leq(ElementId a, ElementId b) const {
  check_id(a);
  check_id(b);
  return up_[a].test(b);
}

std::span<const ElementId> Poset::upper_covers(ElementId a) const {
  check_id(a);
  return {up_adj_.data() + up_offset_[a], up_offset_[a + 1] - up_offset_[a]};
}

std::span<const ElementId> Poset::lower_covers(ElementId a) const {
  check_id(a);
  return down_adj_[a];
}

std::optional<std::size_t> Poset::edge_index(ElementId a, ElementId b) const {
  check_id(a);
  check_id(b);
  auto first = up_adj_.begin() + static_cast<std::ptrdiff_t>(up_offset_[a]);
  auto last = up_adj_.begin() + static_cast<std::ptrdiff_t>(up_offset_[a + 1]);
  auto it = std::lower_bound(first, last, b);
  if (it == last || *it != b) return std::nullopt;
  return static_cast<std::size_t>(it - up_adj_.begin());
}

const ElementSet& Poset::up_set(ElementId a) const {
  check_id(a);
  return up_[a];
}

const ElementSet& Poset::down_set(ElementId a) const {
  check_id(a);
  return down_[a];
}

ElementId Poset::require_bottom() const {
  if (!bottom_) throw NotBounded("poset has no unique minimal element");
  return *bottom_;
}

ElementId Poset::require_top() const {
  if (!top_) throw NotBounded("poset has no unique maximal element");
  return *top_;
}

Poset build_poset(std::vector<std::string> elements,
                  const std::vector<std::pair<std::string, std::string>>& cover_pairs,
                  Reduction mode) {
  std::unordered_map<std::string, ElementId> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    index.emplace(elements[i], static_cast<ElementId>(i));
  }
  std::vector<Edge> relation;
  relation.reserve(cover_pairs.size());
  for (const auto& [a, b] : cover_pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw UnknownElement("unknown element '" + a + "'");
    if (ib == index.end()) throw UnknownElement("unknown element '" + b + "'");
    relation.emplace_back(ia->second, ib->second);
  }
  return Poset(std::move(elements), std::move(relation), mode);
}

bool Chain::contains(ElementId a) const {
  return std::find(nodes.begin(), nodes.end(), a) != nodes.end();
}

bool is_chain(const Poset& p, const Chain& c) {
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    if (c.nodes[i] >= p.size()) return false;
    if (i > 0 && !p.less(c.nodes[i - 1], c.nodes[i])) return false;
  }
  return true;
}

bool is_unrefinable(const Poset& p, const Chain& c) {
  if (!is_chain(p, c)) return false;
  for (std::size_t i = 1; i < c.nodes.size(); ++i) {
    if (!p.covers(c.nodes[i - 1], c.nodes[i])) return false;
  }
  return true;
}

bool is_maximal_chain(const Poset& p, const Chain& c) {
  return p.is_bounded() && !c.empty() && is_unrefinable(p, c) && c.front() == *p.bottom() &&
         c.back() == *p.top();
}

std::string to_string(const Poset& p, const Chain& c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    if (i > 0) out << " < ";
    out << p.name(c.nodes[i]);
  }
  return out.str();
}

Poset induced_subposet(const Poset& p, std::vector<ElementId> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<std::string> names;
  names.reserve(elements.size());
  for (ElementId a : elements) names.push_back(p.name(a));
  std::vector<Edge> relation;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (i != j && p.leq(elements[i], elements[j])) {
        relation.emplace_back(static_cast<ElementId>(i), static_cast<ElementId>(j));
      }
    }
  }
  return Poset(std::move(names), std::move(relation), Reduction::AutoReduce);
}

std::vector<ElementId> interval_elements(const Poset& p, ElementId y, ElementId z) {
  if (!p.leq(y, z)) {
    throw NotComparable(p.name(y) + " is not below " + p.name(z));
  }
  const ElementSet between = p.up_set(y) & p.down_set(z);
  std::vector<ElementId> out;
  out.reserve(between.count());
  for (auto u = between.find_first(); u != ElementSet::npos; u = between.find_next(u)) {
    out.push_back(static_cast<ElementId>(u));
  }
  return out;
}

Poset interval(const Poset& p, ElementId y, ElementId z) {
  return induced_subposet(p, interval_elements(p, y, z));
}

void for_each_maximal_chain(const Poset& p, ElementId y, ElementId z,
                            const std::function<bool(const Chain&)>& visit) {
  if (!p.leq(y, z)) {
    throw NotComparable(p.name(y) + " is not below " + p.name(z));
  }
  const ElementSet& below = p.down_set(z);
  Chain current{{y}};
  bool stopped = false;
  std::function<void(ElementId)> descend = [&](ElementId u) {
    if (u == z) {
      if (!visit(current)) stopped = true;
      return;
    }
    for (ElementId v : p.upper_covers(u)) {
      if (!below.test(v)) continue;
      current.nodes.push_back(v);
      descend(v);
      current.nodes.pop_back();
      if (stopped) return;
    }
  };
  descend(y);
}

std::vector<Chain> maximal_chains(const Poset& p, ElementId y, ElementId z) {
  std::vector<Chain> out;
  for_each_maximal_chain(p, y, z, [&](const Chain& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::vector<Chain> maximal_chains(const Poset& p) {
  return maximal_chains(p, p.require_bottom(), p.require_top());
}

std::optional<std::size_t> graded_rank(const Poset& p) {
  const ElementId bottom = p.require_bottom();
  p.require_top();
  // Every maximal chain has the same length iff every element has a single
  // distance from 0̂ along cover paths.
  std::vector<std::size_t> shortest(p.size(), 0);
  std::vector<std::size_t> longest(p.size(), 0);
  for (ElementId u : p.linear_extension()) {
    if (u == bottom) continue;
    bool first = true;
    for (ElementId v : p.lower_covers(u)) {
      if (first) {
        shortest[u] = shortest[v] + 1;
        longest[u] = longest[v] + 1;
        first = false;
      } else {
        shortest[u] = std::min(shortest[u], shortest[v] + 1);
        longest[u] = std::max(longest[u], longest[v] + 1);
      }
    }
    if (shortest[u] != longest[u]) return std::nullopt;
  }
  return longest[p.require_top()];
}

}  // namespace posetlab
