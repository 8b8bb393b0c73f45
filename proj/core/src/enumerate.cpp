#include "posetlab/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace posetlab {
namespace {

using Relation = std::vector<std::vector<char>>;  // strict order, relation[i][j] <=> i < j

std::string min_relabelled(const Relation& rel) {
  const std::size_t n = rel.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::string candidate(n * n, '0');
  do {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) candidate[i * n + j] = rel[perm[i]][perm[j]] ? '1' : '0';
    }
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// All strict orders on m points with i < j only when i < j numerically (every
// poset has such a labelling), tested for transitivity.
std::vector<Relation> natural_orders(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) slots.emplace_back(i, j);
  }
  std::vector<Relation> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << slots.size()); ++bits) {
    Relation rel(m, std::vector<char>(m, 0));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (bits >> s & 1u) rel[slots[s].first][slots[s].second] = 1;
    }
    bool transitive = true;
    for (std::size_t i = 0; i < m && transitive; ++i) {
      for (std::size_t j = 0; j < m && transitive; ++j) {
        if (!rel[i][j]) continue;
        for (std::size_t k = 0; k < m; ++k) {
          if (rel[j][k] && !rel[i][k]) {
            transitive = false;
            break;
          }
        }
      }
    }
    if (transitive) out.push_back(std::move(rel));
  }
  return out;
}

}  // namespace

std::string canonical_form(const Poset& p) {
  if (p.size() > kMaxCanonicalElements) {
    throw SizeLimit("canonical forms are capped at " + std::to_string(kMaxCanonicalElements) +
                    " elements");
  }
  Relation rel(p.size(), std::vector<char>(p.size(), 0));
  for (ElementId a = 0; a < p.size(); ++a) {
    for (ElementId b = 0; b < p.size(); ++b) rel[a][b] = p.leq(a, b) ? 1 : 0;
  }
  return min_relabelled(rel);
}

bool are_isomorphic(const Poset& a, const Poset& b) {
  return a.size() == b.size() && a.edges().size() == b.edges().size() &&
         canonical_form(a) == canonical_form(b);
}

namespace {

std::vector<std::pair<std::string, Relation>> isomorphism_classes(std::size_t m) {
  std::set<std::string> seen;
  std::vector<std::pair<std::string, Relation>> classes;
  for (Relation& rel : natural_orders(m)) {
    std::string key = min_relabelled(rel);
    if (seen.insert(key).second) classes.emplace_back(std::move(key), std::move(rel));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return classes;
}

}  // namespace

std::vector<Poset> enumerate_posets(std::size_t elements) {
  if (elements > kMaxEnumeratedElements) {
    throw SizeLimit("poset enumeration is capped at " + std::to_string(kMaxEnumeratedElements) +
                    " elements");
  }
  std::vector<Poset> out;
  for (const auto& [key, rel] : isomorphism_classes(elements)) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < elements; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    std::vector<Edge> relation;
    for (std::size_t i = 0; i < elements; ++i) {
      for (std::size_t j = 0; j < elements; ++j) {
        if (rel[i][j]) relation.emplace_back(static_cast<ElementId>(i), static_cast<ElementId>(j));
      }
    }
    out.emplace_back(std::move(names), std::move(relation), Reduction::AutoReduce);
  }
  return out;
}

void for_each_bounded_poset(std::size_t max_elements, bool graded_only,
                            const std::function<void(const Poset&)>& visit) {
  if (max_elements > kMaxEnumeratedElements) {
    throw SizeLimit("bounded poset enumeration is capped at " +
                    std::to_string(kMaxEnumeratedElements) + " elements");
  }
  for (std::size_t size = 2; size <= max_elements; ++size) {
    const std::size_t m = size - 2;
    // A bounded poset is determined up to isomorphism by the poset strictly
    // between 0̂ and 1̂.
    for (const auto& [key, rel] : isomorphism_classes(m)) {
      std::vector<std::string> names{"0"};
      for (std::size_t i = 0; i < m; ++i) names.emplace_back(1, static_cast<char>('a' + i));
      names.emplace_back("1");
      const auto top = static_cast<ElementId>(m + 1);
      std::vector<Edge> relation{{0, top}};
      for (std::size_t i = 0; i < m; ++i) {
        relation.emplace_back(0, static_cast<ElementId>(i + 1));
        relation.emplace_back(static_cast<ElementId>(i + 1), top);
        for (std::size_t j = 0; j < m; ++j) {
          if (rel[i][j]) relation.emplace_back(static_cast<ElementId>(i + 1), static_cast<ElementId>(j + 1));
        }
      }
      Poset p(std::move(names), std::move(relation), Reduction::AutoReduce);
      if (graded_only && !graded_rank(p)) continue;
      visit(p);
    }
  }
}

std::vector<Poset> enumerate_bounded_posets(std::size_t max_elements, bool graded_only) {
  std::vector<Poset> out;
  for_each_bounded_poset(max_elements, graded_only, [&](const Poset& p) { out.push_back(p); });
  return out;
}

}  // namespace posetlab
