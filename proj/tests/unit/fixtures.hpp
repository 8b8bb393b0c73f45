#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "posetlab/labelling.hpp"
#include "posetlab/poset.hpp"

namespace fixtures {

using namespace posetlab;

inline PosetPtr share(Poset p) { return std::make_shared<const Poset>(std::move(p)); }

inline Poset diamond() {
  return build_poset({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

// 0 < a < b < 1 and 0 < c < 1.
inline Poset pentagon() {
  return build_poset({"0", "a", "b", "c", "1"},
                     {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

// a, b below both c and d; no bounds.
inline Poset bowtie() {
  return build_poset({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

// The bowtie with 0̂ and 1̂ added: graded of rank 3, not a lattice.
inline Poset bounded_bowtie() {
  return build_poset({"0", "a", "b", "c", "d", "1"},
                     {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"},
                      {"c", "1"}, {"d", "1"}});
}

inline ElementId id(const Poset& p, const std::string& name) { return p.id(name); }

inline Chain chain_of(const Poset& p, const std::vector<std::string>& names) {
  Chain c;
  for (const auto& n : names) c.nodes.push_back(p.id(n));
  return c;
}

/// Random strict order on n points: i < j kept with probability `density` for i < j,
/// then closed transitively by AutoReduce.
inline Poset random_poset(std::mt19937& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  std::vector<Edge> relation;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) relation.emplace_back(static_cast<ElementId>(i), static_cast<ElementId>(j));
    }
  }
  return Poset(names, relation, Reduction::AutoReduce);
}

}  // namespace fixtures
