#pragma once

#include <cstddef>
#include <vector>

#include "posetlab/labelling.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

struct ClosureResult {
  std::vector<ElementId> elements;  ///< sorted ids of the closed set
  Poset subposet;                   ///< induced on `elements`, same id order
  std::vector<Chain> generators;
  std::size_t steps = 0;  ///< number of passes until nothing new was added
};

/// Smallest set containing `m_chain` and `c` that is closed under adding
/// (x ∨ y) ∧_y z and (x ∧ z) ∨^z y for x in the chain and y <= z in the set.
/// Throws NotViable when one of those expressions is undefined.
ClosureResult r_closure(const Poset& p, const Chain& m_chain, const Chain& c);

/// Smallest set containing `m_chain` and `m` that contains the increasing chain
/// between any two comparable members. Throws NotELLabelled.
ClosureResult q_closure(const EdgeLabelling& lab, const Chain& m_chain, const Chain& m);

/// The maximal chain through `c` that is increasing between consecutive members
/// of c ∪ {0̂, 1̂}. Throws NotELLabelled.
Chain increasing_extension(const EdgeLabelling& lab, const Chain& c);

/// All meets and joins exist and x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z).
CheckReport is_distributive_lattice(const Poset& p);

/// Searches for a viable maximal chain M with r_closure(M, c) distributive for every
/// maximal chain c. On success the witness holds M. Throws SizeLimit when the poset
/// has more than `chain_cap` maximal chains.
CheckReport is_supersolvable(const Poset& p, std::size_t chain_cap = 50000);

}  // namespace posetlab
