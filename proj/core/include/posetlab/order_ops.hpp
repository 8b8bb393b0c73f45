#pragma once

// Meets, joins and their relative versions in arbitrary finite posets, plus the
// viability / left-modularity tests built on them.

#include <optional>
#include <string_view>
#include <vector>

#include "posetlab/poset.hpp"

namespace posetlab {

/// Least common upper bound of a and b, if one exists.
std::optional<ElementId> join(const Poset& p, ElementId a, ElementId b);
/// Greatest common lower bound of a and b, if one exists.
std::optional<ElementId> meet(const Poset& p, ElementId a, ElementId b);

/// w ∧_y z: greatest u with y <= u, u <= w and u <= z. Requires y <= w and y <= z
/// (PreconditionViolated otherwise).
std::optional<ElementId> rel_meet(const Poset& p, ElementId y, ElementId w, ElementId z);
/// w ∨^z y: least u with w <= u, y <= u and u <= z. Requires w <= z and y <= z.
std::optional<ElementId> rel_join(const Poset& p, ElementId z, ElementId w, ElementId y);

enum class LMFailure {
  JoinUndefined,     ///< x ∨ y does not exist
  MeetUndefined,     ///< x ∧ z does not exist
  RelMeetUndefined,  ///< (x ∨ y) ∧_y z does not exist
  RelJoinUndefined,  ///< (x ∧ z) ∨^z y does not exist
  NotEqual,          ///< both sides exist and differ
};

std::string_view to_string(LMFailure kind);

/// The pair y <= z at which x fails, with whatever sides could be evaluated.
struct LMWitness {
  ElementId x{};
  ElementId y{};
  ElementId z{};
  std::optional<ElementId> lhs;  ///< (x ∨ y) ∧_y z
  std::optional<ElementId> rhs;  ///< (x ∧ z) ∨^z y
  LMFailure kind = LMFailure::NotEqual;

  friend bool operator==(const LMWitness&, const LMWitness&) = default;
};

struct ElementCheck {
  CheckReport report;
  std::optional<LMWitness> failure;

  explicit operator bool() const noexcept { return report.verdict; }
};

/// Both relative expressions are defined for every y <= z.
ElementCheck is_viable_element(const Poset& p, ElementId x);

/// Viable and (x ∨ y) ∧_y z = (x ∧ z) ∨^z y for every y <= z. Scans pairs with y
/// ascending, then z ascending, and reports the first failure.
ElementCheck is_left_modular_element(const Poset& p, ElementId x);

/// Every element of the chain is left modular.
CheckReport is_left_modular_chain(const Poset& p, const Chain& chain);

/// All maximal chains made of left modular elements, in lexicographic id order.
std::vector<Chain> find_left_modular_chains(const Poset& p);

}  // namespace posetlab
