#pragma once

// Exhaustive verification of the structural claims about left modular chains,
// induced labellings, closures and the lattice families, over small instances.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "posetlab/document.hpp"
#include "posetlab/families.hpp"
#include "posetlab/labelling.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

struct ClaimResult {
  std::string claim;
  std::string subject;
  bool passed = true;
  std::size_t checks = 0;
  std::string detail;
  std::optional<PosetDocument> counterexample;
};

struct VerificationReport {
  std::vector<ClaimResult> results;  ///< sorted by (subject, claim)

  bool passed() const;
  std::size_t failures() const;
  /// {"passed": bool, "claims": [{"claim", "subject", "passed", "checks", "detail",
  /// "counterexample"?}, ...]}
  std::string to_json() const;
};

struct VerifyScope {
  int partition_max = 4;
  int noncrossing_max = 4;
  int ns_min = 3;
  int ns_max = 5;
  std::vector<int> tamari{3, 4};
  std::size_t ideal_ground_max = 4;
  std::size_t graded_universe_max = 6;

  /// "ns", "ns-slow", "partitions", "tamari", "ideals", "graded", "families", "all".
  /// Throws std::invalid_argument for anything else.
  static VerifyScope preset(const std::string& name);
  static std::vector<std::string> preset_names();
};

VerificationReport verify_theorems(const VerifyScope& scope);

/// A lattice with a labelling and a chain the labelling should make increasing.
struct Subject {
  std::string name;
  LabelledFamily family;
};

/// Family subjects with their own labellings.
Subject partition_subject(int n);
Subject noncrossing_subject(int n);
Subject nonstraddling_subject(int n);
Subject ideal_subject(const Poset& q, const std::string& name);
/// T_n labelled by the chain induced from its first left modular chain.
Subject tamari_subject(int n);

// Individual claims. Each records how many instances were checked and the first
// counterexample found.
ClaimResult claim_el(const Subject& s);
ClaimResult claim_interpolating(const Subject& s);
ClaimResult claim_increasing_chain(const Subject& s);
ClaimResult claim_increasing_chain_left_modular(const Subject& s);
/// Every left modular chain induces an interpolating labelling with that chain
/// increasing.
ClaimResult claim_induced_labellings(const Subject& s);
/// Re-inducing from the increasing chain with its own labels reproduces the labelling.
ClaimResult claim_labelling_uniqueness(const Subject& s);
ClaimResult claim_cover_index_agreement(const Subject& s);
ClaimResult claim_chain_labels(const Subject& s);
ClaimResult claim_below_chain_labels(const Subject& s);
ClaimResult claim_meet_chain(const Subject& s);
ClaimResult claim_induced_interval_chain(const Subject& s);
ClaimResult claim_interval_restriction(const Subject& s);
ClaimResult claim_cover_steps(const Subject& s);
ClaimResult claim_modular_inequality(const Subject& s);
ClaimResult claim_basic_replacement(const Subject& s);
ClaimResult claim_sn_el(const Subject& s);
ClaimResult claim_closure_identity(const Subject& s);
ClaimResult claim_q_closure_data(const Subject& s);
/// Supersolvable exactly when graded (for lattices with a left modular chain).
ClaimResult claim_supersolvable(const Subject& s);

ClaimResult claim_gamma_definitions(const PartitionFamily& f, const std::string& name);
ClaimResult claim_two_block_delta(const PartitionFamily& f, const std::string& name);
ClaimResult claim_first_label(const PartitionFamily& f, const std::string& name);
ClaimResult claim_ns_meets(const PartitionFamily& f, const std::string& name);
ClaimResult claim_ns_joins(const PartitionFamily& f, const std::string& name);
ClaimResult claim_forced_merging(const PartitionFamily& f, const std::string& name);

/// Exhaustive search for an S_n EL-labelling (labels from [rank] on every edge).
std::optional<EdgeLabelling> search_sn_el_labelling(const PosetPtr& poset);

struct GradedVerdicts {
  bool sn_el = false;
  bool sn_el_by_search = false;
  bool left_modular = false;
  bool supersolvable = false;
};
/// For a finite graded lattice-poset: has an S_n EL-labelling (induced route,
/// then search), has a left modular maximal chain, is supersolvable.
GradedVerdicts graded_verdicts(const PosetPtr& poset);
/// The three verdicts agree on every graded bounded poset up to `max_elements`.
ClaimResult claim_graded_equivalence(std::size_t max_elements);

}  // namespace posetlab
