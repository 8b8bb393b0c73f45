#pragma once

// Edge labellings of Hasse diagrams: EL, S_n EL and interpolating checks, basic
// replacements, and the labelling induced by a left modular maximal chain.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "posetlab/poset.hpp"

namespace posetlab {

using PosetPtr = std::shared_ptr<const Poset>;

/// One integer label per cover edge, indexed like Poset::edges().
class EdgeLabelling {
 public:
  EdgeLabelling(PosetPtr poset, std::vector<int> labels);
  static EdgeLabelling from_function(PosetPtr poset,
                                     const std::function<int(ElementId, ElementId)>& label);

  const Poset& poset() const noexcept { return *poset_; }
  const PosetPtr& poset_ptr() const noexcept { return poset_; }

  /// Label of the cover a ⋖ b; throws PreconditionViolated for non-edges.
  int operator()(ElementId a, ElementId b) const;
  int at(std::size_t edge) const { return labels_.at(edge); }
  std::span<const int> labels() const noexcept { return labels_; }

  /// Labels read bottom to top along an unrefinable chain.
  std::vector<int> word(const Chain& chain) const;

  /// Same labelling with every label moved by `delta`.
  EdgeLabelling shifted(int delta) const;

  friend bool operator==(const EdgeLabelling& a, const EdgeLabelling& b) {
    return *a.poset_ == *b.poset_ && a.labels_ == b.labels_;
  }

 private:
  PosetPtr poset_;
  std::vector<int> labels_;
};

/// Strictly increasing label values l_1 < ... < l_n.
class LabelSet {
 public:
  explicit LabelSet(std::vector<int> values);
  /// 1, 2, ..., n
  static LabelSet standard(std::size_t n);
  /// first, first+1, ..., first+n-1
  static LabelSet consecutive(int first, std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  /// l_i for 1 <= i <= size().
  int label(std::size_t i) const { return values_.at(i - 1); }
  std::span<const int> values() const noexcept { return values_; }

 private:
  std::vector<int> values_;
};

/// Standard word order: a proper prefix precedes its extensions.
bool lexicographically_less(std::span<const int> a, std::span<const int> b);

enum class IncreasingCount { None, Unique, Many };

/// Weakly increasing unrefinable chains of [y,z]; at most two are collected.
struct IncreasingSearch {
  IncreasingCount count = IncreasingCount::None;
  std::vector<Chain> chains;
};

IncreasingSearch find_increasing_chains(const EdgeLabelling& lab, ElementId y, ElementId z);

/// The unique weakly increasing chain from y to z; absent when there are none or
/// several. Throws NotComparable.
std::optional<Chain> increasing_chain(const EdgeLabelling& lab, ElementId y, ElementId z);

/// Every interval has a unique weakly increasing chain whose word is the strict
/// lexicographic minimum. Witness: {y, z} plus the offending chains.
CheckReport is_el_labelling(const EdgeLabelling& lab);

/// Graded of rank n, every maximal chain labelled by a permutation of [n], unique
/// increasing chain in every interval. Throws NotGraded.
CheckReport is_sn_el_labelling(const EdgeLabelling& lab);

/// EL, and every y ⋖ u ⋖ z has γ(y,u) < γ(u,z) or a strictly increasing chain in
/// [y,z] starting with γ(u,z) and ending with γ(y,u).
CheckReport is_interpolating(const EdgeLabelling& lab);

struct ReplacementResult {
  Chain chain;
  std::size_t steps = 0;
};

/// Repeated basic replacements (leftmost descent first) down to the increasing
/// chain. Each step must strictly decrease the label word; NotELLabelled otherwise.
ReplacementResult basic_replacement_reduce(const EdgeLabelling& lab, const Chain& chain);

/// The three ways of reading off the induced label index of a cover y ⋖ z.
struct CoverIndex {
  /// i with (x_{i-1} ∨ y) ∧_y z = y and (x_i ∨ y) ∧_y z = z
  std::optional<std::size_t> by_definition;
  /// min{ j : x_j ∨ y >= z }
  std::optional<std::size_t> by_join;
  /// max{ j+1 : x_j ∧ z <= y }
  std::optional<std::size_t> by_meet;

  bool consistent() const noexcept {
    return by_definition && by_join && by_meet && *by_definition == *by_join &&
           *by_join == *by_meet;
  }
};

CoverIndex cover_label_index(const Poset& p, const Chain& chain, ElementId y, ElementId z);

/// Labelling induced by a left modular maximal chain x_0 ⋖ ... ⋖ x_n and labels
/// l_1 < ... < l_n. Throws NotLeftModular when any cover's indices are undefined
/// or disagree.
EdgeLabelling induce_labelling(PosetPtr poset, const Chain& chain, const LabelSet& labels);

struct InducedChain {
  Chain chain;                     ///< y = (x_0 ∨ y) ∧_y z ≤ ... ≤ (x_n ∨ y) ∧_y z = z, deduplicated
  std::vector<std::size_t> jumps;  ///< c_1 < ... < c_r: indices where the value changes
};

InducedChain induced_interval_chain(const Poset& p, const Chain& chain, ElementId y, ElementId z);

}  // namespace posetlab
