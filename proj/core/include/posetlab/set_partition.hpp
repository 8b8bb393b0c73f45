#pragma once

// Set partitions of [n] = {1, ..., n} and the crossing / straddling combinatorics.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posetlab/error.hpp"

namespace posetlab {

using Block = std::vector<int>;

/// Canonical form: each block sorted ascending, blocks sorted by minimum. Equality
/// is structural.
class SetPartition {
 public:
  SetPartition() = default;
  /// Validates that the blocks are nonempty, disjoint and cover [n].
  SetPartition(int n, std::vector<Block> blocks);

  static SetPartition singletons(int n);
  static SetPartition single_block(int n);
  /// The partition whose only non-singleton block is [k].
  static SetPartition initial_block(int n, int k);
  /// Parses `1,4/2,5/3,6`; braces around blocks are accepted and ignored.
  static SetPartition parse(std::string_view text);

  int size() const noexcept { return n_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  /// Index of the block containing element e (1-based element).
  std::size_t block_of(int e) const;
  /// Minima of all blocks, ascending.
  std::vector<int> block_minima() const;

  /// Every block of *this lies inside a block of other.
  bool refines(const SetPartition& other) const;

  /// Merges the blocks with the given block indices into one.
  SetPartition merge_blocks(std::span<const std::size_t> indices) const;
  /// Merges the blocks whose minima are listed.
  SetPartition merge_minima(std::span<const int> minima) const;

  std::string to_string() const;

  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;
  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  int n_ = 0;
  std::vector<Block> blocks_;
};

/// Join and meet in the full partition lattice.
SetPartition pi_join(const SetPartition& a, const SetPartition& b);
SetPartition pi_meet(const SetPartition& a, const SetPartition& b);

/// All partitions of [n] (restricted growth order).
std::vector<SetPartition> all_set_partitions(int n);

/// a < b < c < d with a, c in one block and b, d in another.
bool is_crossing(const SetPartition& x);

struct Straddle {
  std::size_t outer;  ///< block containing a and d
  std::size_t inner;  ///< block containing b and c
  int a, b, c, d;
};

/// First straddle a < b < c < d (a, d in one block, b, c in another) in
/// lexicographic order of (outer, inner) block indices.
std::optional<Straddle> find_straddle(const SetPartition& x);
bool is_straddling(const SetPartition& x);

/// Merges straddling block pairs until none remain: the least non-straddling
/// partition above x.
SetPartition straddle_closure(const SetPartition& x);

/// Join in the lattice of non-straddling partitions. Throws NotNonStraddling.
SetPartition ns_join_closure(const SetPartition& y, const SetPartition& z);

/// y ∨ (B_{l_0} ∪ ... ∪ B_{l_r}): least non-straddling partition above y with the
/// blocks of y whose minima are listed all in one block.
SetPartition ns_merge(const SetPartition& y, std::span<const int> minima);

/// Blocks of y that are not blocks of z (the blocks merged on the way to z).
std::vector<Block> merged_blocks(const SetPartition& y, const SetPartition& z);

/// max{min B, min B'} when z merges exactly two blocks B, B' of y.
int delta_label(const SetPartition& y, const SetPartition& z);

/// Second smallest minimum among the blocks of y merged in z.
int gamma_second_smallest(const SetPartition& y, const SetPartition& z);
/// Smallest block minimum of y that is not a block minimum of z.
int gamma_lost_minimum(const SetPartition& y, const SetPartition& z);
/// Smallest delta label on the edges of the interval [y, z] of the full partition
/// lattice.
int gamma_interval_minimum(const SetPartition& y, const SetPartition& z);

}  // namespace posetlab
