#pragma once

// Generators for the lattice families: order ideals J(Q), partitions Π_n,
// non-crossing NC_n, non-straddling NS_n, and the Tamari lattices T_n.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posetlab/labelling.hpp"
#include "posetlab/poset.hpp"
#include "posetlab/set_partition.hpp"

namespace posetlab {

inline constexpr int kMaxPartitionSize = 7;
inline constexpr int kMaxTamariSize = 7;
inline constexpr std::size_t kMaxIdealGround = 16;

/// Bijective registry between domain objects and element ids.
template <class T>
class Registry {
 public:
  Registry() = default;
  explicit Registry(std::vector<T> objects) : objects_(std::move(objects)) {
    for (std::size_t i = 0; i < objects_.size(); ++i) {
      index_.emplace(objects_[i], static_cast<ElementId>(i));
    }
  }

  const T& operator[](ElementId id) const { return objects_.at(id); }
  ElementId id_of(const T& object) const {
    auto it = index_.find(object);
    if (it == index_.end()) throw UnknownElement("object is not an element of this family");
    return it->second;
  }
  bool contains(const T& object) const { return index_.count(object) > 0; }
  std::size_t size() const noexcept { return objects_.size(); }
  const std::vector<T>& objects() const noexcept { return objects_; }

 private:
  std::vector<T> objects_;
  std::map<T, ElementId> index_;
};

/// A generated poset with its family labelling and that labelling's increasing
/// maximal chain.
struct LabelledFamily {
  PosetPtr poset;
  EdgeLabelling labelling;
  Chain increasing;
};

struct PartitionFamily : LabelledFamily {
  Registry<SetPartition> partitions;
};

/// Π_n with δ(y,z) = max{min B, min B'} on the label set {2..n}.
PartitionFamily partition_lattice(int n);
/// Non-crossing partitions with δ restricted.
PartitionFamily noncrossing_lattice(int n);
/// Non-straddling partitions with γ = second smallest merged block minimum.
/// Construction also checks that the two other γ definitions agree on every edge.
PartitionFamily nonstraddling_lattice(int n);

/// Full binary tree with n internal nodes, stored as its preorder word
/// ('1' internal node, '0' leaf).
class BinaryTree {
 public:
  explicit BinaryTree(std::string preorder);
  static BinaryTree left_comb(int internal_nodes);
  static BinaryTree right_comb(int internal_nodes);
  /// Parses a leaf bracketing such as `(ab)c` or `a(b(cd))`.
  static BinaryTree parse_bracketing(std::string_view text);

  int internal_nodes() const noexcept;
  const std::string& preorder() const noexcept { return word_; }
  /// All trees reached by one right rotation (AB)C -> A(BC).
  std::vector<BinaryTree> right_rotations() const;
  /// Leaves named a, b, c, ... in order; the outermost pair of parentheses is dropped.
  std::string bracketing() const;

  friend auto operator<=>(const BinaryTree&, const BinaryTree&) = default;
  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;

 private:
  std::string word_;
};

struct TamariFamily {
  PosetPtr poset;
  Registry<BinaryTree> trees;
};

/// Rotation order on binary trees with n internal nodes; covers are right rotations.
TamariFamily tamari_lattice(int n);

struct IdealFamily : LabelledFamily {
  std::vector<std::vector<ElementId>> ideals;  ///< by element id, sorted members of Q
};

/// J(Q) ordered by inclusion with edge I ⋖ I ∪ {q} labelled omega[q]. omega must be
/// a linear extension onto [n] (NotLinearExtension otherwise).
IdealFamily ideal_lattice(const Poset& q, std::span<const int> omega);

/// Some linear extension of q onto [n] (its topological order).
std::vector<int> natural_linear_extension(const Poset& q);

/// 0 < 1 < ... < n (n+1 elements, rank n).
Poset chain_poset(std::size_t length);
/// k pairwise incomparable elements.
Poset antichain_poset(std::size_t k);
/// 0̂ below k incomparable atoms below 1̂.
Poset bounded_antichain(std::size_t k);

}  // namespace posetlab
