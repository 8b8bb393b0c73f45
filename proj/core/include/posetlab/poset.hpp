#pragma once

// Finite posets stored as a cover graph plus a dense cached order relation.
//
// Element ids are dense indices 0..size()-1 into an interned name table. Algorithms
// never look at names; families keep their own registry from domain objects to ids.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "posetlab/error.hpp"

namespace posetlab {

using ElementId = std::uint32_t;
using Edge = std::pair<ElementId, ElementId>;
using ElementSet = boost::dynamic_bitset<>;

/// How the constructor treats a relation that is not already a cover relation.
enum class Reduction {
  Strict,      ///< reject pairs implied transitively (NotReducedError)
  AutoReduce,  ///< accept any acyclic relation and keep its transitive reduction
};

class Poset {
 public:
  /// Builds a poset from element names and a relation on their indices. Throws
  /// CycleError, NotReducedError (Strict only), UnknownElement, ValidationError.
  Poset(std::vector<std::string> names, std::vector<Edge> relation,
        Reduction mode = Reduction::Strict);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(ElementId a) const;

  ElementId id(std::string_view name) const;
  std::optional<ElementId> find(std::string_view name) const;

  bool leq(ElementId a, ElementId b) const;
  bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  bool comparable(ElementId a, ElementId b) const { return leq(a, b) || leq(b, a); }
  /// True iff b covers a.
  bool covers(ElementId a, ElementId b) const { return edge_index(a, b).has_value(); }

  std::span<const ElementId> upper_covers(ElementId a) const;
  std::span<const ElementId> lower_covers(ElementId a) const;

  /// Cover edges sorted lexicographically; the position is the edge index.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::optional<std::size_t> edge_index(ElementId a, ElementId b) const;

  /// {u : a <= u} and {u : u <= a}.
  const ElementSet& up_set(ElementId a) const;
  const ElementSet& down_set(ElementId a) const;

  /// Elements listed so that a < b implies a appears before b.
  const std::vector<ElementId>& linear_extension() const noexcept { return topo_; }

  std::optional<ElementId> bottom() const noexcept { return bottom_; }
  std::optional<ElementId> top() const noexcept { return top_; }
  bool is_bounded() const noexcept { return bottom_.has_value() && top_.has_value(); }
  /// 0̂ and 1̂; throws NotBounded.
  ElementId require_bottom() const;
  ElementId require_top() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  void check_id(ElementId a) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, ElementId> index_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> up_offset_;  // CSR offsets into up_adj_, aligned with edges_
  std::vector<ElementId> up_adj_;
  std::vector<std::vector<ElementId>> down_adj_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<ElementId> topo_;
  std::optional<ElementId> bottom_;
  std::optional<ElementId> top_;
};

/// Builds a poset from names and cover pairs given by name.
Poset build_poset(std::vector<std::string> elements,
                  const std::vector<std::pair<std::string, std::string>>& cover_pairs,
                  Reduction mode = Reduction::Strict);

/// Ordered list of element ids inside a poset.
struct Chain {
  std::vector<ElementId> nodes;

  std::size_t length() const noexcept { return nodes.empty() ? 0 : nodes.size() - 1; }
  bool empty() const noexcept { return nodes.empty(); }
  ElementId front() const { return nodes.front(); }
  ElementId back() const { return nodes.back(); }
  bool contains(ElementId a) const;

  friend auto operator<=>(const Chain&, const Chain&) = default;
  friend bool operator==(const Chain&, const Chain&) = default;
};

bool is_chain(const Poset& p, const Chain& c);
bool is_unrefinable(const Poset& p, const Chain& c);
bool is_maximal_chain(const Poset& p, const Chain& c);
std::string to_string(const Poset& p, const Chain& c);

/// Counterexample (or certificate) carried by a CheckReport.
struct Witness {
  std::vector<ElementId> elements;
  std::vector<Chain> chains;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Verdict of a decision procedure. A false verdict always carries a witness.
struct CheckReport {
  bool verdict = true;
  std::optional<Witness> witness;
  std::string note;

  static CheckReport pass(std::string note = {}) { return {true, std::nullopt, std::move(note)}; }
  static CheckReport pass_with(Witness w, std::string note = {}) {
    return {true, std::move(w), std::move(note)};
  }
  static CheckReport fail(Witness w, std::string note) { return {false, std::move(w), std::move(note)}; }

  explicit operator bool() const noexcept { return verdict; }
};

/// Induced subposet on `elements`; the i-th element of the result is the i-th
/// smallest id in `elements`. Covers are recomputed inside the subset.
Poset induced_subposet(const Poset& p, std::vector<ElementId> elements);

/// Sorted ids of {u : y <= u <= z}; throws NotComparable.
std::vector<ElementId> interval_elements(const Poset& p, ElementId y, ElementId z);

/// The interval [y,z] as a bounded poset (ids ordered as interval_elements).
Poset interval(const Poset& p, ElementId y, ElementId z);

/// Visits every unrefinable chain from y to z in lexicographic order of ids.
/// The visitor returns false to stop early. Throws NotComparable.
void for_each_maximal_chain(const Poset& p, ElementId y, ElementId z,
                            const std::function<bool(const Chain&)>& visit);

std::vector<Chain> maximal_chains(const Poset& p, ElementId y, ElementId z);
std::vector<Chain> maximal_chains(const Poset& p);

/// Common length of all maximal 0̂–1̂ chains, if there is one. Throws NotBounded.
std::optional<std::size_t> graded_rank(const Poset& p);

}  // namespace posetlab
