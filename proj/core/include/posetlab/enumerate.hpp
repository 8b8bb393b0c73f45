#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "posetlab/poset.hpp"

namespace posetlab {

inline constexpr std::size_t kMaxEnumeratedElements = 7;
inline constexpr std::size_t kMaxCanonicalElements = 8;

/// Order matrix (row-major '0'/'1') that is lexicographically least over all
/// relabellings. Equal forms <=> isomorphic posets. Throws SizeLimit above
/// kMaxCanonicalElements.
std::string canonical_form(const Poset& p);
bool are_isomorphic(const Poset& a, const Poset& b);

/// Every poset on exactly `elements` points (named a, b, c, ...), one per
/// isomorphism class, ordered by canonical form.
std::vector<Poset> enumerate_posets(std::size_t elements);

/// Every bounded poset with 2..max_elements elements (0̂ != 1̂), one per
/// isomorphism class, ordered by size and then canonical form. Elements are
/// named 0, a, b, ..., 1. Throws SizeLimit above kMaxEnumeratedElements.
void for_each_bounded_poset(std::size_t max_elements, bool graded_only,
                            const std::function<void(const Poset&)>& visit);
std::vector<Poset> enumerate_bounded_posets(std::size_t max_elements, bool graded_only);

}  // namespace posetlab
