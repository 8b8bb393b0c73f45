#include "posetlab/order_ops.hpp"

#include <functional>

namespace posetlab {
namespace {

// Least element of a nonempty candidate set, if it has one.
std::optional<ElementId> least_of(const Poset& p, const ElementSet& candidates) {
  for (auto u = candidates.find_first(); u != ElementSet::npos; u = candidates.find_next(u)) {
    if (candidates.is_subset_of(p.up_set(static_cast<ElementId>(u)))) {
      return static_cast<ElementId>(u);
    }
  }
  return std::nullopt;
}

std::optional<ElementId> greatest_of(const Poset& p, const ElementSet& candidates) {
  for (auto u = candidates.find_first(); u != ElementSet::npos; u = candidates.find_next(u)) {
    if (candidates.is_subset_of(p.down_set(static_cast<ElementId>(u)))) {
      return static_cast<ElementId>(u);
    }
  }
  return std::nullopt;
}

ElementCheck failure(const Poset& p, LMWitness w) {
  Witness elements{{w.x, w.y, w.z}, {}};
  if (w.lhs) elements.elements.push_back(*w.lhs);
  if (w.rhs) elements.elements.push_back(*w.rhs);
  std::string note = std::string(to_string(w.kind)) + ": x=" + p.name(w.x) + " y=" + p.name(w.y) +
                     " z=" + p.name(w.z);
  if (w.lhs) note += " (x∨y)∧_y z=" + p.name(*w.lhs);
  if (w.rhs) note += " (x∧z)∨^z y=" + p.name(*w.rhs);
  return {CheckReport::fail(std::move(elements), std::move(note)), w};
}

ElementCheck check_element(const Poset& p, ElementId x, bool require_equality) {
  const std::size_t n = p.size();
  std::vector<std::optional<ElementId>> joins(n);
  std::vector<std::optional<ElementId>> meets(n);
  for (ElementId u = 0; u < n; ++u) {
    joins[u] = join(p, x, u);
    meets[u] = meet(p, x, u);
  }
  for (ElementId y = 0; y < n; ++y) {
    const ElementSet& above = p.up_set(y);
    for (auto zi = above.find_first(); zi != ElementSet::npos; zi = above.find_next(zi)) {
      const auto z = static_cast<ElementId>(zi);
      LMWitness w{x, y, z, std::nullopt, std::nullopt, LMFailure::JoinUndefined};
      if (!joins[y]) return failure(p, w);
      if (!meets[z]) {
        w.kind = LMFailure::MeetUndefined;
        return failure(p, w);
      }
      w.lhs = rel_meet(p, y, *joins[y], z);
      w.rhs = rel_join(p, z, *meets[z], y);
      if (!w.lhs) {
        w.kind = LMFailure::RelMeetUndefined;
        return failure(p, w);
      }
      if (!w.rhs) {
        w.kind = LMFailure::RelJoinUndefined;
        return failure(p, w);
      }
      if (require_equality && *w.lhs != *w.rhs) {
        w.kind = LMFailure::NotEqual;
        return failure(p, w);
      }
    }
  }
  return {CheckReport::pass(), std::nullopt};
}

}  // namespace

std::optional<ElementId> join(const Poset& p, ElementId a, ElementId b) {
  return least_of(p, p.up_set(a) & p.up_set(b));
}

std::optional<ElementId> meet(const Poset& p, ElementId a, ElementId b) {
  return greatest_of(p, p.down_set(a) & p.down_set(b));
}

std::optional<ElementId> rel_meet(const Poset& p, ElementId y, ElementId w, ElementId z) {
  if (!p.leq(y, w) || !p.leq(y, z)) {
    throw PreconditionViolated("rel_meet: " + p.name(y) + " must lie below " + p.name(w) +
                               " and " + p.name(z));
  }
  return greatest_of(p, p.up_set(y) & p.down_set(w) & p.down_set(z));
}

std::optional<ElementId> rel_join(const Poset& p, ElementId z, ElementId w, ElementId y) {
  if (!p.leq(w, z) || !p.leq(y, z)) {
    throw PreconditionViolated("rel_join: " + p.name(w) + " and " + p.name(y) +
                               " must lie below " + p.name(z));
  }
  return least_of(p, p.down_set(z) & p.up_set(w) & p.up_set(y));
}

std::string_view to_string(LMFailure kind) {
  switch (kind) {
    case LMFailure::JoinUndefined: return "JoinUndefined";
    case LMFailure::MeetUndefined: return "MeetUndefined";
    case LMFailure::RelMeetUndefined: return "RelMeetUndefined";
    case LMFailure::RelJoinUndefined: return "RelJoinUndefined";
    case LMFailure::NotEqual: return "NotEqual";
  }
  return "?";
}

ElementCheck is_viable_element(const Poset& p, ElementId x) {
  p.name(x);
  return check_element(p, x, false);
}

ElementCheck is_left_modular_element(const Poset& p, ElementId x) {
  p.name(x);
  return check_element(p, x, true);
}

CheckReport is_left_modular_chain(const Poset& p, const Chain& chain) {
  for (ElementId x : chain.nodes) {
    auto check = is_left_modular_element(p, x);
    if (!check) return check.report;
  }
  return CheckReport::pass();
}

std::vector<Chain> find_left_modular_chains(const Poset& p) {
  const ElementId bottom = p.require_bottom();
  const ElementId top = p.require_top();
  std::vector<char> good(p.size(), 0);
  for (ElementId x = 0; x < p.size(); ++x) {
    good[x] = is_left_modular_element(p, x).report.verdict ? 1 : 0;
  }
  std::vector<Chain> out;
  if (!good[bottom] || !good[top]) return out;
  Chain current{{bottom}};
  std::function<void(ElementId)> descend = [&](ElementId u) {
    if (u == top) {
      out.push_back(current);
      return;
    }
    for (ElementId v : p.upper_covers(u)) {
      if (!good[v]) continue;
      current.nodes.push_back(v);
      descend(v);
      current.nodes.pop_back();
    }
  };
  descend(bottom);
  return out;
}

}  // namespace posetlab
