#include "posetlab/supersolvability.hpp"

#include <algorithm>

#include "posetlab/order_ops.hpp"

namespace posetlab {
namespace {

std::vector<ElementId> members(const ElementSet& set) {
  std::vector<ElementId> out;
  for (auto u = set.find_first(); u != ElementSet::npos; u = set.find_next(u)) {
    out.push_back(static_cast<ElementId>(u));
  }
  return out;
}

ElementSet seed(const Poset& p, const Chain& a, const Chain& b) {
  ElementSet set(p.size());
  for (const Chain* chain : {&a, &b}) {
    for (ElementId u : chain->nodes) {
      if (u >= p.size()) throw UnknownElement("chain element " + std::to_string(u) + " out of range");
      set.set(u);
    }
  }
  return set;
}

}  // namespace

ClosureResult r_closure(const Poset& p, const Chain& m_chain, const Chain& c) {
  ElementSet closed = seed(p, m_chain, c);
  std::size_t steps = 0;
  for (bool grew = true; grew;) {
    grew = false;
    ++steps;
    const std::vector<ElementId> current = members(closed);
    for (ElementId y : current) {
      for (ElementId z : current) {
        if (!p.leq(y, z)) continue;
        for (ElementId x : m_chain.nodes) {
          auto up = join(p, x, y);
          auto down = meet(p, x, z);
          std::optional<ElementId> lhs = up ? rel_meet(p, y, *up, z) : std::nullopt;
          std::optional<ElementId> rhs = down ? rel_join(p, z, *down, y) : std::nullopt;
          if (!lhs || !rhs) {
            throw NotViable(p.name(x) + " is not viable at " + p.name(y) + " <= " + p.name(z));
          }
          for (ElementId u : {*lhs, *rhs}) {
            if (!closed.test(u)) {
              closed.set(u);
              grew = true;
            }
          }
        }
      }
    }
  }
  std::vector<ElementId> elements = members(closed);
  Poset sub = induced_subposet(p, elements);
  return {std::move(elements), std::move(sub), {m_chain, c}, steps};
}

ClosureResult q_closure(const EdgeLabelling& lab, const Chain& m_chain, const Chain& m) {
  const Poset& p = lab.poset();
  ElementSet closed = seed(p, m_chain, m);
  std::size_t steps = 0;
  for (bool grew = true; grew;) {
    grew = false;
    ++steps;
    const std::vector<ElementId> current = members(closed);
    for (ElementId y : current) {
      for (ElementId z : current) {
        if (y == z || !p.leq(y, z)) continue;
        auto inc = increasing_chain(lab, y, z);
        if (!inc) {
          throw NotELLabelled("no unique increasing chain from " + p.name(y) + " to " + p.name(z));
        }
        for (ElementId u : inc->nodes) {
          if (!closed.test(u)) {
            closed.set(u);
            grew = true;
          }
        }
      }
    }
  }
  std::vector<ElementId> elements = members(closed);
  Poset sub = induced_subposet(p, elements);
  return {std::move(elements), std::move(sub), {m_chain, m}, steps};
}

Chain increasing_extension(const EdgeLabelling& lab, const Chain& c) {
  const Poset& p = lab.poset();
  if (!is_chain(p, c)) throw PreconditionViolated("increasing_extension needs a chain");
  std::vector<ElementId> stops{p.require_bottom()};
  for (ElementId u : c.nodes) {
    if (u != stops.back()) stops.push_back(u);
  }
  if (stops.back() != p.require_top()) stops.push_back(p.require_top());

  Chain out{{stops.front()}};
  for (std::size_t i = 1; i < stops.size(); ++i) {
    auto inc = increasing_chain(lab, stops[i - 1], stops[i]);
    if (!inc) {
      throw NotELLabelled("no unique increasing chain from " + p.name(stops[i - 1]) + " to " +
                          p.name(stops[i]));
    }
    out.nodes.insert(out.nodes.end(), inc->nodes.begin() + 1, inc->nodes.end());
  }
  return out;
}

CheckReport is_distributive_lattice(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return CheckReport::fail(Witness{}, "empty poset");
  std::vector<ElementId> joins(n * n);
  std::vector<ElementId> meets(n * n);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a; b < n; ++b) {
      auto j = join(p, a, b);
      if (!j) return CheckReport::fail(Witness{{a, b}, {}}, p.name(a) + " ∨ " + p.name(b) + " undefined");
      auto m = meet(p, a, b);
      if (!m) return CheckReport::fail(Witness{{a, b}, {}}, p.name(a) + " ∧ " + p.name(b) + " undefined");
      joins[a * n + b] = joins[b * n + a] = *j;
      meets[a * n + b] = meets[b * n + a] = *m;
    }
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      for (ElementId z = y; z < n; ++z) {
        const ElementId lhs = meets[x * n + joins[y * n + z]];
        const ElementId rhs = joins[meets[x * n + y] * n + meets[x * n + z]];
        if (lhs != rhs) {
          return CheckReport::fail(Witness{{x, y, z}, {}},
                                   "distributive law fails at x=" + p.name(x) + " y=" + p.name(y) +
                                       " z=" + p.name(z));
        }
      }
    }
  }
  return CheckReport::pass();
}

CheckReport is_supersolvable(const Poset& p, std::size_t chain_cap) {
  std::vector<Chain> chains;
  for_each_maximal_chain(p, p.require_bottom(), p.require_top(), [&](const Chain& c) {
    if (chains.size() >= chain_cap) {
      throw SizeLimit("more than " + std::to_string(chain_cap) + " maximal chains");
    }
    chains.push_back(c);
    return true;
  });

  std::vector<int> viable(p.size(), -1);
  auto is_viable = [&](ElementId x) {
    if (viable[x] < 0) viable[x] = is_viable_element(p, x).report.verdict ? 1 : 0;
    return viable[x] == 1;
  };

  Witness rejected;
  for (const Chain& candidate : chains) {
    if (!std::all_of(candidate.nodes.begin(), candidate.nodes.end(), is_viable)) continue;
    bool all_distributive = true;
    for (const Chain& c : chains) {
      if (!is_distributive_lattice(r_closure(p, candidate, c).subposet)) {
        rejected.chains.push_back(candidate);
        rejected.chains.push_back(c);
        all_distributive = false;
        break;
      }
    }
    if (all_distributive) {
      return CheckReport::pass_with(Witness{{}, {candidate}}, "M-chain " + to_string(p, candidate));
    }
  }
  for (ElementId x = 0; x < p.size(); ++x) {
    if (!is_viable(x)) rejected.elements.push_back(x);
  }
  return CheckReport::fail(std::move(rejected),
                           "no viable maximal chain generates only distributive lattices "
                           "(witness: non-viable elements, then (M, c) pairs)");
}

}  // namespace posetlab
