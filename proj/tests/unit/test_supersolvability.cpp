#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "posetlab/families.hpp"
#include "posetlab/order_ops.hpp"
#include "posetlab/supersolvability.hpp"

using namespace posetlab;
using fixtures::chain_of;

namespace {

// Re-applying the closure rule to a closed set adds nothing.
bool is_r_closed(const Poset& p, const Chain& m, const std::vector<ElementId>& set) {
  auto in = [&](std::optional<ElementId> u) {
    return u && std::binary_search(set.begin(), set.end(), *u);
  };
  for (ElementId x : m.nodes) {
    for (ElementId y : set) {
      for (ElementId z : set) {
        if (!p.leq(y, z)) continue;
        auto xy = join(p, x, y);
        auto xz = meet(p, x, z);
        if (!xy || !xz) return false;
        if (!in(rel_meet(p, y, *xy, z)) || !in(rel_join(p, z, *xz, y))) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("r_closure on the partition lattice") {
  PartitionFamily pi3 = partition_lattice(3);
  const Poset& p = *pi3.poset;
  Chain m = chain_of(p, {"1/2/3", "1,2/3", "1,2,3"});
  Chain c = chain_of(p, {"1,3/2"});
  ClosureResult r = r_closure(p, m, c);
  CHECK(r.elements.size() == 4);
  CHECK(std::binary_search(r.elements.begin(), r.elements.end(), p.id("1,3/2")));
  CHECK_FALSE(std::binary_search(r.elements.begin(), r.elements.end(), p.id("1/2,3")));
  CHECK(r.subposet.size() == 4);
  CHECK(is_distributive_lattice(r.subposet).verdict);
  CHECK(is_r_closed(p, m, r.elements));
}

TEST_CASE("closures of a chain with nothing added") {
  PartitionFamily pi3 = partition_lattice(3);
  const Poset& p = *pi3.poset;
  ClosureResult r = r_closure(p, pi3.increasing, Chain{});
  CHECK(r.elements.size() == 3);
  ClosureResult q = q_closure(pi3.labelling, pi3.increasing, pi3.increasing);
  CHECK(q.elements.size() == 3);
}

TEST_CASE("r_closure needs a viable chain") {
  Poset p = fixtures::bounded_bowtie();
  CHECK_THROWS_AS(r_closure(p, chain_of(p, {"0", "a", "c", "1"}), chain_of(p, {"b"})), NotViable);
}

TEST_CASE("closures are monotone and idempotent") {
  std::mt19937 rng(5);
  for (int n : {3, 4}) {
    for (const PartitionFamily& f : {partition_lattice(n), noncrossing_lattice(n)}) {
      const Poset& p = *f.poset;
      for (const Chain& c : maximal_chains(p)) {
        ClosureResult full = r_closure(p, f.increasing, c);
        CHECK(is_r_closed(p, f.increasing, full.elements));
        for (ElementId u : c.nodes) CHECK(std::binary_search(full.elements.begin(), full.elements.end(), u));
        // Random subchains close inside the closure of the whole chain.
        for (int trial = 0; trial < 4; ++trial) {
          Chain sub;
          for (ElementId u : c.nodes) {
            if (rng() % 2) sub.nodes.push_back(u);
          }
          ClosureResult part = r_closure(p, f.increasing, sub);
          CHECK(std::includes(full.elements.begin(), full.elements.end(), part.elements.begin(),
                              part.elements.end()));
          CHECK(is_distributive_lattice(part.subposet).verdict);
        }
      }
    }
  }
}

TEST_CASE("increasing extension") {
  PartitionFamily pi4 = partition_lattice(4);
  const Poset& p = *pi4.poset;
  Chain c = chain_of(p, {"1,4/2/3"});
  Chain m = increasing_extension(pi4.labelling, c);
  CHECK(is_maximal_chain(p, m));
  CHECK(m.contains(p.id("1,4/2/3")));
  // Increasing from 0̂ to the given element and from there to 1̂.
  auto up_to = std::find(m.nodes.begin(), m.nodes.end(), p.id("1,4/2/3"));
  Chain lower{std::vector<ElementId>(m.nodes.begin(), up_to + 1)};
  Chain upper{std::vector<ElementId>(up_to, m.nodes.end())};
  auto lw = pi4.labelling.word(lower);
  auto uw = pi4.labelling.word(upper);
  CHECK(std::is_sorted(lw.begin(), lw.end()));
  CHECK(std::is_sorted(uw.begin(), uw.end()));
}

TEST_CASE("distributivity") {
  CHECK(is_distributive_lattice(fixtures::diamond()).verdict);
  CHECK_FALSE(is_distributive_lattice(fixtures::pentagon()).verdict);
  CHECK_FALSE(is_distributive_lattice(*partition_lattice(3).poset).verdict);
  CHECK_FALSE(is_distributive_lattice(fixtures::bounded_bowtie()).verdict);
  CHECK(is_distributive_lattice(chain_poset(4)).verdict);
  CHECK(is_distributive_lattice(*ideal_lattice(antichain_poset(3), std::vector<int>{1, 2, 3}).poset).verdict);
}

TEST_CASE("supersolvability") {
  for (int n = 1; n <= 4; ++n) CHECK(is_supersolvable(*partition_lattice(n).poset).verdict);
  CHECK(is_supersolvable(chain_poset(3)).verdict);
  CHECK(is_supersolvable(chain_poset(0)).verdict);
  CHECK_FALSE(is_supersolvable(*tamari_lattice(4).poset).verdict);
  CHECK_FALSE(is_supersolvable(fixtures::pentagon()).verdict);
  CHECK_FALSE(is_supersolvable(fixtures::bounded_bowtie()).verdict);

  PartitionFamily pi4 = partition_lattice(4);
  CheckReport r = is_supersolvable(*pi4.poset);
  REQUIRE(r.witness.has_value());
  REQUIRE(r.witness->chains.size() == 1);
  CHECK(is_left_modular_chain(*pi4.poset, r.witness->chains.front()).verdict);
}

TEST_CASE("supersolvability search respects its chain cap") {
  CHECK_THROWS_AS(is_supersolvable(*partition_lattice(4).poset, 2), SizeLimit);
}
