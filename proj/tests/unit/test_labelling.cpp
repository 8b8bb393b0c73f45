#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "posetlab/enumerate.hpp"
#include "posetlab/families.hpp"
#include "posetlab/labelling.hpp"
#include "posetlab/order_ops.hpp"

using namespace posetlab;
using fixtures::chain_of;
using fixtures::share;

namespace {

// EL by definition: in every interval, exactly one maximal chain is weakly
// increasing and its word is strictly lex-least among all chains.
bool brute_el(const EdgeLabelling& lab) {
  const Poset& p = lab.poset();
  for (ElementId y = 0; y < p.size(); ++y) {
    for (ElementId z = 0; z < p.size(); ++z) {
      if (y == z || !p.leq(y, z)) continue;
      std::vector<std::vector<int>> words;
      std::size_t increasing = 0;
      std::vector<int> inc_word;
      for (const Chain& c : maximal_chains(p, y, z)) {
        auto w = lab.word(c);
        if (std::is_sorted(w.begin(), w.end())) {
          ++increasing;
          inc_word = w;
        }
        words.push_back(w);
      }
      if (increasing != 1) return false;
      for (const auto& w : words) {
        if (w != inc_word && !std::lexicographical_compare(inc_word.begin(), inc_word.end(),
                                                           w.begin(), w.end())) {
          return false;
        }
      }
    }
  }
  return true;
}

EdgeLabelling label_diamond(const PosetPtr& p, int a0, int a1, int b0, int b1) {
  const Poset& d = *p;
  return EdgeLabelling::from_function(p, [&](ElementId x, ElementId y) {
    if (x == d.id("0") && y == d.id("a")) return a0;
    if (x == d.id("a")) return a1;
    if (x == d.id("0") && y == d.id("b")) return b0;
    return b1;
  });
}

}  // namespace

TEST_CASE("labelling construction") {
  auto p = share(fixtures::diamond());
  CHECK_THROWS_AS(EdgeLabelling(p, {1, 2}), PreconditionViolated);
  EdgeLabelling lab = label_diamond(p, 1, 2, 2, 1);
  CHECK(lab(p->id("0"), p->id("a")) == 1);
  CHECK_THROWS_AS(lab(p->id("0"), p->id("1")), PreconditionViolated);
  CHECK(lab.word(chain_of(*p, {"0", "b", "1"})) == std::vector<int>{2, 1});
  CHECK(lab.shifted(3).word(chain_of(*p, {"0", "b", "1"})) == std::vector<int>{5, 4});

  CHECK_THROWS_AS(LabelSet({1, 1}), PreconditionViolated);
  CHECK_THROWS_AS(LabelSet({3, 2}), PreconditionViolated);
  CHECK(LabelSet::standard(3).label(3) == 3);
  CHECK(LabelSet::consecutive(2, 3).label(1) == 2);
}

TEST_CASE("lexicographic order is prefix-first word order") {
  CHECK(lexicographically_less(std::vector<int>{1, 2}, std::vector<int>{1, 3}));
  CHECK(lexicographically_less(std::vector<int>{1}, std::vector<int>{1, 0}));
  CHECK_FALSE(lexicographically_less(std::vector<int>{2}, std::vector<int>{1, 5}));
}

TEST_CASE("EL on the diamond") {
  auto p = share(fixtures::diamond());
  CHECK(is_el_labelling(label_diamond(p, 1, 2, 2, 1)).verdict);
  // Two increasing chains.
  CHECK_FALSE(is_el_labelling(label_diamond(p, 1, 2, 1, 2)).verdict);
  // Increasing chain is not lex-least.
  CHECK_FALSE(is_el_labelling(label_diamond(p, 2, 3, 1, 0)).verdict);
  auto search = find_increasing_chains(label_diamond(p, 1, 2, 1, 2), p->id("0"), p->id("1"));
  CHECK(search.count == IncreasingCount::Many);
}

TEST_CASE("EL agrees with the brute-force chain oracle") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> label(1, 3);
  std::size_t agreements = 0;
  for_each_bounded_poset(6, false, [&](const Poset& q) {
    auto p = share(q);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<int> labels(p->edges().size());
      for (int& l : labels) l = label(rng);
      EdgeLabelling lab(p, labels);
      CHECK(is_el_labelling(lab).verdict == brute_el(lab));
      ++agreements;
    }
  });
  CHECK(agreements == 25 * 12);
}

TEST_CASE("S_n EL") {
  IdealFamily b3 = ideal_lattice(antichain_poset(3), std::vector<int>{1, 2, 3});
  CHECK(is_sn_el_labelling(b3.labelling).verdict);
  CHECK_FALSE(is_sn_el_labelling(b3.labelling.shifted(1)).verdict);

  auto pent = share(fixtures::pentagon());
  EdgeLabelling any(pent, std::vector<int>(pent->edges().size(), 1));
  CHECK_THROWS_AS(is_sn_el_labelling(any), NotGraded);

  PartitionFamily pi4 = partition_lattice(4);
  CHECK(is_sn_el_labelling(pi4.labelling.shifted(-1)).verdict);
}

TEST_CASE("interpolating") {
  auto p = share(fixtures::diamond());
  CHECK(is_interpolating(label_diamond(p, 1, 2, 2, 1)).verdict);
  // EL, but the descent 2,1 is not bridged by a chain ending in 2.
  EdgeLabelling lab = label_diamond(p, 1, 3, 2, 1);
  CHECK(is_el_labelling(lab).verdict);
  CHECK_FALSE(is_interpolating(lab).verdict);
}

TEST_CASE("basic replacements on the partition lattice") {
  PartitionFamily pi3 = partition_lattice(3);
  const Poset& p = *pi3.poset;
  Chain start = chain_of(p, {"1/2/3", "1,3/2", "1,2,3"});
  CHECK(pi3.labelling.word(start) == std::vector<int>{3, 2});
  ReplacementResult r = basic_replacement_reduce(pi3.labelling, start);
  CHECK(r.chain == chain_of(p, {"1/2/3", "1,2/3", "1,2,3"}));
  CHECK(pi3.labelling.word(r.chain) == std::vector<int>{2, 3});
  CHECK(r.steps == 1);
  CHECK_THROWS_AS(basic_replacement_reduce(pi3.labelling, chain_of(p, {"1/2/3", "1,2,3"})),
                  PreconditionViolated);
}

TEST_CASE("basic replacements fail without EL") {
  auto p = share(fixtures::diamond());
  EdgeLabelling lab = label_diamond(p, 2, 1, 2, 1);
  CHECK_THROWS_AS(basic_replacement_reduce(lab, chain_of(*p, {"0", "a", "1"})), NotELLabelled);
}

TEST_CASE("induced labellings") {
  auto p = share(fixtures::pentagon());
  Chain m = chain_of(*p, {"0", "a", "b", "1"});
  EdgeLabelling lab = induce_labelling(p, m, LabelSet::standard(3));
  CHECK(lab.word(m) == std::vector<int>{1, 2, 3});
  CHECK(lab(p->id("0"), p->id("c")) == 3);
  CHECK(lab(p->id("c"), p->id("1")) == 1);
  CHECK(is_interpolating(lab).verdict);

  CoverIndex idx = cover_label_index(*p, m, p->id("0"), p->id("c"));
  CHECK(idx.consistent());
  CHECK(idx.by_definition == 3u);

  CHECK_THROWS_AS(induce_labelling(p, m, LabelSet::standard(2)), PreconditionViolated);
  CHECK_THROWS_AS(induce_labelling(p, chain_of(*p, {"0", "a", "b"}), LabelSet::standard(2)),
                  PreconditionViolated);
  CHECK_THROWS_AS(induce_labelling(p, chain_of(*p, {"0", "c", "1"}), LabelSet::standard(2)),
                  NotLeftModular);
}

TEST_CASE("induced interval chain") {
  PartitionFamily pi4 = partition_lattice(4);
  const Poset& p = *pi4.poset;
  ElementId y = p.id("1/2,4/3");
  ElementId z = p.top().value();
  InducedChain ic = induced_interval_chain(p, pi4.increasing, y, z);
  CHECK(ic.chain.front() == y);
  CHECK(ic.chain.back() == z);
  CHECK(is_unrefinable(p, ic.chain));
  CHECK(ic.jumps.size() == ic.chain.length());
  CHECK(increasing_chain(pi4.labelling, y, z) == ic.chain);
}

TEST_CASE("induced labelling reproduces the partition labelling") {
  for (int n = 2; n <= 4; ++n) {
    PartitionFamily f = partition_lattice(n);
    EdgeLabelling again = induce_labelling(f.poset, f.increasing, LabelSet::consecutive(2, n - 1));
    CHECK(again == f.labelling);
  }
}
