// Acceptance run: one PASS/FAIL line per criterion. `--slow` adds NS6 to the
// non-straddling suite.

#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "posetlab/document.hpp"
#include "posetlab/dot.hpp"
#include "posetlab/enumerate.hpp"
#include "posetlab/families.hpp"
#include "posetlab/order_ops.hpp"
#include "posetlab/theorems.hpp"

using namespace posetlab;

namespace {

struct Outcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void absorb(const ClaimResult& r) {
    checks += r.checks;
    if (!r.passed) failures.push_back(r.subject + " " + r.claim + ": " + r.detail);
  }
};

bool report(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  const bool ok = o.failures.empty();
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " ("
            << o.checks << " checks)\n";
  for (const std::string& f : o.failures) std::cout << "    " << f << '\n';
  return ok;
}

std::vector<Subject> round_trip_subjects() {
  std::vector<Subject> out;
  for (int n = 1; n <= 4; ++n) out.push_back(partition_subject(n));
  for (int n = 1; n <= 4; ++n) out.push_back(noncrossing_subject(n));
  for (int n = 1; n <= 5; ++n) out.push_back(nonstraddling_subject(n));
  out.push_back(tamari_subject(3));
  out.push_back(tamari_subject(4));
  for (std::size_t m = 1; m <= 4; ++m) {
    std::vector<Poset> qs = enumerate_posets(m);
    for (std::size_t k = 0; k < qs.size(); ++k) {
      out.push_back(ideal_subject(qs[k], "J(Q" + std::to_string(m) + "." + std::to_string(k + 1) + ")"));
    }
  }
  return out;
}

Poset random_poset(std::mt19937& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.3);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Edge> relation;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) relation.emplace_back(static_cast<ElementId>(i), static_cast<ElementId>(j));
    }
  }
  return Poset(names, relation, Reduction::AutoReduce);
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slow") == 0) slow = true;
  }
  const int ns_top = slow ? 6 : 5;
  bool all = true;

  all &= report(1, "family sizes and shapes", [](Outcome& o) {
    PartitionFamily pi = partition_lattice(3);
    const Poset& pi3 = *pi.poset;
    o.expect(pi3.size() == 5, "|Pi3| = 5");
    o.expect(graded_rank(pi3) == 2u, "Pi3 has rank 2");
    o.expect(partition_lattice(4).poset->size() == 15, "|Pi4| = 15");
    o.expect(noncrossing_lattice(4).poset->size() == 14, "|NC4| = 14");
    o.expect(tamari_lattice(4).poset->size() == 14, "|T4| = 14");
    o.expect(nonstraddling_lattice(3).poset->size() == 5, "|NS3| = 5");
    o.expect(nonstraddling_lattice(4).poset->size() == 14, "|NS4| = 14");
    o.expect(!graded_rank(*nonstraddling_lattice(6).poset).has_value(), "NS6 is not graded");
    Poset pentagon = build_poset({"0", "a", "b", "c", "1"},
                                 {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
    o.expect(are_isomorphic(*tamari_lattice(3).poset, pentagon), "T3 is the pentagon");
  });

  all &= report(2, "gamma is an interpolating EL-labelling of NS_n, n = 3.." + std::to_string(ns_top),
                 [&](Outcome& o) {
                   for (int n = 3; n <= ns_top; ++n) {
                     PartitionFamily f = nonstraddling_lattice(n);
                     const std::string name = "NS" + std::to_string(n);
                     Subject s{name, f};
                     o.absorb(claim_el(s));
                     o.absorb(claim_interpolating(s));
                     o.absorb(claim_gamma_definitions(f, name));
                     o.absorb(claim_first_label(f, name));
                     o.absorb(claim_increasing_chain(s));
                     for (int k = 1; k <= n; ++k) {
                       o.expect(f.partitions[f.increasing.nodes[k - 1]] == SetPartition::initial_block(n, k),
                                name + " increasing chain element " + std::to_string(k));
                     }
                   }
                 });

  all &= report(3, "the displayed chain of NS_n is left modular, n <= 5", [](Outcome& o) {
    for (int n = 1; n <= 5; ++n) {
      PartitionFamily f = nonstraddling_lattice(n);
      for (ElementId x : f.increasing.nodes) {
        o.expect(is_left_modular_element(*f.poset, x).report.verdict,
                 "NS" + std::to_string(n) + " element " + f.poset->name(x));
      }
    }
  });

  const std::vector<Subject> subjects = round_trip_subjects();

  all &= report(4, "left modular chains and interpolating labellings round trip", [&](Outcome& o) {
    for (const Subject& s : subjects) {
      o.absorb(claim_induced_labellings(s));
      o.absorb(claim_increasing_chain_left_modular(s));
    }
  });

  all &= report(5, "S_n EL, left modular and supersolvable agree on graded posets <= 6",
                [](Outcome& o) {
                  o.absorb(claim_graded_equivalence(6));
                  o.expect(enumerate_bounded_posets(6, true).size() == 18, "18 graded bounded posets");
                });

  all &= report(6, "re-inducing from the increasing chain reproduces the labelling", [](Outcome& o) {
    for (int n = 1; n <= 5; ++n) o.absorb(claim_labelling_uniqueness(nonstraddling_subject(n)));
    o.absorb(claim_labelling_uniqueness(tamari_subject(4)));
  });

  all &= report(7, "closures agree and are distributive on Pi4 and NC4", [](Outcome& o) {
    o.absorb(claim_closure_identity(partition_subject(4)));
    o.absorb(claim_closure_identity(noncrossing_subject(4)));
  });

  all &= report(8, "oracle equivalences", [&](Outcome& o) {
    for (int n = 1; n <= 5; ++n) {
      o.absorb(claim_ns_joins(nonstraddling_lattice(n), "NS" + std::to_string(n)));
    }
    o.absorb(claim_basic_replacement(partition_subject(4)));
    o.absorb(claim_basic_replacement(nonstraddling_subject(4)));
    for (const Subject& s : subjects) o.absorb(claim_cover_index_agreement(s));
  });

  all &= report(9, "document round trip and deterministic DOT", [](Outcome& o) {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> label(0, 9);
    for (int trial = 0; trial < 200; ++trial) {
      auto p = std::make_shared<const Poset>(random_poset(rng, 1 + trial % 12));
      std::vector<int> labels(p->edges().size());
      for (int& l : labels) l = label(rng);
      EdgeLabelling lab(p, labels);
      PosetDocument doc = make_document("random-" + std::to_string(trial), *p, &lab);
      std::string text = serialize_poset_document(doc);
      PosetDocument back = parse_poset_document(text);
      o.expect(back == doc && serialize_poset_document(back) == text && to_poset(back) == *p,
               "round trip " + std::to_string(trial));
      auto q = std::make_shared<const Poset>(to_poset(back));
      EdgeLabelling relab = *to_labelling(back, q);
      o.expect(export_dot(*p, &lab) == export_dot(*q, &relab), "DOT " + std::to_string(trial));
    }
    PartitionFamily first = nonstraddling_lattice(4);
    PartitionFamily second = nonstraddling_lattice(4);
    o.expect(export_dot(*first.poset, &first.labelling) == export_dot(*second.poset, &second.labelling),
             "NS4 DOT across two generations");
  });

  return all ? 0 : 1;
}
