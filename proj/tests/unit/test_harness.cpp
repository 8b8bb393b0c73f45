#include <doctest.h>

#include <set>
#include <tuple>

#include <json.hpp>

#include "fixtures.hpp"
#include "posetlab/document.hpp"
#include "posetlab/dot.hpp"
#include "posetlab/enumerate.hpp"
#include "posetlab/families.hpp"
#include "posetlab/labelling.hpp"
#include "posetlab/theorems.hpp"

using namespace posetlab;
using fixtures::share;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

const char* kDiamond = R"({
  "name": "diamond",
  "elements": ["0", "a", "b", "1"],
  "covers": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]],
  "labels": {"0->a": 1, "a->1": 2, "0->b": 2, "b->1": 1},
  "chains": {"M": ["0", "a", "1"]}
})";

}  // namespace

TEST_CASE("document parsing") {
  PosetDocument doc = parse_poset_document(kDiamond);
  CHECK(doc.name == "diamond");
  auto p = share(to_poset(doc));
  CHECK(p->size() == 4);
  auto lab = to_labelling(doc, p);
  REQUIRE(lab.has_value());
  CHECK(is_interpolating(*lab).verdict);
  Chain m = to_chain(doc, *p, "M");
  CHECK(m.length() == 2);
  CHECK_THROWS_AS(to_chain(doc, *p, "N"), ValidationError);
}

TEST_CASE("document errors") {
  try {
    parse_poset_document("{\n  \"name\": \"x\",\n  \"elements\": [\"a\",, ]\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 1);
  }
  CHECK_THROWS_AS(parse_poset_document(R"({"name": "x", "elements": [], "covers": [], "extra": 1})"),
                  ParseError);
  CHECK_THROWS_AS(parse_poset_document(R"({"name": "x", "elements": ["a"], "covers": [["a"]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_poset_document("[]"), ParseError);

  PosetDocument cyclic = parse_poset_document(
      R"({"name": "x", "elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]})");
  CHECK_THROWS_AS(to_poset(cyclic), ValidationError);

  PosetDocument off_edge = parse_poset_document(
      R"({"name": "x", "elements": ["a", "b"], "covers": [["a", "b"]], "labels": {"b->a": 1}})");
  CHECK_THROWS_AS(to_labelling(off_edge, share(to_poset(off_edge))), ValidationError);

  PosetDocument missing = parse_poset_document(
      R"({"name": "x", "elements": ["a", "b", "c"], "covers": [["a", "b"], ["b", "c"]], "labels": {"a->b": 1}})");
  CHECK_THROWS_AS(to_labelling(missing, share(to_poset(missing))), ValidationError);
}

TEST_CASE("document round trip on random posets") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> label(-5, 9);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = share(fixtures::random_poset(rng, 1 + trial % 10, 0.3));
    std::vector<int> labels(p->edges().size());
    for (int& l : labels) l = label(rng);
    EdgeLabelling lab(p, labels);
    std::map<std::string, Chain> chains;
    if (!p->edges().empty()) {
      const auto& [a, b] = p->edges()[rng() % p->edges().size()];
      chains.emplace("edge", Chain{{a, b}});
    }
    PosetDocument doc = make_document("random-" + std::to_string(trial), *p,
                                      trial % 3 == 0 ? nullptr : &lab, chains);
    std::string text = serialize_poset_document(doc);
    PosetDocument back = parse_poset_document(text);
    CHECK(back == doc);
    CHECK(serialize_poset_document(back) == text);
    auto q = share(to_poset(back));
    CHECK(*q == *p);
    if (trial % 3 != 0) CHECK(to_labelling(back, q)->labels().size() == labels.size());
  }
}

TEST_CASE("serialization is one sorted key per line") {
  std::string text = serialize_poset_document(parse_poset_document(kDiamond));
  CHECK(text.find("\"chains\"") < text.find("\"covers\""));
  CHECK(text.find("\"covers\"") < text.find("\"elements\""));
  CHECK(text.find("\"labels\"") < text.find("\"name\""));
  CHECK(count(text, "\n") == 7);
}

TEST_CASE("DOT export") {
  Poset single = build_poset({"x"}, {});
  std::string s = export_dot(single);
  CHECK(count(s, "->") == 0);
  CHECK(count(s, "\"x\"") == 1);

  Poset d = fixtures::diamond();
  std::string dd = export_dot(d);
  CHECK(count(dd, "->") == 4);
  CHECK(count(dd, "rank=same") == 3);
  CHECK(dd == export_dot(d));

  PartitionFamily ns4 = nonstraddling_lattice(4);
  std::string text = export_dot(*ns4.poset, &ns4.labelling, "NS4");
  CHECK(count(text, "[label=") == 28);
  CHECK(count(text, "rankdir=BT") == 1);
  std::size_t nodes = 0;
  for (const std::string& name : ns4.poset->names()) nodes += count(text, "\"" + name + "\";");
  CHECK(nodes == 14);
  CHECK(text == export_dot(*nonstraddling_lattice(4).poset, &ns4.labelling, "NS4"));
}

TEST_CASE("bounded poset enumeration counts") {
  // Oracle: cumulative (total, graded) over sizes 2..max.
  const std::pair<std::size_t, std::size_t> expected[] = {{1, 1}, {2, 2}, {4, 4}, {9, 8}, {25, 18}, {88, 46}};
  for (std::size_t max = 2; max <= 7; ++max) {
    CHECK(enumerate_bounded_posets(max, false).size() == expected[max - 2].first);
    CHECK(enumerate_bounded_posets(max, true).size() == expected[max - 2].second);
  }
  auto two = enumerate_bounded_posets(2, false);
  REQUIRE(two.size() == 1);
  CHECK(two.front().size() == 2);
  for (const Poset& p : enumerate_bounded_posets(3, true)) CHECK(graded_rank(p) == p.size() - 1);
  CHECK_THROWS_AS(enumerate_bounded_posets(8, false), SizeLimit);

  const std::size_t posets[] = {1, 2, 5, 16};
  for (std::size_t m = 1; m <= 4; ++m) CHECK(enumerate_posets(m).size() == posets[m - 1]);
}

TEST_CASE("enumeration is free of isomorphic duplicates") {
  auto all = enumerate_bounded_posets(6, false);
  std::set<std::string> forms;
  for (const Poset& p : all) forms.insert(canonical_form(p));
  CHECK(forms.size() == all.size());
  CHECK(are_isomorphic(fixtures::diamond(), bounded_antichain(2)));
  CHECK_FALSE(are_isomorphic(fixtures::diamond(), fixtures::pentagon()));
}

TEST_CASE("labelling search") {
  auto b2 = share(fixtures::diamond());
  auto found = search_sn_el_labelling(b2);
  REQUIRE(found.has_value());
  CHECK(is_sn_el_labelling(*found).verdict);
  CHECK_FALSE(search_sn_el_labelling(share(fixtures::bounded_bowtie())).has_value());
  CHECK_FALSE(search_sn_el_labelling(share(fixtures::pentagon())).has_value());

  GradedVerdicts v = graded_verdicts(share(fixtures::bounded_bowtie()));
  CHECK_FALSE(v.sn_el);
  CHECK_FALSE(v.left_modular);
  CHECK_FALSE(v.supersolvable);
  GradedVerdicts w = graded_verdicts(partition_lattice(3).poset);
  CHECK(w.sn_el);
  CHECK(w.sn_el_by_search);
  CHECK(w.left_modular);
  CHECK(w.supersolvable);
}

TEST_CASE("verification report") {
  VerificationReport r = verify_theorems(VerifyScope::preset("tamari"));
  CHECK(r.passed());
  CHECK(r.failures() == 0);
  for (std::size_t i = 1; i < r.results.size(); ++i) {
    CHECK(std::tie(r.results[i - 1].subject, r.results[i - 1].claim) <
          std::tie(r.results[i].subject, r.results[i].claim));
  }
  auto json = nlohmann::json::parse(r.to_json());
  CHECK(json["passed"] == true);
  CHECK(json["claims"].size() == r.results.size());
  CHECK(r.to_json() == verify_theorems(VerifyScope::preset("tamari")).to_json());

  CHECK_THROWS_AS(VerifyScope::preset("everything"), std::invalid_argument);
  VerifyScope big;
  big.ns_max = 9;
  CHECK_THROWS_AS(verify_theorems(big), SizeLimit);
}

TEST_CASE("failures carry a replayable counterexample") {
  PartitionFamily pi3 = partition_lattice(3);
  std::vector<int> labels(pi3.labelling.labels().begin(), pi3.labelling.labels().end());
  for (int& l : labels) l = 1;
  Subject broken{"Pi3-flat", LabelledFamily{pi3.poset, EdgeLabelling(pi3.poset, labels), pi3.increasing}};

  ClaimResult r = claim_el(broken);
  CHECK_FALSE(r.passed);
  REQUIRE(r.counterexample.has_value());
  PosetDocument doc = parse_poset_document(serialize_poset_document(*r.counterexample));
  auto p = share(to_poset(doc));
  CHECK_FALSE(is_el_labelling(*to_labelling(doc, p)).verdict);

  // Change one label off the increasing chain.
  std::vector<int> shifted(pi3.labelling.labels().begin(), pi3.labelling.labels().end());
  const Poset& pp = *pi3.poset;
  shifted[*pp.edge_index(pp.id("1/2/3"), pp.id("1,3/2"))] = 5;
  Subject off{"Pi3-off", LabelledFamily{pi3.poset, EdgeLabelling(pi3.poset, shifted), pi3.increasing}};
  ClaimResult u = claim_labelling_uniqueness(off);
  CHECK_FALSE(u.passed);
  REQUIRE(u.counterexample.has_value());
  PosetDocument udoc = *u.counterexample;
  auto up = share(to_poset(udoc));
  EdgeLabelling stored = *to_labelling(udoc, up);
  Chain m = to_chain(udoc, *up, "M");
  CHECK_FALSE(induce_labelling(up, m, LabelSet(stored.word(m))) == stored);
}
