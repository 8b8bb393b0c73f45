#include "posetlab/theorems.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "posetlab/enumerate.hpp"
#include "posetlab/order_ops.hpp"
#include "posetlab/supersolvability.hpp"

namespace posetlab {
namespace {

class Tally {
 public:
  Tally(std::string claim, std::string subject) {
    result_.claim = std::move(claim);
    result_.subject = std::move(subject);
  }

  bool expect(bool ok) {
    ++result_.checks;
    return ok;
  }

  void fail(std::string detail, std::optional<PosetDocument> doc = std::nullopt) {
    if (!result_.passed) return;
    result_.passed = false;
    result_.detail = std::move(detail);
    result_.counterexample = std::move(doc);
  }

  bool failed() const { return !result_.passed; }

  ClaimResult done(std::string detail = {}) {
    if (result_.passed) result_.detail = std::move(detail);
    return std::move(result_);
  }

 private:
  ClaimResult result_;
};

PosetDocument document(const Subject& s, const std::map<std::string, Chain>& chains = {}) {
  std::map<std::string, Chain> all = chains;
  all.emplace("M", s.family.increasing);
  return make_document(s.name, *s.family.poset, &s.family.labelling, all);
}

PosetDocument document(const std::string& name, const EdgeLabelling& lab,
                       const std::map<std::string, Chain>& chains = {}) {
  return make_document(name, lab.poset(), &lab, chains);
}

std::string names_of(const Poset& p, std::span<const ElementId> ids) {
  std::string out;
  for (ElementId u : ids) {
    if (!out.empty()) out += ", ";
    out += p.name(u);
  }
  return out;
}

// Calls f(y, z) for every y < z.
void for_each_strict_pair(const Poset& p, const std::function<void(ElementId, ElementId)>& f) {
  for (ElementId y = 0; y < p.size(); ++y) {
    const ElementSet& up = p.up_set(y);
    for (auto z = up.find_first(); z != ElementSet::npos; z = up.find_next(z)) {
      if (z != y) f(y, static_cast<ElementId>(z));
    }
  }
}

Chain deduplicated(const std::vector<ElementId>& sequence) {
  Chain out;
  for (ElementId u : sequence) {
    if (out.nodes.empty() || out.nodes.back() != u) out.nodes.push_back(u);
  }
  return out;
}

bool is_lattice(const Poset& p) {
  for (ElementId a = 0; a < p.size(); ++a) {
    for (ElementId b = a + 1; b < p.size(); ++b) {
      if (!join(p, a, b) || !meet(p, a, b)) return false;
    }
  }
  return true;
}

std::size_t position(const std::vector<ElementId>& sorted, ElementId u) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), u) - sorted.begin());
}

bool is_graded_subject(const Subject& s) { return graded_rank(*s.family.poset).has_value(); }

std::string ratio(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

}  // namespace

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const ClaimResult& r) { return !r.passed; }));
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json root;
  root["passed"] = passed();
  nlohmann::ordered_json claims = nlohmann::ordered_json::array();
  for (const ClaimResult& r : results) {
    nlohmann::ordered_json item;
    item["claim"] = r.claim;
    item["subject"] = r.subject;
    item["passed"] = r.passed;
    item["checks"] = r.checks;
    item["detail"] = r.detail;
    if (r.counterexample) {
      item["counterexample"] = nlohmann::ordered_json::parse(serialize_poset_document(*r.counterexample));
    }
    claims.push_back(std::move(item));
  }
  root["claims"] = std::move(claims);
  return root.dump(2) + "\n";
}

VerifyScope VerifyScope::preset(const std::string& name) {
  VerifyScope none;
  none.partition_max = 0;
  none.noncrossing_max = 0;
  none.ns_max = 0;
  none.tamari.clear();
  none.ideal_ground_max = 0;
  none.graded_universe_max = 0;

  VerifyScope s = none;
  if (name == "ns") {
    s.ns_max = 5;
  } else if (name == "ns-slow") {
    s.ns_max = 6;
  } else if (name == "partitions") {
    s.partition_max = 4;
    s.noncrossing_max = 4;
  } else if (name == "tamari") {
    s.tamari = {3, 4};
  } else if (name == "ideals") {
    s.ideal_ground_max = 4;
  } else if (name == "graded") {
    s.graded_universe_max = 6;
  } else if (name == "families") {
    s = VerifyScope{};
    s.graded_universe_max = 0;
  } else if (name == "all") {
    s = VerifyScope{};
  } else {
    throw std::invalid_argument("unknown scope '" + name + "'");
  }
  return s;
}

std::vector<std::string> VerifyScope::preset_names() {
  return {"all", "families", "graded", "ideals", "ns", "ns-slow", "partitions", "tamari"};
}

Subject partition_subject(int n) { return {"Pi" + std::to_string(n), partition_lattice(n)}; }
Subject noncrossing_subject(int n) { return {"NC" + std::to_string(n), noncrossing_lattice(n)}; }
Subject nonstraddling_subject(int n) { return {"NS" + std::to_string(n), nonstraddling_lattice(n)}; }

Subject ideal_subject(const Poset& q, const std::string& name) {
  return {name, ideal_lattice(q, natural_linear_extension(q))};
}

Subject tamari_subject(int n) {
  TamariFamily t = tamari_lattice(n);
  std::vector<Chain> chains = find_left_modular_chains(*t.poset);
  if (chains.empty()) throw NotLeftModular("T" + std::to_string(n) + " has no left modular chain");
  const Chain& m = chains.front();
  EdgeLabelling lab = induce_labelling(t.poset, m, LabelSet::standard(m.length()));
  return {"T" + std::to_string(n), LabelledFamily{t.poset, lab, m}};
}

ClaimResult claim_el(const Subject& s) {
  Tally t("el", s.name);
  CheckReport r = is_el_labelling(s.family.labelling);
  if (!t.expect(r.verdict)) {
    std::map<std::string, Chain> chains;
    if (r.witness) {
      for (std::size_t i = 0; i < r.witness->chains.size(); ++i) {
        chains.emplace("witness-" + std::to_string(i), r.witness->chains[i]);
      }
    }
    t.fail(r.note, document(s, chains));
  }
  return t.done();
}

ClaimResult claim_interpolating(const Subject& s) {
  Tally t("interpolating", s.name);
  CheckReport r = is_interpolating(s.family.labelling);
  if (!t.expect(r.verdict)) {
    std::map<std::string, Chain> chains;
    if (r.witness) {
      for (std::size_t i = 0; i < r.witness->chains.size(); ++i) {
        chains.emplace("witness-" + std::to_string(i), r.witness->chains[i]);
      }
    }
    t.fail(r.note, document(s, chains));
  }
  return t.done();
}

ClaimResult claim_increasing_chain(const Subject& s) {
  Tally t("increasing-chain", s.name);
  const Poset& p = *s.family.poset;
  auto inc = increasing_chain(s.family.labelling, p.require_bottom(), p.require_top());
  if (!t.expect(inc && *inc == s.family.increasing)) {
    t.fail("increasing maximal chain is " + (inc ? to_string(p, *inc) : std::string("missing")) +
               ", expected " + to_string(p, s.family.increasing),
           document(s));
  }
  return t.done(to_string(p, s.family.increasing));
}

ClaimResult claim_increasing_chain_left_modular(const Subject& s) {
  Tally t("increasing-chain-left-modular", s.name);
  const Poset& p = *s.family.poset;
  for (ElementId x : s.family.increasing.nodes) {
    ElementCheck c = is_left_modular_element(p, x);
    if (!t.expect(c.report.verdict)) {
      std::string detail = p.name(x) + " is not left modular";
      if (c.failure) {
        detail += " (" + std::string(to_string(c.failure->kind)) + " at y=" + p.name(c.failure->y) +
                  ", z=" + p.name(c.failure->z) + ")";
      }
      t.fail(detail, document(s));
    }
  }
  return t.done();
}

ClaimResult claim_induced_labellings(const Subject& s) {
  Tally t("induced-labellings", s.name);
  const Poset& p = *s.family.poset;
  std::vector<Chain> chains = find_left_modular_chains(p);
  if (!t.expect(!chains.empty())) t.fail("no left modular maximal chain found", document(s));
  for (const Chain& m : chains) {
    EdgeLabelling lab = induce_labelling(s.family.poset, m, LabelSet::standard(m.length()));
    CheckReport r = is_interpolating(lab);
    if (!t.expect(r.verdict)) {
      t.fail("labelling induced by " + to_string(p, m) + " is not interpolating: " + r.note,
             document(s.name, lab, {{"M", m}}));
      continue;
    }
    auto inc = increasing_chain(lab, p.require_bottom(), p.require_top());
    if (!t.expect(inc && *inc == m)) {
      t.fail("labelling induced by " + to_string(p, m) + " does not make it increasing",
             document(s.name, lab, {{"M", m}}));
    }
  }
  return t.done(std::to_string(chains.size()) + " left modular chains");
}

ClaimResult claim_labelling_uniqueness(const Subject& s) {
  Tally t("labelling-uniqueness", s.name);
  const Poset& p = *s.family.poset;
  const Chain& m = s.family.increasing;
  EdgeLabelling again =
      induce_labelling(s.family.poset, m, LabelSet(s.family.labelling.word(m)));
  for (std::size_t e = 0; e < p.edges().size(); ++e) {
    if (!t.expect(again.at(e) == s.family.labelling.at(e))) {
      const auto& [a, b] = p.edges()[e];
      t.fail("re-induced label on " + edge_key(p.name(a), p.name(b)) + " is " +
                 std::to_string(again.at(e)) + ", expected " + std::to_string(s.family.labelling.at(e)),
             document(s));
    }
  }
  return t.done();
}

ClaimResult claim_cover_index_agreement(const Subject& s) {
  Tally t("cover-index-agreement", s.name);
  const Poset& p = *s.family.poset;
  std::vector<Chain> chains = find_left_modular_chains(p);
  for (const Chain& m : chains) {
    for (const auto& [y, z] : p.edges()) {
      CoverIndex idx = cover_label_index(p, m, y, z);
      if (!t.expect(idx.consistent())) {
        auto show = [](const std::optional<std::size_t>& v) {
          return v ? std::to_string(*v) : std::string("undefined");
        };
        t.fail("cover " + edge_key(p.name(y), p.name(z)) + " under " + to_string(p, m) +
                   ": definition " + show(idx.by_definition) + ", join " + show(idx.by_join) +
                   ", meet " + show(idx.by_meet),
               make_document(s.name, p, nullptr, {{"M", m}}));
      }
    }
  }
  return t.done(std::to_string(chains.size()) + " chains");
}

ClaimResult claim_chain_labels(const Subject& s) {
  Tally t("chain-labels", s.name);
  const Poset& p = *s.family.poset;
  const EdgeLabelling& lab = s.family.labelling;
  for_each_strict_pair(p, [&](ElementId y, ElementId z) {
    if (t.failed()) return;
    auto inc = increasing_chain(lab, y, z);
    if (!inc) {
      t.fail("no increasing chain from " + p.name(y) + " to " + p.name(z), document(s));
      return;
    }
    std::vector<int> inc_word = lab.word(*inc);
    std::set<int> inc_labels(inc_word.begin(), inc_word.end());
    for_each_maximal_chain(p, y, z, [&](const Chain& m) {
      std::vector<int> word = lab.word(m);
      std::set<int> labels(word.begin(), word.end());
      auto [lo, hi] = std::minmax_element(word.begin(), word.end());
      bool ok = labels.size() == word.size() &&
                std::includes(inc_labels.begin(), inc_labels.end(), labels.begin(), labels.end()) &&
                *inc_labels.begin() >= *lo && *inc_labels.rbegin() <= *hi;
      if (!t.expect(ok)) {
        t.fail("labels on " + to_string(p, m) + " are not distinct labels of the increasing chain",
               document(s, {{"witness", m}}));
        return false;
      }
      return true;
    });
  });
  return t.done();
}

ClaimResult claim_below_chain_labels(const Subject& s) {
  Tally t("below-chain-labels", s.name);
  const Poset& p = *s.family.poset;
  const EdgeLabelling& lab = s.family.labelling;
  const Chain& m = s.family.increasing;
  const std::vector<int> word = lab.word(m);
  const auto& topo = p.linear_extension();

  for (std::size_t i = 0; i <= word.size(); ++i) {
    // Below x_i: labels from the first i; above x_i: labels from the rest.
    const std::set<int> low(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
    const std::set<int> high(word.begin() + static_cast<std::ptrdiff_t>(i), word.end());
    const ElementId xi = m.nodes[i];

    std::vector<char> some(p.size(), 0), all(p.size(), 1);
    some[p.require_bottom()] = 1;
    for (ElementId z : topo) {
      if (z == p.require_bottom()) continue;
      bool s_any = false, s_all = true;
      for (ElementId w : p.lower_covers(z)) {
        bool in = low.count(lab(w, z)) > 0;
        s_any = s_any || (some[w] && in);
        s_all = s_all && all[w] && in;
      }
      some[z] = s_any;
      all[z] = s_all;
    }
    std::vector<char> some_up(p.size(), 0), all_up(p.size(), 1);
    some_up[p.require_top()] = 1;
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      ElementId z = *it;
      if (z == p.require_top()) continue;
      bool s_any = false, s_all = true;
      for (ElementId w : p.upper_covers(z)) {
        bool in = high.count(lab(z, w)) > 0;
        s_any = s_any || (some_up[w] && in);
        s_all = s_all && all_up[w] && in;
      }
      some_up[z] = s_any;
      all_up[z] = s_all;
    }

    for (ElementId z = 0; z < p.size(); ++z) {
      bool below = p.leq(z, xi);
      if (!t.expect(below ? static_cast<bool>(all[z]) : !some[z])) {
        t.fail(p.name(z) + (below ? " is below " : " is not below ") + p.name(xi) +
                   " but its chains from the bottom disagree",
               document(s));
      }
      bool above = p.leq(xi, z);
      if (!t.expect(above ? static_cast<bool>(all_up[z]) : !some_up[z])) {
        t.fail(p.name(z) + (above ? " is above " : " is not above ") + p.name(xi) +
                   " but its chains to the top disagree",
               document(s));
      }
    }
  }
  return t.done();
}

ClaimResult claim_meet_chain(const Subject& s) {
  Tally t("meet-chain", s.name);
  const Poset& p = *s.family.poset;
  const EdgeLabelling& lab = s.family.labelling;
  const Chain& m = s.family.increasing;
  for (ElementId z = 0; z < p.size(); ++z) {
    std::vector<ElementId> meets, joins;
    bool defined = true;
    for (ElementId x : m.nodes) {
      auto lo = meet(p, x, z);
      auto hi = join(p, x, z);
      if (!lo || !hi) {
        defined = false;
        break;
      }
      meets.push_back(*lo);
      joins.push_back(*hi);
    }
    if (!t.expect(defined)) {
      t.fail("meet or join of " + p.name(z) + " with a chain element is undefined", document(s));
      continue;
    }
    auto down = increasing_chain(lab, p.require_bottom(), z);
    if (!t.expect(down && deduplicated(meets) == *down)) {
      t.fail("meets with " + p.name(z) + " give " + to_string(p, deduplicated(meets)),
             document(s, {{"witness", deduplicated(meets)}}));
    }
    auto up = increasing_chain(lab, z, p.require_top());
    if (!t.expect(up && deduplicated(joins) == *up)) {
      t.fail("joins with " + p.name(z) + " give " + to_string(p, deduplicated(joins)),
             document(s, {{"witness", deduplicated(joins)}}));
    }
  }
  return t.done();
}

ClaimResult claim_induced_interval_chain(const Subject& s) {
  Tally t("induced-interval-chain", s.name);
  const Poset& p = *s.family.poset;
  const Chain& m = s.family.increasing;
  for_each_strict_pair(p, [&](ElementId y, ElementId z) {
    InducedChain ic = induced_interval_chain(p, m, y, z);
    if (!t.expect(ic.chain.front() == y && ic.chain.back() == z && is_unrefinable(p, ic.chain))) {
      t.fail("induced chain of [" + p.name(y) + ", " + p.name(z) + "] is " + to_string(p, ic.chain),
             document(s, {{"witness", ic.chain}}));
      return;
    }
    std::vector<ElementId> elems = interval_elements(p, y, z);
    Poset sub = induced_subposet(p, elems);
    for (ElementId u : ic.chain.nodes) {
      if (!t.expect(is_left_modular_element(sub, static_cast<ElementId>(position(elems, u))).report.verdict)) {
        t.fail(p.name(u) + " is not left modular in [" + p.name(y) + ", " + p.name(z) + "]",
               document(s, {{"witness", ic.chain}}));
      }
    }
    auto inc = increasing_chain(s.family.labelling, y, z);
    if (!t.expect(inc && *inc == ic.chain)) {
      t.fail("induced chain of [" + p.name(y) + ", " + p.name(z) + "] is not its increasing chain",
             document(s, {{"witness", ic.chain}}));
    }
  });
  return t.done();
}

ClaimResult claim_interval_restriction(const Subject& s) {
  Tally t("interval-restriction", s.name);
  const PosetPtr& ptr = s.family.poset;
  const Poset& p = *ptr;
  const EdgeLabelling& lab = s.family.labelling;
  const Chain& m = s.family.increasing;
  const std::vector<int> word = lab.word(m);
  for_each_strict_pair(p, [&](ElementId y, ElementId z) {
    if (t.failed()) return;
    InducedChain ic = induced_interval_chain(p, m, y, z);
    std::vector<int> labels;
    for (std::size_t c : ic.jumps) labels.push_back(word.at(c - 1));
    std::vector<ElementId> elems = interval_elements(p, y, z);
    auto sub = std::make_shared<const Poset>(induced_subposet(p, elems));
    Chain local;
    for (ElementId u : ic.chain.nodes) local.nodes.push_back(static_cast<ElementId>(position(elems, u)));
    EdgeLabelling restricted = induce_labelling(sub, local, LabelSet(labels));
    for (const auto& [a, b] : sub->edges()) {
      if (!t.expect(restricted(a, b) == lab(elems[a], elems[b]))) {
        t.fail("on [" + p.name(y) + ", " + p.name(z) + "] the induced label of " +
                   edge_key(p.name(elems[a]), p.name(elems[b])) + " is " +
                   std::to_string(restricted(a, b)),
               document(s, {{"witness", ic.chain}}));
        return;
      }
    }
  });
  return t.done();
}

ClaimResult claim_cover_steps(const Subject& s) {
  Tally t("cover-steps", s.name);
  const Poset& p = *s.family.poset;
  auto covers_or_equal = [&](ElementId a, ElementId b) { return a == b || p.covers(a, b); };
  std::map<ElementId, bool> viable;
  auto is_viable = [&](ElementId w) {
    auto it = viable.find(w);
    if (it == viable.end()) it = viable.emplace(w, is_viable_element(p, w).report.verdict).first;
    return it->second;
  };
  for (ElementId x : s.family.increasing.nodes) {
    for (ElementId w : p.upper_covers(x)) {
      if (!is_viable(w)) continue;
      for (ElementId z = 0; z < p.size(); ++z) {
        auto a = meet(p, x, z);
        auto b = meet(p, w, z);
        if (!t.expect(a && b && covers_or_equal(*a, *b))) {
          t.fail("meets of " + p.name(x) + " and its cover " + p.name(w) + " with " + p.name(z) +
                     " are not equal or a cover",
                 document(s));
        }
      }
    }
    for (ElementId w : p.lower_covers(x)) {
      if (!is_viable(w)) continue;
      for (ElementId y = 0; y < p.size(); ++y) {
        auto a = join(p, w, y);
        auto b = join(p, x, y);
        if (!t.expect(a && b && covers_or_equal(*a, *b))) {
          t.fail("joins of " + p.name(w) + " and " + p.name(x) + " with " + p.name(y) +
                     " are not equal or a cover",
                 document(s));
        }
      }
    }
  }
  return t.done();
}

ClaimResult claim_modular_inequality(const Subject& s) {
  Tally t("modular-inequality", s.name);
  const Poset& p = *s.family.poset;
  if (!is_lattice(p)) return t.done("skipped: not a lattice");
  for (ElementId x = 0; x < p.size(); ++x) {
    for_each_strict_pair(p, [&](ElementId y, ElementId z) {
      ElementId xy = *join(p, x, y);
      ElementId xz = *meet(p, x, z);
      auto lhs = rel_meet(p, y, xy, z);
      auto rhs = rel_join(p, z, xz, y);
      if (!t.expect(lhs && rhs && p.leq(*rhs, *lhs))) {
        t.fail("x=" + p.name(x) + ", y=" + p.name(y) + ", z=" + p.name(z) +
                   ": lower expression is not below the upper one",
               document(s));
      }
    });
  }
  return t.done();
}

ClaimResult claim_basic_replacement(const Subject& s) {
  Tally t("basic-replacement", s.name);
  const Poset& p = *s.family.poset;
  const EdgeLabelling& lab = s.family.labelling;
  for_each_strict_pair(p, [&](ElementId y, ElementId z) {
    if (t.failed()) return;
    auto inc = increasing_chain(lab, y, z);
    for_each_maximal_chain(p, y, z, [&](const Chain& m) {
      ReplacementResult r = basic_replacement_reduce(lab, m);
      if (!t.expect(inc && r.chain == *inc)) {
        t.fail("basic replacements take " + to_string(p, m) + " to " + to_string(p, r.chain),
               document(s, {{"witness", m}}));
        return false;
      }
      return true;
    });
  });
  return t.done();
}

ClaimResult claim_sn_el(const Subject& s) {
  Tally t("sn-el", s.name);
  std::vector<int> word = s.family.labelling.word(s.family.increasing);
  if (word.empty()) return t.done("skipped: rank 0");
  EdgeLabelling lab = s.family.labelling.shifted(1 - word.front());
  CheckReport r = is_sn_el_labelling(lab);
  if (!t.expect(r.verdict)) {
    t.fail("shifted labelling is not S_n EL: " + r.note,
           document(s.name, lab, {{"M", s.family.increasing}}));
  }
  return t.done();
}

ClaimResult claim_closure_identity(const Subject& s) {
  Tally t("closure-identity", s.name);
  const Poset& p = *s.family.poset;
  const EdgeLabelling& lab = s.family.labelling;
  const Chain& m_chain = s.family.increasing;
  std::size_t count = 0;
  for_each_maximal_chain(p, p.require_bottom(), p.require_top(), [&](const Chain& c) {
    ++count;
    ClosureResult r = r_closure(p, m_chain, c);
    Chain m = increasing_extension(lab, c);
    ClosureResult q = q_closure(lab, m_chain, m);
    if (!t.expect(r.elements == q.elements)) {
      t.fail("closures of " + to_string(p, c) + " differ: {" + names_of(p, r.elements) + "} vs {" +
                 names_of(p, q.elements) + "}",
             document(s, {{"witness", c}}));
      return false;
    }
    if (!t.expect(is_distributive_lattice(r.subposet).verdict &&
                  is_distributive_lattice(q.subposet).verdict)) {
      t.fail("closure of " + to_string(p, c) + " is not distributive", document(s, {{"witness", c}}));
      return false;
    }
    // Joins and meets with chain elements are the same inside the closure.
    const Poset& sub = r.subposet;
    for (ElementId x : m_chain.nodes) {
      ElementId xl = static_cast<ElementId>(position(r.elements, x));
      for (ElementId yl = 0; yl < sub.size(); ++yl) {
        ElementId y = r.elements[yl];
        auto big_join = join(p, x, y);
        auto small_join = join(sub, xl, yl);
        auto big_meet = meet(p, x, y);
        auto small_meet = meet(sub, xl, yl);
        bool ok = big_join && small_join && *big_join == r.elements[*small_join] && big_meet &&
                  small_meet && *big_meet == r.elements[*small_meet];
        if (!t.expect(ok)) {
          t.fail("join or meet of " + p.name(x) + " and " + p.name(y) + " differs inside the closure of " +
                     to_string(p, c),
                 document(s, {{"witness", c}}));
          return false;
        }
      }
    }
    return true;
  });
  return t.done(std::to_string(count) + " maximal chains");
}

ClaimResult claim_q_closure_data(const Subject& s) {
  Tally t("q-closure-lattice-data", s.name);
  const Poset& p = *s.family.poset;
  std::size_t chains = 0, lattices = 0, distributive = 0;
  for_each_maximal_chain(p, p.require_bottom(), p.require_top(), [&](const Chain& m) {
    ClosureResult q = q_closure(s.family.labelling, s.family.increasing, m);
    t.expect(true);
    ++chains;
    if (is_lattice(q.subposet)) ++lattices;
    if (is_distributive_lattice(q.subposet).verdict) ++distributive;
    return true;
  });
  return t.done("lattice for " + ratio(lattices, chains) + " maximal chains, distributive for " +
                ratio(distributive, chains));
}

ClaimResult claim_supersolvable(const Subject& s) {
  Tally t("supersolvable-iff-graded", s.name);
  const Poset& p = *s.family.poset;
  bool graded = graded_rank(p).has_value();
  CheckReport r = is_supersolvable(p);
  if (!t.expect(r.verdict == graded)) {
    t.fail(std::string(graded ? "graded" : "ungraded") + " but supersolvable is " +
               (r.verdict ? "true" : "false"),
           make_document(s.name, p));
  }
  return t.done(graded ? "supersolvable" : "not supersolvable");
}

ClaimResult claim_gamma_definitions(const PartitionFamily& f, const std::string& name) {
  Tally t("gamma-definitions", name);
  const Poset& p = *f.poset;
  for (const auto& [a, b] : p.edges()) {
    const SetPartition& y = f.partitions[a];
    const SetPartition& z = f.partitions[b];
    int g1 = gamma_second_smallest(y, z);
    int g2 = gamma_lost_minimum(y, z);
    int g3 = gamma_interval_minimum(y, z);
    if (!t.expect(g1 == g2 && g2 == g3 && g1 == f.labelling(a, b))) {
      t.fail(edge_key(p.name(a), p.name(b)) + ": " + std::to_string(g1) + ", " + std::to_string(g2) +
                 ", " + std::to_string(g3),
             make_document(name, p, &f.labelling));
    }
  }
  return t.done();
}

ClaimResult claim_two_block_delta(const PartitionFamily& f, const std::string& name) {
  Tally t("two-block-delta", name);
  const Poset& p = *f.poset;
  std::size_t edges = 0;
  for (const auto& [a, b] : p.edges()) {
    const SetPartition& y = f.partitions[a];
    const SetPartition& z = f.partitions[b];
    if (merged_blocks(y, z).size() != 2) continue;
    ++edges;
    if (!t.expect(delta_label(y, z) == f.labelling(a, b))) {
      t.fail(edge_key(p.name(a), p.name(b)) + " merges two blocks but its label differs from delta",
             make_document(name, p, &f.labelling));
    }
  }
  return t.done(std::to_string(edges) + " two-block edges");
}

ClaimResult claim_first_label(const PartitionFamily& f, const std::string& name) {
  Tally t("first-label", name);
  const Poset& p = *f.poset;
  for_each_strict_pair(p, [&](ElementId y, ElementId z) {
    if (t.failed()) return;
    int first = gamma_interval_minimum(f.partitions[y], f.partitions[z]);
    std::size_t edges = 0;
    for (ElementId w : p.upper_covers(y)) {
      if (p.leq(w, z) && f.labelling(y, w) == first) ++edges;
    }
    if (!t.expect(edges == 1)) {
      t.fail("[" + p.name(y) + ", " + p.name(z) + "] has " + std::to_string(edges) +
                 " bottom edges labelled " + std::to_string(first),
             make_document(name, p, &f.labelling));
      return;
    }
    for_each_maximal_chain(p, y, z, [&](const Chain& m) {
      std::vector<int> word = f.labelling.word(m);
      if (!t.expect(std::find(word.begin(), word.end(), first) != word.end())) {
        t.fail(to_string(p, m) + " avoids label " + std::to_string(first),
               make_document(name, p, &f.labelling, {{"witness", m}}));
        return false;
      }
      return true;
    });
  });
  return t.done();
}

ClaimResult claim_ns_meets(const PartitionFamily& f, const std::string& name) {
  Tally t("ns-meets", name);
  const Poset& p = *f.poset;
  for (ElementId a = 0; a < p.size(); ++a) {
    for (ElementId b = a; b < p.size(); ++b) {
      SetPartition m = pi_meet(f.partitions[a], f.partitions[b]);
      auto in_poset = meet(p, a, b);
      if (!t.expect(f.partitions.contains(m) && in_poset && f.partitions.id_of(m) == *in_poset)) {
        t.fail("meet of " + p.name(a) + " and " + p.name(b) + " is not the partition meet",
               make_document(name, p));
      }
    }
  }
  return t.done();
}

ClaimResult claim_ns_joins(const PartitionFamily& f, const std::string& name) {
  Tally t("ns-joins", name);
  const Poset& p = *f.poset;
  const auto& objects = f.partitions.objects();
  for (ElementId a = 0; a < p.size(); ++a) {
    for (ElementId b = a; b < p.size(); ++b) {
      const SetPartition& x = objects[a];
      const SetPartition& y = objects[b];
      // Brute force: the upper bound with the most blocks, checked to be least.
      std::vector<ElementId> bounds;
      for (ElementId u = 0; u < objects.size(); ++u) {
        if (x.refines(objects[u]) && y.refines(objects[u])) bounds.push_back(u);
      }
      ElementId least = *std::max_element(bounds.begin(), bounds.end(), [&](ElementId l, ElementId r) {
        return objects[l].block_count() < objects[r].block_count();
      });
      bool is_least = std::all_of(bounds.begin(), bounds.end(),
                                  [&](ElementId u) { return objects[least].refines(objects[u]); });
      SetPartition closure = ns_join_closure(x, y);
      auto in_poset = join(p, a, b);
      if (!t.expect(is_least && closure == objects[least] && in_poset && *in_poset == least)) {
        t.fail("join of " + p.name(a) + " and " + p.name(b) + ": closure gives " + closure.to_string() +
                   ", least upper bound is " + objects[least].to_string(),
               make_document(name, p));
      }
    }
  }
  return t.done();
}

ClaimResult claim_forced_merging(const PartitionFamily& f, const std::string& name) {
  Tally t("forced-merging", name);
  for (const SetPartition& y : f.partitions.objects()) {
    const std::vector<int> minima = y.block_minima();
    const std::size_t k = minima.size();
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      if (std::popcount(mask) < 2) continue;
      std::vector<int> chosen;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (1u << i)) chosen.push_back(minima[i]);
      }
      const SetPartition all = ns_merge(y, chosen);
      const int first_two[2] = {chosen[0], chosen[1]};
      if (ns_merge(y, first_two) != all) continue;
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        for (std::size_t j = i + 1; j < chosen.size(); ++j) {
          const int pair[2] = {chosen[i], chosen[j]};
          if (!t.expect(ns_merge(y, pair) == all)) {
            t.fail("in " + y.to_string() + " merging blocks " + std::to_string(chosen[i]) + " and " +
                       std::to_string(chosen[j]) + " does not force " + all.to_string(),
                   make_document(name, *f.poset));
          }
        }
      }
    }
  }
  return t.done();
}

std::optional<EdgeLabelling> search_sn_el_labelling(const PosetPtr& poset) {
  const Poset& p = *poset;
  if (!p.is_bounded()) return std::nullopt;
  auto rank = graded_rank(p);
  if (!rank) return std::nullopt;
  const std::size_t n = *rank;
  if (n > 31) throw SizeLimit("labelling search is capped at rank 31");

  // Edges grouped by upper element in topological order, so the label set below
  // each element is known before any of its upper edges are tried.
  struct Step {
    std::size_t edge;
    ElementId lower, upper;
    bool first_into_upper;
  };
  std::vector<Step> steps;
  for (ElementId b : p.linear_extension()) {
    bool first = true;
    for (ElementId a : p.lower_covers(b)) {
      steps.push_back({*p.edge_index(a, b), a, b, first});
      first = false;
    }
  }

  std::vector<int> labels(p.edges().size(), 0);
  std::vector<std::uint32_t> below(p.size(), 0);
  std::size_t visited = 0;
  constexpr std::size_t kBudget = 20'000'000;
  std::optional<EdgeLabelling> found;

  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (found) return;
    if (++visited > kBudget) throw SizeLimit("labelling search exceeded its budget");
    if (k == steps.size()) {
      EdgeLabelling lab(poset, labels);
      if (is_sn_el_labelling(lab).verdict) found = std::move(lab);
      return;
    }
    const Step& st = steps[k];
    for (int l = 1; l <= static_cast<int>(n) && !found; ++l) {
      const std::uint32_t bit = 1u << (l - 1);
      if (below[st.lower] & bit) continue;
      const std::uint32_t mask = below[st.lower] | bit;
      if (st.first_into_upper) {
        below[st.upper] = mask;
      } else if (below[st.upper] != mask) {
        continue;
      }
      labels[st.edge] = l;
      go(k + 1);
    }
  };
  go(0);
  return found;
}

GradedVerdicts graded_verdicts(const PosetPtr& poset) {
  const Poset& p = *poset;
  GradedVerdicts v;
  std::vector<Chain> chains = find_left_modular_chains(p);
  v.left_modular = !chains.empty();
  for (const Chain& m : chains) {
    EdgeLabelling lab = induce_labelling(poset, m, LabelSet::standard(m.length()));
    if (is_sn_el_labelling(lab).verdict) {
      v.sn_el = true;
      break;
    }
  }
  v.sn_el_by_search = search_sn_el_labelling(poset).has_value();
  v.sn_el = v.sn_el || v.sn_el_by_search;
  v.supersolvable = is_supersolvable(p).verdict;
  return v;
}

ClaimResult claim_graded_equivalence(std::size_t max_elements) {
  Tally t("graded-equivalence", "bounded-graded-" + std::to_string(max_elements));
  std::size_t yes = 0, total = 0;
  for_each_bounded_poset(max_elements, true, [&](const Poset& q) {
    auto ptr = std::make_shared<const Poset>(q);
    GradedVerdicts v = graded_verdicts(ptr);
    ++total;
    if (v.left_modular) ++yes;
    bool agree = v.sn_el == v.left_modular && v.left_modular == v.supersolvable &&
                 v.sn_el == v.sn_el_by_search;
    if (!t.expect(agree)) {
      auto b = [](bool x) { return x ? std::string("yes") : std::string("no"); };
      t.fail("S_n EL " + b(v.sn_el) + " (search " + b(v.sn_el_by_search) + "), left modular " +
                 b(v.left_modular) + ", supersolvable " + b(v.supersolvable),
             make_document("graded-" + std::to_string(total), q));
    }
  });
  return t.done(std::to_string(yes) + " of " + std::to_string(total) +
                " posets have all three properties");
}

namespace {

using SubjectClaim = ClaimResult (*)(const Subject&);

void run_subject(const Subject& s, std::vector<ClaimResult>& out) {
  std::vector<SubjectClaim> claims{
      claim_el,
      claim_interpolating,
      claim_increasing_chain,
      claim_increasing_chain_left_modular,
      claim_induced_labellings,
      claim_labelling_uniqueness,
      claim_cover_index_agreement,
      claim_chain_labels,
      claim_below_chain_labels,
      claim_meet_chain,
      claim_induced_interval_chain,
      claim_interval_restriction,
      claim_cover_steps,
      claim_modular_inequality,
      claim_basic_replacement,
      claim_supersolvable,
  };
  if (is_graded_subject(s)) {
    claims.push_back(claim_sn_el);
    claims.push_back(claim_closure_identity);
  } else {
    claims.push_back(claim_q_closure_data);
  }
  for (SubjectClaim claim : claims) {
    try {
      out.push_back(claim(s));
    } catch (const SizeLimit&) {
      throw;
    } catch (const std::exception& e) {
      ClaimResult r;
      r.subject = s.name;
      r.claim = "exception";
      r.passed = false;
      r.detail = e.what();
      out.push_back(std::move(r));
    }
  }
}

}  // namespace

VerificationReport verify_theorems(const VerifyScope& scope) {
  if (scope.partition_max > kMaxPartitionSize || scope.noncrossing_max > kMaxPartitionSize ||
      scope.ns_max > kMaxPartitionSize) {
    throw SizeLimit("partition families are capped at n = " + std::to_string(kMaxPartitionSize));
  }
  VerificationReport report;
  auto& out = report.results;

  for (int n = 1; n <= scope.partition_max; ++n) run_subject(partition_subject(n), out);
  for (int n = 1; n <= scope.noncrossing_max; ++n) run_subject(noncrossing_subject(n), out);
  for (int n = scope.ns_min; n <= scope.ns_max; ++n) {
    PartitionFamily f = nonstraddling_lattice(n);
    const std::string name = "NS" + std::to_string(n);
    run_subject(Subject{name, f}, out);
    out.push_back(claim_gamma_definitions(f, name));
    out.push_back(claim_two_block_delta(f, name));
    out.push_back(claim_first_label(f, name));
    out.push_back(claim_ns_meets(f, name));
    out.push_back(claim_ns_joins(f, name));
    out.push_back(claim_forced_merging(f, name));
  }
  for (int n : scope.tamari) run_subject(tamari_subject(n), out);
  for (std::size_t m = 1; m <= scope.ideal_ground_max; ++m) {
    std::vector<Poset> qs = enumerate_posets(m);
    for (std::size_t k = 0; k < qs.size(); ++k) {
      run_subject(ideal_subject(qs[k], "J(Q" + std::to_string(m) + "." + std::to_string(k + 1) + ")"),
                  out);
    }
  }
  if (scope.graded_universe_max >= 2) out.push_back(claim_graded_equivalence(scope.graded_universe_max));

  std::stable_sort(out.begin(), out.end(), [](const ClaimResult& a, const ClaimResult& b) {
    return std::tie(a.subject, a.claim) < std::tie(b.subject, b.claim);
  });
  return report;
}

}  // namespace posetlab
