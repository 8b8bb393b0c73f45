// posetlab: generate lattice families, check order-theoretic properties of poset
// documents, induce labellings, export DOT and run the verification harness.
//
// Exit status: 0 pass, 1 property fails, 2 input error, 3 size limit.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "posetlab/document.hpp"
#include "posetlab/dot.hpp"
#include "posetlab/error.hpp"
#include "posetlab/families.hpp"
#include "posetlab/labelling.hpp"
#include "posetlab/order_ops.hpp"
#include "posetlab/supersolvability.hpp"
#include "posetlab/theorems.hpp"

using namespace posetlab;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;
constexpr int kSizeLimit = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Loaded {
  PosetDocument doc;
  PosetPtr poset;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.doc = parse_poset_document(read_input(path));
  l.poset = std::make_shared<const Poset>(to_poset(l.doc));
  return l;
}

EdgeLabelling require_labelling(const Loaded& l) {
  auto lab = to_labelling(l.doc, l.poset);
  if (!lab) throw ValidationError("document '" + l.doc.name + "' has no labels");
  return *lab;
}

std::vector<int> parse_csv(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("bad label '" + item + "' in --labels");
    }
  }
  return out;
}

void print_witness(const Poset& p, const CheckReport& r) {
  if (!r.witness) return;
  if (!r.witness->elements.empty()) {
    std::cout << "elements:";
    for (ElementId u : r.witness->elements) std::cout << ' ' << p.name(u);
    std::cout << '\n';
  }
  for (const Chain& c : r.witness->chains) std::cout << "chain: " << to_string(p, c) << '\n';
}

int report(const Poset& p, const CheckReport& r) {
  std::cout << (r.verdict ? "PASS" : "FAIL");
  if (!r.note.empty()) std::cout << ": " << r.note;
  std::cout << '\n';
  print_witness(p, r);
  return r.verdict ? kPass : kFail;
}

int report_element(const Poset& p, const ElementCheck& c) {
  int code = report(p, c.report);
  if (c.failure) {
    const LMWitness& w = *c.failure;
    std::cout << "failure: " << to_string(w.kind) << " x=" << p.name(w.x) << " y=" << p.name(w.y)
              << " z=" << p.name(w.z);
    if (w.lhs) std::cout << " lhs=" << p.name(*w.lhs);
    if (w.rhs) std::cout << " rhs=" << p.name(*w.rhs);
    std::cout << '\n';
  }
  return code;
}

int cmd_gen(const std::string& family, int n) {
  if (n < 0) throw ValidationError("size must be non-negative");
  PosetDocument doc;
  auto labelled = [&](const std::string& name, const LabelledFamily& f) {
    return make_document(name, *f.poset, &f.labelling, {{"M", f.increasing}});
  };
  const std::string suffix = std::to_string(n);
  if (family == "partition") {
    doc = labelled("Pi" + suffix, partition_lattice(n));
  } else if (family == "noncrossing") {
    doc = labelled("NC" + suffix, noncrossing_lattice(n));
  } else if (family == "nonstraddling") {
    doc = labelled("NS" + suffix, nonstraddling_lattice(n));
  } else if (family == "tamari") {
    doc = make_document("T" + suffix, *tamari_lattice(n).poset);
  } else if (family == "boolean") {
    if (static_cast<std::size_t>(n) > kMaxIdealGround) {
      throw SizeLimit("boolean lattices are capped at rank " + std::to_string(kMaxIdealGround));
    }
    Poset q = antichain_poset(static_cast<std::size_t>(n));
    doc = labelled("B" + suffix, ideal_lattice(q, natural_linear_extension(q)));
  } else if (family == "chain") {
    auto p = std::make_shared<const Poset>(chain_poset(static_cast<std::size_t>(n)));
    Chain all;
    for (ElementId u : p->linear_extension()) all.nodes.push_back(u);
    EdgeLabelling lab = induce_labelling(p, all, LabelSet::standard(all.length()));
    doc = make_document("C" + suffix, *p, &lab, {{"M", all}});
  } else {
    throw ValidationError("unknown family '" + family + "'");
  }
  std::cout << serialize_poset_document(doc);
  return kPass;
}

int cmd_check(const std::string& property, const std::string& file, const std::string& chain_name,
              const std::string& element) {
  Loaded l = load(file);
  const Poset& p = *l.poset;
  if (property == "el") return report(p, is_el_labelling(require_labelling(l)));
  if (property == "sn-el") return report(p, is_sn_el_labelling(require_labelling(l)));
  if (property == "interpolating") return report(p, is_interpolating(require_labelling(l)));
  if (property == "distributive") return report(p, is_distributive_lattice(p));
  if (property == "supersolvable") return report(p, is_supersolvable(p));
  if (property == "graded") {
    auto rank = graded_rank(p);
    if (rank) {
      std::cout << "PASS: rank " << *rank << '\n';
      return kPass;
    }
    std::cout << "FAIL: not graded\n";
    return kFail;
  }
  if (property == "viable" || property == "left-modular") {
    const bool lm = property == "left-modular";
    if (!element.empty()) {
      ElementId x = p.id(element);
      return report_element(p, lm ? is_left_modular_element(p, x) : is_viable_element(p, x));
    }
    if (!chain_name.empty()) {
      Chain c = to_chain(l.doc, p, chain_name);
      if (lm) return report(p, is_left_modular_chain(p, c));
      for (ElementId x : c.nodes) {
        ElementCheck v = is_viable_element(p, x);
        if (!v.report.verdict) return report_element(p, v);
      }
      std::cout << "PASS\n";
      return kPass;
    }
    if (!lm) throw ValidationError("viable needs --element or --chain");
    std::vector<Chain> chains = find_left_modular_chains(p);
    if (chains.empty()) {
      std::cout << "FAIL: no left modular maximal chain\n";
      return kFail;
    }
    std::cout << "PASS: " << chains.size() << " left modular maximal chains\n";
    std::cout << "chain: " << to_string(p, chains.front()) << '\n';
    return kPass;
  }
  throw ValidationError("unknown property '" + property + "'");
}

int cmd_label(const std::string& file, const std::string& chain_name, const std::string& labels) {
  Loaded l = load(file);
  Chain c = to_chain(l.doc, *l.poset, chain_name);
  LabelSet set = labels.empty() ? LabelSet::standard(c.length()) : LabelSet(parse_csv(labels));
  EdgeLabelling lab = induce_labelling(l.poset, c, set);
  std::map<std::string, Chain> chains;
  if (l.doc.chains) {
    for (const auto& [name, ids] : *l.doc.chains) chains.emplace(name, to_chain(l.doc, *l.poset, name));
  }
  std::cout << serialize_poset_document(make_document(l.doc.name, *l.poset, &lab, chains));
  return kPass;
}

int cmd_export(const std::string& file) {
  Loaded l = load(file);
  auto lab = to_labelling(l.doc, l.poset);
  std::cout << export_dot(*l.poset, lab ? &*lab : nullptr, l.doc.name.empty() ? "poset" : l.doc.name);
  return kPass;
}

int cmd_verify(const std::string& scope_name) {
  VerifyScope scope;
  try {
    scope = VerifyScope::preset(scope_name);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  VerificationReport r = verify_theorems(scope);
  std::cout << r.to_json();
  return r.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"posetlab: finite posets, left modular chains and interpolating labellings"};
  app.require_subcommand(1);

  std::string family, file, property, chain_name, element, labels, scope = "all";
  int n = 0;
  bool dot = false;

  auto* gen = app.add_subcommand("gen", "Print a generated family as a poset document");
  gen->add_option("family", family, "partition | noncrossing | nonstraddling | tamari | boolean | chain")
      ->required();
  gen->add_option("n", n, "Size parameter")->required();

  auto* check = app.add_subcommand("check", "Check a property of a poset document");
  check->add_option("property", property,
                    "el | sn-el | interpolating | left-modular | viable | graded | distributive | "
                    "supersolvable")
      ->required();
  check->add_option("file", file, "Poset document ('-' for stdin)")->required();
  check->add_option("--chain", chain_name, "Named chain from the document");
  check->add_option("--element", element, "Element id");

  auto* label = app.add_subcommand("label", "Induce a labelling from a left modular chain");
  label->add_option("file", file, "Poset document ('-' for stdin)")->required();
  label->add_option("--chain", chain_name, "Named chain from the document")->required();
  label->add_option("--labels", labels, "Increasing labels, comma separated (default 1..n)");

  auto* exp = app.add_subcommand("export", "Export a poset document");
  exp->add_option("file", file, "Poset document ('-' for stdin)")->required();
  exp->add_flag("--dot", dot, "Graphviz DOT output")->required();

  auto* verify = app.add_subcommand("verify", "Run the verification harness");
  verify->add_option("--scope", scope, "all | families | graded | ideals | ns | ns-slow | partitions | tamari");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*gen) return cmd_gen(family, n);
    if (*check) return cmd_check(property, file, chain_name, element);
    if (*label) return cmd_label(file, chain_name, labels);
    if (*exp) return cmd_export(file);
    if (*verify) return cmd_verify(scope);
  } catch (const SizeLimit& e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.line() << ':' << e.column() << ": " << e.what() << '\n';
    return kInputError;
  } catch (const NotLeftModular& e) {
    std::cerr << "not left modular: " << e.what() << '\n';
    return kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
