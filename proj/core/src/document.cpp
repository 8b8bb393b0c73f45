#include "posetlab/document.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace posetlab {
namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void schema_error(const std::string& what) { throw ParseError(what, 1, 1); }

std::vector<std::string> string_array(const json& value, const std::string& field) {
  if (!value.is_array()) schema_error("'" + field + "' must be an array of strings");
  std::vector<std::string> out;
  for (const json& item : value) {
    if (!item.is_string()) schema_error("'" + field + "' must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

std::string edge_key(std::string_view lower, std::string_view upper) {
  return std::string(lower) + "->" + std::string(upper);
}

PosetDocument parse_poset_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte);
    throw ParseError(e.what(), line, column);
  }
  if (!root.is_object()) schema_error("document must be a JSON object");

  static const std::set<std::string> known{"name", "elements", "covers", "labels", "chains"};
  for (const auto& [key, value] : root.items()) {
    if (!known.count(key)) schema_error("unknown field '" + key + "'");
  }

  PosetDocument doc;
  if (!root.contains("name") || !root["name"].is_string()) schema_error("'name' must be a string");
  doc.name = root["name"].get<std::string>();
  if (!root.contains("elements")) schema_error("missing 'elements'");
  doc.elements = string_array(root["elements"], "elements");
  if (!root.contains("covers") || !root["covers"].is_array()) schema_error("'covers' must be an array");
  for (const json& pair : root["covers"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      schema_error("each cover must be a 2-array of element ids");
    }
    doc.covers.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }
  if (root.contains("labels")) {
    const json& labels = root["labels"];
    if (!labels.is_object()) schema_error("'labels' must be an object");
    doc.labels.emplace();
    for (const auto& [key, value] : labels.items()) {
      if (!value.is_number_integer()) schema_error("label '" + key + "' must be an integer");
      (*doc.labels)[key] = value.get<int>();
    }
  }
  if (root.contains("chains")) {
    const json& chains = root["chains"];
    if (!chains.is_object()) schema_error("'chains' must be an object");
    doc.chains.emplace();
    for (const auto& [key, value] : chains.items()) {
      (*doc.chains)[key] = string_array(value, "chains." + key);
    }
  }
  return doc;
}

std::string serialize_poset_document(const PosetDocument& doc) {
  std::vector<std::pair<std::string, json>> fields;
  if (doc.chains) {
    json chains = json::object();
    for (const auto& [name, ids] : *doc.chains) chains[name] = ids;
    fields.emplace_back("chains", std::move(chains));
  }
  json covers = json::array();
  for (const auto& [a, b] : doc.covers) covers.push_back({a, b});
  fields.emplace_back("covers", std::move(covers));
  fields.emplace_back("elements", json(doc.elements));
  if (doc.labels) {
    json labels = json::object();
    for (const auto& [key, value] : *doc.labels) labels[key] = value;
    fields.emplace_back("labels", std::move(labels));
  }
  fields.emplace_back("name", json(doc.name));

  std::string out = "{\n";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out += "  " + json(fields[i].first).dump() + ": " + fields[i].second.dump();
    out += i + 1 < fields.size() ? ",\n" : "\n";
  }
  out += "}\n";
  return out;
}

Poset to_poset(const PosetDocument& doc) {
  try {
    return build_poset(doc.elements, doc.covers, Reduction::Strict);
  } catch (const Error& e) {
    throw ValidationError(std::string("invalid poset '") + doc.name + "': " + e.what());
  }
}

std::optional<EdgeLabelling> to_labelling(const PosetDocument& doc, const PosetPtr& poset) {
  if (!doc.labels) return std::nullopt;
  std::map<std::string, std::size_t> edge_of;
  const auto& edges = poset->edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    edge_of.emplace(edge_key(poset->name(edges[e].first), poset->name(edges[e].second)), e);
  }
  std::vector<int> labels(edges.size());
  std::vector<char> seen(edges.size(), 0);
  for (const auto& [key, value] : *doc.labels) {
    auto it = edge_of.find(key);
    if (it == edge_of.end()) throw ValidationError("label on '" + key + "', which is not a cover edge");
    labels[it->second] = value;
    seen[it->second] = 1;
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!seen[e]) {
      throw ValidationError("cover edge '" +
                            edge_key(poset->name(edges[e].first), poset->name(edges[e].second)) +
                            "' has no label");
    }
  }
  return EdgeLabelling(poset, std::move(labels));
}

Chain to_chain(const PosetDocument& doc, const Poset& poset, const std::string& chain_name) {
  if (!doc.chains || !doc.chains->count(chain_name)) {
    throw ValidationError("document has no chain named '" + chain_name + "'");
  }
  Chain chain;
  for (const std::string& id : doc.chains->at(chain_name)) {
    auto found = poset.find(id);
    if (!found) throw ValidationError("chain '" + chain_name + "' names unknown element '" + id + "'");
    chain.nodes.push_back(*found);
  }
  if (!is_chain(poset, chain)) throw ValidationError("'" + chain_name + "' is not a chain");
  return chain;
}

PosetDocument make_document(std::string name, const Poset& poset, const EdgeLabelling* labelling,
                            const std::map<std::string, Chain>& chains) {
  PosetDocument doc;
  doc.name = std::move(name);
  doc.elements = poset.names();
  for (const auto& [a, b] : poset.edges()) doc.covers.emplace_back(poset.name(a), poset.name(b));
  if (labelling) {
    doc.labels.emplace();
    for (std::size_t e = 0; e < poset.edges().size(); ++e) {
      const auto& [a, b] = poset.edges()[e];
      (*doc.labels)[edge_key(poset.name(a), poset.name(b))] = labelling->at(e);
    }
  }
  if (!chains.empty()) {
    doc.chains.emplace();
    for (const auto& [chain_name, chain] : chains) {
      std::vector<std::string> ids;
      for (ElementId u : chain.nodes) ids.push_back(poset.name(u));
      (*doc.chains)[chain_name] = std::move(ids);
    }
  }
  return doc;
}

}  // namespace posetlab
