#pragma once

// JSON poset documents:
//
//   {
//     "chains": {"M": ["0", "a", "1"]},
//     "covers": [["0", "a"], ["a", "1"]],
//     "elements": ["0", "a", "1"],
//     "labels": {"0->a": 1, "a->1": 2},
//     "name": "chain"
//   }
//
// `labels` and `chains` are optional. Serialization writes one top-level key per
// line in sorted order.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetlab/labelling.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

struct PosetDocument {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::optional<std::map<std::string, int>> labels;
  std::optional<std::map<std::string, std::vector<std::string>>> chains;

  friend bool operator==(const PosetDocument&, const PosetDocument&) = default;
};

/// Throws ParseError with the line and column of malformed input.
PosetDocument parse_poset_document(std::string_view text);
std::string serialize_poset_document(const PosetDocument& doc);

/// Key used for a cover edge in the `labels` object.
std::string edge_key(std::string_view lower, std::string_view upper);

/// Builds the poset; any construction failure is rethrown as ValidationError.
Poset to_poset(const PosetDocument& doc);
/// The labelling stored in the document, if any. Labels must cover exactly the
/// cover edges (ValidationError otherwise).
std::optional<EdgeLabelling> to_labelling(const PosetDocument& doc, const PosetPtr& poset);
/// Named chain from the document (ValidationError if missing or not a chain).
Chain to_chain(const PosetDocument& doc, const Poset& poset, const std::string& chain_name);

PosetDocument make_document(std::string name, const Poset& poset,
                            const EdgeLabelling* labelling = nullptr,
                            const std::map<std::string, Chain>& chains = {});

}  // namespace posetlab
