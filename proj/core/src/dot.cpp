#include "posetlab/dot.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace posetlab {
namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const Poset& poset, const EdgeLabelling* labelling,
                       const std::string& graph_name) {
  std::vector<std::size_t> level(poset.size(), 0);
  for (ElementId u : poset.linear_extension()) {
    for (ElementId v : poset.lower_covers(u)) level[u] = std::max(level[u], level[v] + 1);
  }
  std::map<std::size_t, std::vector<ElementId>> by_level;
  for (ElementId u = 0; u < poset.size(); ++u) by_level[level[u]].push_back(u);

  std::ostringstream out;
  out << "digraph " << quoted(graph_name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  out << "  edge [arrowhead=none];\n";
  for (const auto& [rank, members] : by_level) {
    out << "  { rank=same;";
    for (ElementId u : members) out << ' ' << quoted(poset.name(u)) << ';';
    out << " }\n";
  }
  const auto& edges = poset.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    out << "  " << quoted(poset.name(edges[e].first)) << " -> " << quoted(poset.name(edges[e].second));
    if (labelling) out << " [label=\"" << labelling->at(e) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace posetlab
