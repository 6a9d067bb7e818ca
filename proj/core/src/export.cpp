#include "fands/export.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "fands/format.hpp"

namespace fands {

std::string to_dot(const IncoGraph& graph, const EnergyState* state) {
  if (state && state->e.size() != graph.node_count())
    throw std::invalid_argument("energy vector does not match the graph");
  std::ostringstream out;
  out << "graph {\n";
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    out << "  " << graph.news_id(static_cast<int>(i));
    if (state) out << " [energy=\"" << format_double(state->e[i]) << "\"]";
    out << ";\n";
  }
  for (const auto& edge : graph.edges())
    out << "  " << graph.news_id(edge.u) << " -- " << graph.news_id(edge.v) << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_force_json(const IncoGraph& graph, const EnergyState* state) {
  if (state && state->e.size() != graph.node_count())
    throw std::invalid_argument("energy vector does not match the graph");
  const auto comps = components(graph);
  const auto comp_of = component_index(graph, comps);
  const auto rel = state ? relative_energy(*state) : std::vector<double>{};

  nlohmann::ordered_json doc;
  doc["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    nlohmann::ordered_json node;
    node["id"] = graph.news_id(static_cast<int>(i));
    node["component"] = comp_of[i];
    node["degree"] = graph.degree(static_cast<int>(i));
    if (state) {
      node["energy"] = state->e[i];
      node["relative_energy"] = rel[i];
    }
    doc["nodes"].push_back(std::move(node));
  }
  doc["links"] = nlohmann::ordered_json::array();
  for (const auto& edge : graph.edges()) {
    nlohmann::ordered_json link;
    link["source"] = graph.news_id(edge.u);
    link["target"] = graph.news_id(edge.v);
    doc["links"].push_back(std::move(link));
  }
  return doc.dump(2) + "\n";
}

} // namespace fands
