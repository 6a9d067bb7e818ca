#include "fands/report.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "fands/format.hpp"

namespace fands {

namespace {

// Node indices ordered by descending relative energy, ascending id on ties.
std::vector<std::size_t> energy_order(const std::vector<double>& rel) {
  std::vector<std::size_t> order(rel.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (rel[a] != rel[b]) return rel[a] > rel[b];
    return a < b;
  });
  return order;
}

} // namespace

std::vector<TopKRow> top_k_report(const IncoGraph& graph, const EnergyState& state,
                                  std::size_t k) {
  if (state.e.size() != graph.node_count())
    throw std::invalid_argument("energy vector does not match the graph");
  const auto rel = relative_energy(state);
  const auto order = energy_order(rel);

  std::vector<TopKRow> rows;
  rows.reserve(std::min(k, order.size()));
  for (std::size_t pos = 0; pos < order.size() && pos < k; ++pos) {
    const auto i = order[pos];
    const auto& nbrs = graph.neighbors(static_cast<int>(i));
    double neighbor_sum = 0.0;
    for (int j : nbrs) neighbor_sum += rel[static_cast<std::size_t>(j)];
    TopKRow row;
    row.rank = static_cast<int>(pos) + 1;
    row.node_id = graph.node_id(static_cast<int>(i));
    row.news_id = graph.news_id(static_cast<int>(i));
    row.energy = state.e[i];
    row.relative_energy = rel[i];
    row.mean_neighbor_energy = nbrs.empty() ? 0.0 : neighbor_sum / static_cast<double>(nbrs.size());
    row.n_connected = graph.degree(static_cast<int>(i));
    row.n_topics = graph.topics_of(static_cast<int>(i)).size();
    rows.push_back(row);
  }
  return rows;
}

std::vector<int> checkworthy_list(const EnergyState& state, double threshold) {
  if (!(threshold >= 0.0) || !(threshold <= 1.0))
    throw std::invalid_argument("threshold must lie in [0, 1]");
  const auto rel = relative_energy(state);
  std::vector<int> nodes;
  for (std::size_t i : energy_order(rel)) {
    if (rel[i] >= threshold) nodes.push_back(static_cast<int>(i));
  }
  return nodes;
}

std::vector<std::int64_t> checkworthy_news_ids(const IncoGraph& graph,
                                               const EnergyState& state,
                                               double threshold) {
  std::vector<std::int64_t> ids;
  for (int index : checkworthy_list(state, threshold))
    ids.push_back(graph.news_id(index));
  return ids;
}

void write_top_k_csv(std::ostream& out, const std::vector<TopKRow>& rows) {
  out << "rank,node_id,news_id,energy,relative_energy,mean_neighbor_energy,"
         "n_connected,n_topics\n";
  for (const auto& row : rows) {
    out << row.rank << ',' << row.node_id << ',' << row.news_id << ','
        << format_double(row.energy) << ',' << format_double(row.relative_energy)
        << ',' << format_double(row.mean_neighbor_energy) << ',' << row.n_connected
        << ',' << row.n_topics << '\n';
  }
}

std::string top_k_to_json(const std::vector<TopKRow>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r;
    r["rank"] = row.rank;
    r["node_id"] = row.node_id;
    r["news_id"] = row.news_id;
    r["energy"] = row.energy;
    r["relative_energy"] = row.relative_energy;
    r["mean_neighbor_energy"] = row.mean_neighbor_energy;
    r["n_connected"] = row.n_connected;
    r["n_topics"] = row.n_topics;
    doc.push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

} // namespace fands
