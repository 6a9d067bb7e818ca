#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fands/energy_flow.hpp"
#include "fands/incograph.hpp"

namespace fands {

/// One row of the top-k property table.
struct TopKRow {
  int rank = 0;
  int node_id = 0;
  std::int64_t news_id = 0;
  double energy = 0.0;
  double relative_energy = 0.0;
  double mean_neighbor_energy = 0.0; // mean of the neighbors' relative energies
  int n_connected = 0;               // degree
  std::size_t n_topics = 0;          // topics contributing an incident edge
};

/// Rows sorted by descending relative energy, ties broken by ascending node
/// id; k beyond the node count just truncates.
std::vector<TopKRow> top_k_report(const IncoGraph& graph, const EnergyState& state,
                                  std::size_t k);

/// Node indices with relative energy >= threshold, highest first.
/// threshold must lie in [0, 1].
std::vector<int> checkworthy_list(const EnergyState& state, double threshold);
/// Same list as news ids.
std::vector<std::int64_t> checkworthy_news_ids(const IncoGraph& graph,
                                               const EnergyState& state,
                                               double threshold);

void write_top_k_csv(std::ostream& out, const std::vector<TopKRow>& rows);
std::string top_k_to_json(const std::vector<TopKRow>& rows);

} // namespace fands
