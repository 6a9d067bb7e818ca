#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fands/energy_flow.hpp"
#include "fands/incograph.hpp"
#include "fands/stance.hpp"

namespace fands {

/// Scores within this relative distance of a tie-group's top score belong to
/// the same group.
inline constexpr double kTieRelTol = 1e-9;

/// A scored node universe with its tie-group decomposition: groups are in
/// strictly descending score order, news ids ascending within a group.
struct RankingResult {
  std::string method;
  std::vector<std::int64_t> universe; // news ids, ascending
  std::vector<double> scores;         // parallel to universe
  std::vector<std::vector<std::int64_t>> tie_groups;
};

std::vector<std::vector<std::int64_t>> make_tie_groups(
    std::span<const std::int64_t> ids, std::span<const double> scores,
    double rel_tol = kTieRelTol);

/// score(v) = degree of v in the deduplicated inconsistency graph.
RankingResult rank_by_count(const IncoGraph& graph);

/// score(v) = opposing agree/disagree voters over total agree/disagree voters,
/// summed across the topics where v voted agree or disagree. Articles with no
/// agree/disagree vote are excluded from the universe.
RankingResult rank_by_percentage(const Corpus& corpus);

/// Ranking by converged relative energy.
RankingResult ranking_from_energy(const IncoGraph& graph, const EnergyState& state);
/// Convenience wrapper that runs the flow first.
struct FandsRanking {
  RankingResult ranking;
  FlowResult flow;
};
FandsRanking rank_fands(const IncoGraph& graph, const FlowParams& params = {});

struct HitsParams {
  double tol = 1e-12;
  std::size_t max_iters = 10000;
};

struct HitsResult {
  RankingResult ranking;
  bool converged = false;
  std::size_t iterations = 0;
  double residual = 0.0;
};

/// Hub/authority scores for the undirected graph: both collapse onto the
/// principal eigenvector of the adjacency matrix, computed by normalized
/// power iteration. The iteration runs on A+I so it also settles on
/// bipartite components, which leaves the eigenvectors untouched.
HitsResult rank_hits(const IncoGraph& graph, const HitsParams& params = {});

/// Restriction of a ranking to the ids in `universe` (which must all be
/// present); tie groups are rebuilt. Used to put corpus-level rankings on a
/// graph's node universe before comparing.
RankingResult restrict_to(const RankingResult& ranking,
                          std::span<const std::int64_t> universe);

struct ComparisonCell {
  std::int64_t news_id = 0;
  int node_id = 0; // 1-based index in the shared universe
  double score = 0.0;
  int group = 0; // tie-group ordinal, 0 = best
};

struct ComparisonTable {
  std::size_t k = 0;
  std::vector<std::string> methods;
  std::vector<std::vector<ComparisonCell>> columns; // per method, top-k rows
  std::vector<std::vector<std::size_t>> overlap;    // pairwise |top-k ∩ top-k|
};

/// Side-by-side top-k table. All rankings must share one node universe.
ComparisonTable compare_rankings(std::span<const RankingResult> results, std::size_t k);

/// rank,group,node_id,score,method rows; node ids are positions in the
/// ranking's universe (ascending news-id order), 1-based.
void write_rankings_csv(std::ostream& out, const RankingResult& ranking);

void write_comparison_csv(std::ostream& out, const ComparisonTable& table);
std::string comparison_to_json(const ComparisonTable& table);

} // namespace fands
