#include "fands/rankers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "fands/errors.hpp"
#include "fands/format.hpp"

namespace fands {

namespace {

bool same_group(double anchor, double score, double rel_tol) {
  return anchor - score <= rel_tol * std::max(std::abs(anchor), std::abs(score));
}

RankingResult finish(std::string method, std::vector<std::int64_t> universe,
                     std::vector<double> scores) {
  RankingResult result;
  result.method = std::move(method);
  result.tie_groups = make_tie_groups(universe, scores);
  result.universe = std::move(universe);
  result.scores = std::move(scores);
  return result;
}

} // namespace

std::vector<std::vector<std::int64_t>> make_tie_groups(
    std::span<const std::int64_t> ids, std::span<const double> scores, double rel_tol) {
  std::vector<std::size_t> order(ids.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return ids[a] < ids[b];
  });

  std::vector<std::vector<std::int64_t>> groups;
  double anchor = 0.0;
  for (std::size_t idx : order) {
    if (groups.empty() || !same_group(anchor, scores[idx], rel_tol)) {
      groups.emplace_back();
      anchor = scores[idx];
    }
    groups.back().push_back(ids[idx]);
  }
  for (auto& group : groups) std::sort(group.begin(), group.end());
  return groups;
}

RankingResult rank_by_count(const IncoGraph& graph) {
  std::vector<double> scores(graph.node_count());
  for (std::size_t i = 0; i < graph.node_count(); ++i)
    scores[i] = static_cast<double>(graph.degree(static_cast<int>(i)));
  return finish("count", graph.news_ids(), std::move(scores));
}

RankingResult rank_by_percentage(const Corpus& corpus) {
  // Voter sets per topic, agree and disagree only.
  std::map<std::int64_t, std::pair<std::set<std::int64_t>, std::set<std::int64_t>>> topics;
  for (const auto& record : corpus.stances) {
    if (record.stance == Stance::kAgree)
      topics[record.topic_id].first.insert(record.news_id);
    else if (record.stance == Stance::kDisagree)
      topics[record.topic_id].second.insert(record.news_id);
  }

  std::map<std::int64_t, std::pair<double, double>> tally; // news_id -> {opposing, voters}
  for (const auto& [topic, sides] : topics) {
    const auto& [agree, disagree] = sides;
    std::set<std::int64_t> voters(agree.begin(), agree.end());
    voters.insert(disagree.begin(), disagree.end());
    const auto n_voters = static_cast<double>(voters.size());
    for (std::int64_t v : voters) {
      const bool in_agree = agree.contains(v);
      const bool in_disagree = disagree.contains(v);
      double opposing = 0.0;
      if (in_agree && in_disagree) // conflicted voter: everyone else opposes one of its stances
        opposing = n_voters - 1.0;
      else if (in_agree)
        opposing = static_cast<double>(disagree.size());
      else
        opposing = static_cast<double>(agree.size());
      auto& [num, den] = tally[v];
      num += opposing;
      den += n_voters;
    }
  }

  std::vector<std::int64_t> universe;
  std::vector<double> scores;
  for (const auto& [news_id, nd] : tally) {
    universe.push_back(news_id);
    scores.push_back(nd.first / nd.second);
  }
  return finish("percentage", std::move(universe), std::move(scores));
}

RankingResult ranking_from_energy(const IncoGraph& graph, const EnergyState& state) {
  return finish("fands", graph.news_ids(), relative_energy(state));
}

FandsRanking rank_fands(const IncoGraph& graph, const FlowParams& params) {
  FandsRanking result;
  result.flow = run_flow(graph, params);
  result.ranking = ranking_from_energy(graph, result.flow.state);
  return result;
}

HitsResult rank_hits(const IncoGraph& graph, const HitsParams& params) {
  const std::size_t n = graph.node_count();
  if (n == 0) throw DegenerateGraphError("HITS needs a nonempty graph");
  if (!(params.tol > 0.0)) throw std::invalid_argument("tol must be positive");

  std::vector<double> s(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> next(n);
  HitsResult result;
  for (std::size_t it = 1; it <= params.max_iters; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = s[i]; // identity shift keeps bipartite components from cycling
      for (int j : graph.neighbors(static_cast<int>(i)))
        acc += s[static_cast<std::size_t>(j)];
      next[i] = acc;
    }
    double norm2 = 0.0;
    for (double x : next) norm2 += x * x;
    const double norm = std::sqrt(norm2);
    for (double& x : next) x /= norm;

    double diff = 0.0;
    double l1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      diff += std::abs(next[i] - s[i]);
      l1 += std::abs(s[i]);
    }
    s = next;
    result.iterations = it;
    result.residual = diff / l1;
    if (diff <= params.tol * l1) {
      result.converged = true;
      break;
    }
  }
  result.ranking = finish("hits", graph.news_ids(), std::move(s));
  return result;
}

RankingResult restrict_to(const RankingResult& ranking,
                          std::span<const std::int64_t> universe) {
  std::map<std::int64_t, double> by_id;
  for (std::size_t i = 0; i < ranking.universe.size(); ++i)
    by_id.emplace(ranking.universe[i], ranking.scores[i]);

  std::vector<std::int64_t> ids(universe.begin(), universe.end());
  std::sort(ids.begin(), ids.end());
  std::vector<double> scores;
  scores.reserve(ids.size());
  for (std::int64_t id : ids) {
    auto it = by_id.find(id);
    if (it == by_id.end())
      throw std::invalid_argument("id " + std::to_string(id) +
                                  " not present in ranking \"" + ranking.method + "\"");
    scores.push_back(it->second);
  }
  return finish(ranking.method, std::move(ids), std::move(scores));
}

ComparisonTable compare_rankings(std::span<const RankingResult> results, std::size_t k) {
  if (results.empty()) throw std::invalid_argument("no rankings to compare");
  for (const auto& r : results)
    if (r.universe != results.front().universe)
      throw std::invalid_argument("rankings cover different node universes");

  const auto& universe = results.front().universe;
  auto node_id_of = [&](std::int64_t news_id) {
    auto it = std::lower_bound(universe.begin(), universe.end(), news_id);
    return static_cast<int>(it - universe.begin()) + 1;
  };

  ComparisonTable table;
  table.k = k;
  for (const auto& r : results) {
    std::map<std::int64_t, double> score_of;
    for (std::size_t i = 0; i < r.universe.size(); ++i)
      score_of.emplace(r.universe[i], r.scores[i]);
    std::vector<ComparisonCell> column;
    int group_ordinal = 0;
    for (const auto& group : r.tie_groups) {
      ++group_ordinal;
      for (std::int64_t id : group) {
        if (column.size() == k) break;
        column.push_back({id, node_id_of(id), score_of.at(id), group_ordinal});
      }
      if (column.size() == k) break;
    }
    table.methods.push_back(r.method);
    table.columns.push_back(std::move(column));
  }

  const std::size_t m = results.size();
  table.overlap.assign(m, std::vector<std::size_t>(m, 0));
  for (std::size_t a = 0; a < m; ++a) {
    std::set<std::int64_t> set_a;
    for (const auto& cell : table.columns[a]) set_a.insert(cell.news_id);
    for (std::size_t b = 0; b < m; ++b) {
      std::size_t count = 0;
      for (const auto& cell : table.columns[b])
        if (set_a.contains(cell.news_id)) ++count;
      table.overlap[a][b] = count;
    }
  }
  return table;
}

void write_rankings_csv(std::ostream& out, const RankingResult& ranking) {
  std::map<std::int64_t, double> score_of;
  for (std::size_t i = 0; i < ranking.universe.size(); ++i)
    score_of.emplace(ranking.universe[i], ranking.scores[i]);
  auto node_id_of = [&](std::int64_t news_id) {
    auto it = std::lower_bound(ranking.universe.begin(), ranking.universe.end(), news_id);
    return static_cast<int>(it - ranking.universe.begin()) + 1;
  };

  out << "rank,group,node_id,score,method\n";
  int rank = 0;
  int group_ordinal = 0;
  for (const auto& group : ranking.tie_groups) {
    ++group_ordinal;
    for (std::int64_t id : group) {
      ++rank;
      out << rank << ',' << group_ordinal << ',' << node_id_of(id) << ','
          << format_double(score_of.at(id)) << ',' << ranking.method << '\n';
    }
  }
}

void write_comparison_csv(std::ostream& out, const ComparisonTable& table) {
  out << "rank";
  for (const auto& method : table.methods)
    out << ',' << method << "_node_id," << method << "_score," << method << "_group";
  out << '\n';
  for (std::size_t row = 0; row < table.k; ++row) {
    out << row + 1;
    for (const auto& column : table.columns) {
      if (row < column.size()) {
        const auto& cell = column[row];
        out << ',' << cell.node_id << ',' << format_double(cell.score) << ','
            << cell.group;
      } else {
        out << ",,,";
      }
    }
    out << '\n';
  }
}

std::string comparison_to_json(const ComparisonTable& table) {
  nlohmann::ordered_json doc;
  doc["k"] = table.k;
  doc["methods"] = table.methods;
  doc["columns"] = nlohmann::ordered_json::array();
  for (std::size_t m = 0; m < table.methods.size(); ++m) {
    nlohmann::ordered_json column;
    column["method"] = table.methods[m];
    column["rows"] = nlohmann::ordered_json::array();
    int rank = 0;
    for (const auto& cell : table.columns[m]) {
      nlohmann::ordered_json row;
      row["rank"] = ++rank;
      row["node_id"] = cell.node_id;
      row["news_id"] = cell.news_id;
      row["score"] = cell.score;
      row["group"] = cell.group;
      column["rows"].push_back(std::move(row));
    }
    doc["columns"].push_back(std::move(column));
  }
  doc["overlaps"] = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < table.methods.size(); ++a) {
    for (std::size_t b = a + 1; b < table.methods.size(); ++b) {
      nlohmann::ordered_json entry;
      entry["a"] = table.methods[a];
      entry["b"] = table.methods[b];
      entry["count"] = table.overlap[a][b];
      doc["overlaps"].push_back(std::move(entry));
    }
  }
  return doc.dump(2) + "\n";
}

} // namespace fands
