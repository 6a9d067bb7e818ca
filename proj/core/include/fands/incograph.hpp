#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fands/stance.hpp"

namespace fands {

/// One inconsistent article pair, canonicalized so a < b, with the topic
/// that produced the disagreement.
struct IncoPair {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t topic_id = 0;

  friend auto operator<=>(const IncoPair&, const IncoPair&) = default;
};

/// An article that both agrees and disagrees with the same topic. Such a
/// record would pair with itself; the self-pair is dropped and reported here.
struct SelfConflict {
  std::int64_t topic_id = 0;
  std::int64_t news_id = 0;

  friend auto operator<=>(const SelfConflict&, const SelfConflict&) = default;
};

struct PairList {
  std::vector<IncoPair> pairs; // repeats across topics retained
  std::vector<SelfConflict> self_conflicts;
};

/// Per topic, pairs every agree-stance article with every disagree-stance
/// article. Discuss/unrelated stances are ignored.
PairList build_pairs(const Corpus& corpus);

struct IncoEdge {
  int u = 0; // node indices, news_id(u) < news_id(v)
  int v = 0;
  int multiplicity = 1;                // occurrences across topics
  std::vector<std::int64_t> topics;    // sorted, unique
};

/// Undirected graph of news items connected by inconsistency edges.
/// Nodes are the articles appearing in at least one pair, sorted by news id;
/// edges are deduplicated with multiplicities kept as metadata.
class IncoGraph {
public:
  IncoGraph() = default;

  std::size_t node_count() const { return news_ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::int64_t>& news_ids() const { return news_ids_; }
  std::int64_t news_id(int index) const { return news_ids_[static_cast<std::size_t>(index)]; }

  /// Returns the node index for a news id, or -1 when absent.
  int index_of(std::int64_t news_id) const;

  /// External node id: 1-based position in the sorted node list.
  int node_id(int index) const { return index + 1; }

  const std::vector<IncoEdge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int index) const {
    return adjacency_[static_cast<std::size_t>(index)];
  }
  int degree(int index) const {
    return static_cast<int>(adjacency_[static_cast<std::size_t>(index)].size());
  }
  const std::vector<std::int64_t>& topics_of(int index) const {
    return topics_per_node_[static_cast<std::size_t>(index)];
  }

  /// Sum of edge multiplicities = length of the originating pair list.
  std::size_t pair_count_with_repeats() const;
  /// Number of distinct topics contributing at least one edge.
  std::size_t conflict_topic_count() const;

  friend IncoGraph build_graph(std::span<const IncoPair> pairs);

private:
  std::vector<std::int64_t> news_ids_;               // ascending
  std::vector<IncoEdge> edges_;                      // sorted by (u, v)
  std::vector<std::vector<int>> adjacency_;          // sorted neighbor indices
  std::vector<std::vector<std::int64_t>> topics_per_node_;
};

IncoGraph build_graph(std::span<const IncoPair> pairs);
IncoGraph build_graph(const PairList& pairs);

enum class Shape { kStar, kStarLike, kPolygon, kPolygonLike, kMixed };

std::string_view to_string(Shape shape);

/// Side-ratio cutoffs for the shape taxonomy; the defaults are artifact
/// configuration, not measured constants.
struct ShapeThresholds {
  double polygon_min = 0.8;   // s/t at or above this is a Polygon
  double star_like_max = 0.25; // s/t at or below this is StarLike
};

struct Component {
  std::vector<int> nodes; // node indices, ascending
  bool bipartite = false;
  std::array<std::vector<int>, 2> sides; // populated iff bipartite; sides[0] holds the smallest node
  Shape shape = Shape::kMixed;
};

/// Connected components ordered by smallest contained news id, each tested
/// for bipartiteness and classified.
std::vector<Component> components(const IncoGraph& graph, const ShapeThresholds& thresholds = {});

/// Star for a 1-vs-many split, Polygon/StarLike/PolygonLike by side ratio,
/// Mixed for non-bipartite components.
Shape classify_shape(const Component& component, const ShapeThresholds& thresholds = {});

/// node index -> index of its component in components(graph) order.
std::vector<int> component_index(const IncoGraph& graph, const std::vector<Component>& comps);

/// JSON serialization: {nodes:[{id,degree,component}],edges:[{a,b,multiplicity,topics}]}
/// with stable field and element order.
std::string graph_to_json(const IncoGraph& graph);
void write_graph_json(const std::filesystem::path& path, const IncoGraph& graph);
IncoGraph read_graph_json(const std::filesystem::path& path);

} // namespace fands
