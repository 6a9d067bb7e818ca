#include "fands/incograph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "fands/errors.hpp"

namespace fands {

PairList build_pairs(const Corpus& corpus) {
  PairList result;
  // Stances grouped by topic in first-appearance order of the topics.
  std::vector<std::int64_t> topic_order;
  std::map<std::int64_t, std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> by_topic;
  for (const auto& record : corpus.stances) {
    if (record.stance != Stance::kAgree && record.stance != Stance::kDisagree) continue;
    auto [it, inserted] = by_topic.try_emplace(record.topic_id);
    if (inserted) topic_order.push_back(record.topic_id);
    auto& [agree, disagree] = it->second;
    (record.stance == Stance::kAgree ? agree : disagree).push_back(record.news_id);
  }
  for (std::int64_t topic : topic_order) {
    const auto& [agree, disagree] = by_topic.at(topic);
    for (std::int64_t a : agree) {
      for (std::int64_t d : disagree) {
        if (a == d) {
          result.self_conflicts.push_back({topic, a});
          continue;
        }
        result.pairs.push_back({std::min(a, d), std::max(a, d), topic});
      }
    }
  }
  return result;
}

IncoGraph build_graph(std::span<const IncoPair> pairs) {
  IncoGraph graph;

  std::set<std::int64_t> ids;
  for (const auto& pair : pairs) {
    ids.insert(pair.a);
    ids.insert(pair.b);
  }
  graph.news_ids_.assign(ids.begin(), ids.end());

  struct EdgeData {
    int multiplicity = 0;
    std::set<std::int64_t> topics;
  };
  std::map<std::pair<int, int>, EdgeData> edge_map;
  for (const auto& pair : pairs) {
    int u = graph.index_of(pair.a);
    int v = graph.index_of(pair.b);
    auto& data = edge_map[{u, v}];
    ++data.multiplicity;
    data.topics.insert(pair.topic_id);
  }

  const std::size_t n = graph.news_ids_.size();
  graph.adjacency_.assign(n, {});
  graph.topics_per_node_.assign(n, {});
  std::vector<std::set<std::int64_t>> node_topics(n);
  graph.edges_.reserve(edge_map.size());
  for (const auto& [key, data] : edge_map) {
    IncoEdge edge;
    edge.u = key.first;
    edge.v = key.second;
    edge.multiplicity = data.multiplicity;
    edge.topics.assign(data.topics.begin(), data.topics.end());
    graph.adjacency_[static_cast<std::size_t>(edge.u)].push_back(edge.v);
    graph.adjacency_[static_cast<std::size_t>(edge.v)].push_back(edge.u);
    node_topics[static_cast<std::size_t>(edge.u)].insert(data.topics.begin(), data.topics.end());
    node_topics[static_cast<std::size_t>(edge.v)].insert(data.topics.begin(), data.topics.end());
    graph.edges_.push_back(std::move(edge));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(graph.adjacency_[i].begin(), graph.adjacency_[i].end());
    graph.topics_per_node_[i].assign(node_topics[i].begin(), node_topics[i].end());
  }
  return graph;
}

IncoGraph build_graph(const PairList& pairs) { return build_graph(std::span(pairs.pairs)); }

int IncoGraph::index_of(std::int64_t news_id) const {
  auto it = std::lower_bound(news_ids_.begin(), news_ids_.end(), news_id);
  if (it == news_ids_.end() || *it != news_id) return -1;
  return static_cast<int>(it - news_ids_.begin());
}

std::size_t IncoGraph::pair_count_with_repeats() const {
  std::size_t total = 0;
  for (const auto& edge : edges_) total += static_cast<std::size_t>(edge.multiplicity);
  return total;
}

std::size_t IncoGraph::conflict_topic_count() const {
  std::set<std::int64_t> topics;
  for (const auto& edge : edges_) topics.insert(edge.topics.begin(), edge.topics.end());
  return topics.size();
}

std::string_view to_string(Shape shape) {
  switch (shape) {
  case Shape::kStar: return "Star";
  case Shape::kStarLike: return "StarLike";
  case Shape::kPolygon: return "Polygon";
  case Shape::kPolygonLike: return "PolygonLike";
  case Shape::kMixed: return "Mixed";
  }
  return "Mixed";
}

Shape classify_shape(const Component& component, const ShapeThresholds& thresholds) {
  if (!component.bipartite) return Shape::kMixed;
  auto s = static_cast<double>(std::min(component.sides[0].size(), component.sides[1].size()));
  auto t = static_cast<double>(std::max(component.sides[0].size(), component.sides[1].size()));
  if (s == 1.0 && t >= 2.0) return Shape::kStar;
  const double ratio = s / t;
  if (ratio >= thresholds.polygon_min) return Shape::kPolygon;
  if (ratio <= thresholds.star_like_max) return Shape::kStarLike;
  return Shape::kPolygonLike;
}

std::vector<Component> components(const IncoGraph& graph, const ShapeThresholds& thresholds) {
  const int n = static_cast<int>(graph.node_count());
  std::vector<int> color(static_cast<std::size_t>(n), -1); // -1 unvisited, else 0/1
  std::vector<Component> result;

  for (int start = 0; start < n; ++start) {
    if (color[static_cast<std::size_t>(start)] != -1) continue;
    Component comp;
    comp.bipartite = true;
    std::deque<int> queue{start};
    color[static_cast<std::size_t>(start)] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.nodes.push_back(u);
      for (int v : graph.neighbors(u)) {
        if (color[static_cast<std::size_t>(v)] == -1) {
          color[static_cast<std::size_t>(v)] = color[static_cast<std::size_t>(u)] ^ 1;
          queue.push_back(v);
        } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
          comp.bipartite = false;
        }
      }
    }
    std::sort(comp.nodes.begin(), comp.nodes.end());
    if (comp.bipartite) {
      // sides[0] holds the component's smallest node.
      const int anchor = color[static_cast<std::size_t>(comp.nodes.front())];
      for (int u : comp.nodes)
        comp.sides[color[static_cast<std::size_t>(u)] == anchor ? 0 : 1].push_back(u);
    }
    comp.shape = classify_shape(comp, thresholds);
    result.push_back(std::move(comp));
  }
  // BFS from ascending start nodes already yields components ordered by
  // smallest contained news id (node indices follow news-id order).
  return result;
}

std::vector<int> component_index(const IncoGraph& graph, const std::vector<Component>& comps) {
  std::vector<int> index(graph.node_count(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int u : comps[c].nodes) index[static_cast<std::size_t>(u)] = static_cast<int>(c);
  return index;
}

std::string graph_to_json(const IncoGraph& graph) {
  const auto comps = components(graph);
  const auto comp_of = component_index(graph, comps);

  nlohmann::ordered_json doc;
  doc["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    nlohmann::ordered_json node;
    node["id"] = graph.news_id(static_cast<int>(i));
    node["degree"] = graph.degree(static_cast<int>(i));
    node["component"] = comp_of[i];
    doc["nodes"].push_back(std::move(node));
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& edge : graph.edges()) {
    nlohmann::ordered_json e;
    e["a"] = graph.news_id(edge.u);
    e["b"] = graph.news_id(edge.v);
    e["multiplicity"] = edge.multiplicity;
    e["topics"] = edge.topics;
    doc["edges"].push_back(std::move(e));
  }
  return doc.dump(2) + "\n";
}

void write_graph_json(const std::filesystem::path& path, const IncoGraph& graph) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write file: " + path.string());
  out << graph_to_json(graph);
}

IncoGraph read_graph_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open file: " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path.string() + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges"))
    throw FormatError(path.string() + ": expected an object with nodes and edges");

  // The edge list carries everything needed to rebuild the graph: expand each
  // edge back into one pair per topic plus repeats, then rebuild.
  std::vector<IncoPair> pairs;
  try {
    for (const auto& e : doc.at("edges")) {
      const auto a = e.at("a").get<std::int64_t>();
      const auto b = e.at("b").get<std::int64_t>();
      const auto multiplicity = static_cast<std::size_t>(e.value("multiplicity", 1));
      std::vector<std::int64_t> topics = e.value("topics", std::vector<std::int64_t>{});
      std::sort(topics.begin(), topics.end());
      topics.erase(std::unique(topics.begin(), topics.end()), topics.end());
      if (topics.empty()) topics.push_back(0);
      if (a == b) throw FormatError(path.string() + ": self-loop edge");
      if (multiplicity < topics.size())
        throw FormatError(path.string() + ": edge multiplicity smaller than its topic count");
      for (std::size_t m = 0; m < multiplicity; ++m)
        pairs.push_back({std::min(a, b), std::max(a, b),
                         topics[std::min(m, topics.size() - 1)]});
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path.string() + ": bad edge entry: " + e.what());
  }
  IncoGraph graph = build_graph(std::span(pairs));
  if (doc.at("nodes").size() != graph.node_count())
    throw FormatError(path.string() + ": node list does not match the edge list");
  return graph;
}

} // namespace fands
