#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "fands/errors.hpp"
#include "fands/incograph.hpp"
#include "support.hpp"

using namespace fands;

namespace {

const std::filesystem::path kDataDir = FANDS_TEST_DATA_DIR;

Corpus table2() { return parse_stance_table(kDataDir / "table2.csv"); }

Corpus corpus_from(const std::string& rows) {
  std::istringstream in("topic_id,news_id,stance\n" + rows);
  return parse_stance_table(in);
}

} // namespace

TEST_CASE("pairs of the nine-row example") {
  const auto pairs = build_pairs(table2());
  REQUIRE(pairs.pairs.size() == 4);
  CHECK(pairs.pairs[0] == IncoPair{1, 3, 1});
  CHECK(pairs.pairs[1] == IncoPair{2, 3, 1});
  CHECK(pairs.pairs[2] == IncoPair{5, 6, 2});
  CHECK(pairs.pairs[3] == IncoPair{2, 8, 3});
  CHECK(pairs.self_conflicts.empty());
}

TEST_CASE("topic with agree stances only yields no pairs") {
  const auto pairs = build_pairs(corpus_from("1,1,agree\n1,2,agree\n1,3,discuss\n"));
  CHECK(pairs.pairs.empty());
}

TEST_CASE("self-conflicting article: self-pair dropped, cross pairs kept") {
  const auto pairs = build_pairs(corpus_from("1,7,agree\n1,7,disagree\n1,8,disagree\n"));
  REQUIRE(pairs.pairs.size() == 1);
  CHECK(pairs.pairs[0] == IncoPair{7, 8, 1});
  REQUIRE(pairs.self_conflicts.size() == 1);
  CHECK(pairs.self_conflicts[0] == SelfConflict{1, 7});
}

TEST_CASE("graph of the nine-row example") {
  const auto graph = build_graph(build_pairs(table2()));
  CHECK(graph.edge_count() == 4);
  // articles 4 and 9 never conflict, so six of the eight articles remain
  CHECK(graph.node_count() == 6);
  CHECK(graph.news_ids() == std::vector<std::int64_t>{1, 2, 3, 5, 6, 8});
  CHECK(graph.degree(graph.index_of(2)) == 2);
  CHECK(graph.index_of(4) == -1); // id 4 never conflicts
  CHECK(graph.index_of(9) == -1);
  CHECK(graph.topics_of(graph.index_of(2)) == std::vector<std::int64_t>{1, 3});
}

TEST_CASE("repeated pair collapses to one edge with multiplicity") {
  std::vector<IncoPair> pairs;
  for (int i = 0; i < 5; ++i) pairs.push_back({3, 9, i % 2 + 1});
  const auto graph = build_graph(std::span(pairs));
  REQUIRE(graph.edge_count() == 1);
  CHECK(graph.edges()[0].multiplicity == 5);
  CHECK(graph.edges()[0].topics == std::vector<std::int64_t>{1, 2});
  CHECK(graph.pair_count_with_repeats() == 5);
  CHECK(graph.conflict_topic_count() == 2);
}

TEST_CASE("multiplicities sum to the pair-list length") {
  std::mt19937 rng(4242);
  for (int round = 0; round < 10; ++round) {
    const auto pairs = testsupport::random_bipartite_pairs(rng, 30);
    const auto graph = build_graph(pairs);
    CHECK(graph.pair_count_with_repeats() == pairs.pairs.size());
    CHECK(graph.edge_count() <= pairs.pairs.size());
    for (std::size_t i = 0; i < graph.node_count(); ++i)
      CHECK(graph.degree(static_cast<int>(i)) >= 1);
  }
}

TEST_CASE("graph construction is permutation-invariant") {
  std::mt19937 rng(777);
  const auto pairs = testsupport::random_bipartite_pairs(rng, 25);
  const auto graph = build_graph(pairs);

  // order-reversing bijection on the ids
  auto relabel = [](std::int64_t id) { return 1000 - id; };
  PairList mapped;
  for (const auto& pair : pairs.pairs) {
    const auto a = relabel(pair.a);
    const auto b = relabel(pair.b);
    mapped.pairs.push_back({std::min(a, b), std::max(a, b), pair.topic_id});
  }
  const auto mapped_graph = build_graph(mapped);

  REQUIRE(mapped_graph.node_count() == graph.node_count());
  REQUIRE(mapped_graph.edge_count() == graph.edge_count());
  std::set<std::pair<std::int64_t, std::int64_t>> expected;
  for (const auto& e : graph.edges()) {
    auto a = relabel(graph.news_id(e.u));
    auto b = relabel(graph.news_id(e.v));
    expected.insert({std::min(a, b), std::max(a, b)});
  }
  std::set<std::pair<std::int64_t, std::int64_t>> actual;
  for (const auto& e : mapped_graph.edges())
    actual.insert({mapped_graph.news_id(e.u), mapped_graph.news_id(e.v)});
  CHECK(actual == expected);
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    const int j = mapped_graph.index_of(relabel(graph.news_id(static_cast<int>(i))));
    CHECK(mapped_graph.degree(j) == graph.degree(static_cast<int>(i)));
  }
}

TEST_CASE("components of the nine-row example") {
  const auto graph = build_graph(build_pairs(table2()));
  const auto comps = components(graph);
  REQUIRE(comps.size() == 2);
  auto ids = [&](const Component& c) {
    std::vector<std::int64_t> out;
    for (int u : c.nodes) out.push_back(graph.news_id(u));
    return out;
  };
  CHECK(ids(comps[0]) == std::vector<std::int64_t>{1, 2, 3, 8});
  CHECK(ids(comps[1]) == std::vector<std::int64_t>{5, 6});
  CHECK(comps[0].bipartite);
  CHECK(comps[1].bipartite);
  CHECK(comps[1].sides[0].size() == 1);
  CHECK(comps[1].sides[1].size() == 1);

  // disjoint cover
  std::set<int> seen;
  std::size_t total = 0;
  for (const auto& c : comps) {
    for (int u : c.nodes) seen.insert(u);
    total += c.nodes.size();
  }
  CHECK(total == graph.node_count());
  CHECK(seen.size() == graph.node_count());
}

TEST_CASE("single edge is a bipartite 1-1 component") {
  std::vector<IncoPair> pairs{{1, 2, 1}};
  const auto comps = components(build_graph(std::span(pairs)));
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].bipartite);
  CHECK(comps[0].sides[0].size() == 1);
  CHECK(comps[0].sides[1].size() == 1);
}

TEST_CASE("shape classification") {
  auto shaped = [](std::size_t s, std::size_t t) {
    Component c;
    c.bipartite = true;
    for (std::size_t i = 0; i < s; ++i) c.sides[0].push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < t; ++i) c.sides[1].push_back(static_cast<int>(s + i));
    for (auto& side : c.sides)
      for (int u : side) c.nodes.push_back(u);
    return c;
  };
  CHECK(classify_shape(shaped(1, 8)) == Shape::kStar);
  CHECK(classify_shape(shaped(8, 1)) == Shape::kStar); // swap-invariant
  CHECK(classify_shape(shaped(5, 5)) == Shape::kPolygon);
  CHECK(classify_shape(shaped(2, 5)) == Shape::kPolygonLike);
  CHECK(classify_shape(shaped(5, 2)) == Shape::kPolygonLike);
  CHECK(classify_shape(shaped(1, 8)) == classify_shape(shaped(8, 1)));
  CHECK(classify_shape(shaped(2, 8)) == Shape::kStarLike);
  CHECK(classify_shape(shaped(4, 5)) == Shape::kPolygon);
  CHECK(classify_shape(shaped(1, 1)) == Shape::kPolygon); // ratio 1

  Component odd;
  odd.bipartite = false;
  CHECK(classify_shape(odd) == Shape::kMixed);

  // thresholds are configuration
  ShapeThresholds strict{0.95, 0.5};
  CHECK(classify_shape(shaped(5, 6), strict) == Shape::kPolygonLike);
  CHECK(classify_shape(shaped(2, 5), strict) == Shape::kStarLike);
}

TEST_CASE("odd cycle gives a Mixed component") {
  const auto corpus = corpus_from("1,1,agree\n1,2,disagree\n"
                                  "2,2,agree\n2,3,disagree\n"
                                  "3,3,agree\n3,1,disagree\n");
  const auto comps = components(build_graph(build_pairs(corpus)));
  REQUIRE(comps.size() == 1);
  CHECK(!comps[0].bipartite);
  CHECK(comps[0].shape == Shape::kMixed);
}

TEST_CASE("graph JSON round trip and determinism") {
  const auto graph = build_graph(build_pairs(table2()));
  CHECK(graph_to_json(graph) == graph_to_json(graph));

  testsupport::TempDir dir("graphjson");
  write_graph_json(dir.file("g.json"), graph);
  const auto back = read_graph_json(dir.file("g.json"));
  CHECK(back.news_ids() == graph.news_ids());
  REQUIRE(back.edge_count() == graph.edge_count());
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    CHECK(back.edges()[i].u == graph.edges()[i].u);
    CHECK(back.edges()[i].v == graph.edges()[i].v);
    CHECK(back.edges()[i].multiplicity == graph.edges()[i].multiplicity);
    CHECK(back.edges()[i].topics == graph.edges()[i].topics);
  }
  CHECK(graph_to_json(back) == graph_to_json(graph));

  CHECK_THROWS_AS(read_graph_json(dir.file("missing.json")), FormatError);
  testsupport::write_file(dir.file("bad.json"), "{\"nodes\": []}");
  CHECK_THROWS_AS(read_graph_json(dir.file("bad.json")), FormatError);
  testsupport::write_file(dir.file("loop.json"),
                          "{\"nodes\":[{\"id\":1}],\"edges\":[{\"a\":1,\"b\":1}]}");
  CHECK_THROWS_AS(read_graph_json(dir.file("loop.json")), FormatError);
}
