#pragma once

#include <string_view>

#include "fands/incograph.hpp"
#include "fands/stance.hpp"

namespace fands {

/// A preset graph together with the stance corpus that generates it, so the
/// percentage ranker has voting data to work from.
struct SynthGraph {
  Corpus corpus;
  PairList pairs;
  IncoGraph graph;
};

/// Three newspapers, one disputed claim: nodes {1,2,3}, edges (1,2), (2,3).
SynthGraph make_moon_hoax_path();

/// Center node 1 against k leaves 2..k+1, one topic. Requires k >= 2.
SynthGraph make_star(int k);

/// Complete bipartite K_{s,t}: side 1..s against side s+1..s+t, one topic.
/// Requires s, t >= 1.
SynthGraph make_polygon(int s, int t);

/// Two disjoint stars: node 1 vs 2..9 and node 10 vs 11..17, one topic each.
SynthGraph make_graph_a();

/// graph_a plus pendant nodes: 18 against 2 and 19 against 3, each a topic of
/// its own.
SynthGraph make_graph_b();

/// Name-based dispatch for the CLI: moon-hoax-path, star, polygon, graph-a,
/// graph-b (underscores accepted). k applies to star, s/t to polygon.
/// Throws std::invalid_argument for unknown names or invalid parameters.
SynthGraph make_preset(std::string_view name, int k = 0, int s = 0, int t = 0);

} // namespace fands
