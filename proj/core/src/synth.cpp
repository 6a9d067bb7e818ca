#include "fands/synth.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fands {

namespace {

SynthGraph from_corpus(Corpus corpus) {
  SynthGraph result;
  result.corpus = std::move(corpus);
  result.pairs = build_pairs(result.corpus);
  result.graph = build_graph(result.pairs);
  return result;
}

void add_stance(Corpus& corpus, std::int64_t topic, std::int64_t news, Stance stance) {
  corpus.topics.emplace(topic, std::string());
  corpus.articles.emplace(news, std::string());
  corpus.stances.push_back({topic, news, stance});
}

// One topic: `center` agrees, every node in [first, last] disagrees.
void add_star_topic(Corpus& corpus, std::int64_t topic, std::int64_t center,
                    std::int64_t first, std::int64_t last) {
  add_stance(corpus, topic, center, Stance::kAgree);
  for (std::int64_t leaf = first; leaf <= last; ++leaf)
    add_stance(corpus, topic, leaf, Stance::kDisagree);
}

} // namespace

SynthGraph make_moon_hoax_path() {
  Corpus corpus;
  // Node 2 is the disputed report, nodes 1 and 3 its challengers.
  add_stance(corpus, 1, 2, Stance::kAgree);
  add_stance(corpus, 1, 1, Stance::kDisagree);
  add_stance(corpus, 1, 3, Stance::kDisagree);
  return from_corpus(std::move(corpus));
}

SynthGraph make_star(int k) {
  if (k < 2) throw std::invalid_argument("star needs k >= 2");
  Corpus corpus;
  add_star_topic(corpus, 1, 1, 2, k + 1);
  return from_corpus(std::move(corpus));
}

SynthGraph make_polygon(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("polygon needs s, t >= 1");
  Corpus corpus;
  for (std::int64_t a = 1; a <= s; ++a) add_stance(corpus, 1, a, Stance::kAgree);
  for (std::int64_t d = s + 1; d <= s + t; ++d) add_stance(corpus, 1, d, Stance::kDisagree);
  return from_corpus(std::move(corpus));
}

SynthGraph make_graph_a() {
  Corpus corpus;
  add_star_topic(corpus, 1, 1, 2, 9);
  add_star_topic(corpus, 2, 10, 11, 17);
  return from_corpus(std::move(corpus));
}

SynthGraph make_graph_b() {
  Corpus corpus;
  add_star_topic(corpus, 1, 1, 2, 9);
  add_star_topic(corpus, 2, 10, 11, 17);
  add_star_topic(corpus, 3, 2, 18, 18);
  add_star_topic(corpus, 4, 3, 19, 19);
  return from_corpus(std::move(corpus));
}

SynthGraph make_preset(std::string_view name, int k, int s, int t) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '_', '-');
  if (key == "moon-hoax-path" || key == "moon-hoax") return make_moon_hoax_path();
  if (key == "star") return make_star(k);
  if (key == "polygon") return make_polygon(s, t);
  if (key == "graph-a") return make_graph_a();
  if (key == "graph-b") return make_graph_b();
  throw std::invalid_argument("unknown preset \"" + key + "\"");
}

} // namespace fands
