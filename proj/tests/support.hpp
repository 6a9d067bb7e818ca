#pragma once

// Shared test utilities: an independent dense re-derivation of the
// propagation step (used as the oracle for the sparse engine), seeded random
// graph generators, and small file helpers.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fands/incograph.hpp"

namespace testsupport {

// Dense transformation matrix built straight from the update rule, sharing no
// code with fands::build_matrix.
inline std::vector<std::vector<double>> dense_matrix(const fands::IncoGraph& graph,
                                                     const std::vector<double>& e,
                                                     double p) {
  const std::size_t n = graph.node_count();
  double total = 0.0;
  for (double x : e) total += x;
  std::vector<double> af(n);
  for (std::size_t i = 0; i < n; ++i)
    af[i] = -std::log10(std::max(e[i], 1e-12 * total) / total);

  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    m[j][j] = 1.0 - p;
    double denom = 0.0;
    for (int k : graph.neighbors(static_cast<int>(j))) denom += af[static_cast<std::size_t>(k)];
    for (int i : graph.neighbors(static_cast<int>(j)))
      m[static_cast<std::size_t>(i)][j] = p * af[static_cast<std::size_t>(i)] / denom;
  }
  return m;
}

inline std::vector<double> dense_apply(const std::vector<std::vector<double>>& m,
                                       const std::vector<double>& e) {
  const std::size_t n = e.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += m[i][j] * e[j];
  return out;
}

struct DenseFlow {
  std::vector<double> e;
  std::size_t iterations = 0;
  bool converged = false;
};

// Full dense iteration from a uniform start; the reference for run_flow.
inline DenseFlow dense_flow(const fands::IncoGraph& graph, double p = 0.5,
                            double tol = 1e-9, std::size_t max_iters = 100000,
                            double initial = 100.0) {
  DenseFlow result;
  result.e.assign(graph.node_count(), initial);
  const double total = initial * static_cast<double>(graph.node_count());
  while (true) {
    auto next = dense_apply(dense_matrix(graph, result.e, p), result.e);
    double diff = 0.0;
    for (std::size_t i = 0; i < next.size(); ++i) diff += std::abs(next[i] - result.e[i]);
    if (diff <= tol * total) {
      result.converged = true;
      return result;
    }
    if (result.iterations >= max_iters) return result;
    result.e = std::move(next);
    ++result.iterations;
  }
}

// Random bipartite pair list: every chosen node ends up with degree >= 1.
// Multiple topics so multiplicities > 1 occur.
inline fands::PairList random_bipartite_pairs(std::mt19937& rng, int max_side = 100) {
  std::uniform_int_distribution<int> side_size(1, max_side);
  const int s = side_size(rng);
  const int t = side_size(rng);
  std::uniform_int_distribution<int> left(1, s);
  std::uniform_int_distribution<int> right(s + 1, s + t);
  std::uniform_int_distribution<std::int64_t> topic(1, 3);

  fands::PairList pairs;
  for (int a = 1; a <= s; ++a)
    pairs.pairs.push_back({static_cast<std::int64_t>(a), static_cast<std::int64_t>(right(rng)), topic(rng)});
  for (int b = s + 1; b <= s + t; ++b)
    pairs.pairs.push_back({static_cast<std::int64_t>(left(rng)), static_cast<std::int64_t>(b), topic(rng)});
  const int extra = std::uniform_int_distribution<int>(0, 2 * (s + t))(rng);
  for (int i = 0; i < extra; ++i)
    pairs.pairs.push_back({static_cast<std::int64_t>(left(rng)), static_cast<std::int64_t>(right(rng)), topic(rng)});
  return pairs;
}

// Unique scratch directory, removed on destruction.
class TempDir {
public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<unsigned> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("fands_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

} // namespace testsupport
