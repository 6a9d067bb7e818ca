#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fands/incograph.hpp"

namespace fands {

/// Parameters of the energy-flow iteration. The converged distribution does
/// not depend on p or on the initial energy (only the path to it does).
struct FlowParams {
  double p = 0.5;              // fraction of a node's energy emitted per step
  double tol = 1e-9;           // relative L1 convergence threshold
  std::size_t max_iters = 100000;
  double initial_energy = 100.0; // per node

  void validate() const; // throws std::invalid_argument
};

/// Energy vector indexed by graph node order, plus the conserved total.
struct EnergyState {
  std::vector<double> e;
  std::size_t iteration = 0;
  double total = 0.0;
};

/// One propagation step as a sparse column-stochastic matrix: each node keeps
/// 1-p of its energy and splits the emitted p across its neighbors in
/// proportion to the receivers' attraction factors.
class TransformationMatrix {
public:
  std::size_t size() const { return col_ptr_.size() - 1; }
  double retain() const { return retain_; }

  /// M * e, accumulated in fixed column order.
  std::vector<double> apply(std::span<const double> e) const;

  double column_sum(std::size_t j) const;
  /// Dense accessor, mainly for tests.
  double at(std::size_t i, std::size_t j) const;

private:
  friend TransformationMatrix build_matrix(const IncoGraph&, const EnergyState&,
                                           const FlowParams&);
  double retain_ = 0.5;             // diagonal value 1-p
  std::vector<std::size_t> col_ptr_; // CSC over the fixed adjacency pattern
  std::vector<int> row_;
  std::vector<double> value_;
};

/// AF(j) = -log10(e_j / sum(e)); entries are clamped to 1e-12 * total first
/// so the factor stays finite. Requires at least two nodes.
std::vector<double> attraction_factors(const EnergyState& state);

TransformationMatrix build_matrix(const IncoGraph& graph, const EnergyState& state,
                                  const FlowParams& params);

/// Applies one step; the total is carried over unchanged.
EnergyState step(const TransformationMatrix& m, const EnergyState& state);

struct FlowResult {
  EnergyState state;
  bool converged = false;
  double residual = 0.0; // L1 distance between M(E)*E and E at the returned state
};

/// Iterates from a uniform initial distribution until the L1 residual drops
/// below tol * total or max_iters steps have been taken. Non-convergence is
/// reported through the flag, never silently.
FlowResult run_flow(const IncoGraph& graph, const FlowParams& params = {});

/// Energies divided by the maximum entry; the top node maps to exactly 1.
std::vector<double> relative_energy(const EnergyState& state);

/// Converged-results table: node_id,news_id,energy,relative_energy,degree,component.
struct EnergyRow {
  int node_id = 0;
  std::int64_t news_id = 0;
  double energy = 0.0;
  double relative_energy = 0.0;
  int degree = 0;
  int component = 0;
};

std::vector<EnergyRow> energy_rows(const IncoGraph& graph, const EnergyState& state);
void write_energy_csv(std::ostream& out, const IncoGraph& graph, const EnergyState& state);
std::string energy_to_json(const IncoGraph& graph, const EnergyState& state);
/// Reads rows back from a .csv or .json file produced by the writers above.
std::vector<EnergyRow> read_energy_rows(const std::filesystem::path& path);

/// Sidecar convergence metadata as a JSON object string.
std::string flow_meta_json(const FlowResult& result, const FlowParams& params);

} // namespace fands
