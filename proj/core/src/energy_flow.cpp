#include "fands/energy_flow.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "fands/csv.hpp"
#include "fands/errors.hpp"
#include "fands/format.hpp"

namespace fands {

namespace {

template <typename T>
T parse_number(const std::string& text, const std::string& file, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw RecordError(file + ": malformed number \"" + text + "\"", line);
  return value;
}

double l1_sum(std::span<const double> v) {
  double total = 0.0;
  for (double x : v) total += x;
  return total;
}

double l1_diff(std::span<const double> a, std::span<const double> b) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::abs(a[i] - b[i]);
  return total;
}

} // namespace

void FlowParams::validate() const {
  if (!(p > 0.0) || !(p < 1.0))
    throw std::invalid_argument("p must lie strictly between 0 and 1");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
  if (!(initial_energy > 0.0))
    throw std::invalid_argument("initial_energy must be positive");
}

std::vector<double> attraction_factors(const EnergyState& state) {
  const std::size_t n = state.e.size();
  if (n < 2)
    throw DegenerateGraphError("attraction factors need at least two nodes");
  const double total = l1_sum(state.e);
  const double floor = 1e-12 * total;
  std::vector<double> af(n);
  for (std::size_t j = 0; j < n; ++j)
    af[j] = -std::log10(std::max(state.e[j], floor) / total);
  return af;
}

TransformationMatrix build_matrix(const IncoGraph& graph, const EnergyState& state,
                                  const FlowParams& params) {
  params.validate();
  const std::size_t n = graph.node_count();
  if (state.e.size() != n)
    throw std::invalid_argument("energy vector does not match the graph");
  const auto af = attraction_factors(state);

  TransformationMatrix m;
  m.retain_ = 1.0 - params.p;
  m.col_ptr_.assign(n + 1, 0);
  for (std::size_t j = 0; j < n; ++j)
    m.col_ptr_[j + 1] = m.col_ptr_[j] +
                        static_cast<std::size_t>(graph.degree(static_cast<int>(j)));
  m.row_.resize(m.col_ptr_.back());
  m.value_.resize(m.col_ptr_.back());

  for (std::size_t j = 0; j < n; ++j) {
    const auto& nbrs = graph.neighbors(static_cast<int>(j));
    double denom = 0.0;
    for (int k : nbrs) denom += af[static_cast<std::size_t>(k)];
    std::size_t slot = m.col_ptr_[j];
    for (int i : nbrs) {
      m.row_[slot] = i;
      m.value_[slot] = params.p * af[static_cast<std::size_t>(i)] / denom;
      ++slot;
    }
  }
  return m;
}

std::vector<double> TransformationMatrix::apply(std::span<const double> e) const {
  const std::size_t n = size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = retain_ * e[i];
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t s = col_ptr_[j]; s < col_ptr_[j + 1]; ++s)
      out[static_cast<std::size_t>(row_[s])] += value_[s] * e[j];
  return out;
}

double TransformationMatrix::column_sum(std::size_t j) const {
  double total = retain_;
  for (std::size_t s = col_ptr_[j]; s < col_ptr_[j + 1]; ++s) total += value_[s];
  return total;
}

double TransformationMatrix::at(std::size_t i, std::size_t j) const {
  if (i == j) return retain_;
  for (std::size_t s = col_ptr_[j]; s < col_ptr_[j + 1]; ++s)
    if (static_cast<std::size_t>(row_[s]) == i) return value_[s];
  return 0.0;
}

EnergyState step(const TransformationMatrix& m, const EnergyState& state) {
  if (m.size() != state.e.size())
    throw std::invalid_argument("matrix and energy vector sizes differ");
  EnergyState next;
  next.e = m.apply(state.e);
  next.iteration = state.iteration + 1;
  next.total = state.total;
  return next;
}

FlowResult run_flow(const IncoGraph& graph, const FlowParams& params) {
  params.validate();
  if (graph.node_count() < 2 || graph.edge_count() == 0)
    throw DegenerateGraphError("energy flow needs a graph with at least one edge");

  FlowResult result;
  EnergyState& state = result.state;
  state.e.assign(graph.node_count(), params.initial_energy);
  state.total = params.initial_energy * static_cast<double>(graph.node_count());
  state.iteration = 0;

  while (true) {
    const auto m = build_matrix(graph, state, params);
    auto next = m.apply(state.e);
    result.residual = l1_diff(next, state.e);
    if (result.residual <= params.tol * state.total) {
      result.converged = true; // returned state satisfies the residual bound
      break;
    }
    if (state.iteration >= params.max_iters) {
      result.converged = false;
      break;
    }
    state.e = std::move(next);
    ++state.iteration;
  }
  return result;
}

std::vector<double> relative_energy(const EnergyState& state) {
  if (state.e.empty()) return {};
  const double highest = *std::max_element(state.e.begin(), state.e.end());
  if (!(highest > 0.0))
    throw std::invalid_argument("relative energy needs a positive entry");
  std::vector<double> rel(state.e.size());
  for (std::size_t i = 0; i < state.e.size(); ++i) rel[i] = state.e[i] / highest;
  return rel;
}

std::vector<EnergyRow> energy_rows(const IncoGraph& graph, const EnergyState& state) {
  if (state.e.size() != graph.node_count())
    throw std::invalid_argument("energy vector does not match the graph");
  const auto rel = relative_energy(state);
  const auto comps = components(graph);
  const auto comp_of = component_index(graph, comps);
  std::vector<EnergyRow> rows(graph.node_count());
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    rows[i] = {graph.node_id(static_cast<int>(i)),
               graph.news_id(static_cast<int>(i)),
               state.e[i],
               rel[i],
               graph.degree(static_cast<int>(i)),
               comp_of[i]};
  }
  return rows;
}

void write_energy_csv(std::ostream& out, const IncoGraph& graph, const EnergyState& state) {
  out << "node_id,news_id,energy,relative_energy,degree,component\n";
  for (const auto& row : energy_rows(graph, state)) {
    out << row.node_id << ',' << row.news_id << ',' << format_double(row.energy)
        << ',' << format_double(row.relative_energy) << ',' << row.degree << ','
        << row.component << '\n';
  }
}

std::string energy_to_json(const IncoGraph& graph, const EnergyState& state) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& row : energy_rows(graph, state)) {
    nlohmann::ordered_json r;
    r["node_id"] = row.node_id;
    r["news_id"] = row.news_id;
    r["energy"] = row.energy;
    r["relative_energy"] = row.relative_energy;
    r["degree"] = row.degree;
    r["component"] = row.component;
    doc.push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

std::vector<EnergyRow> read_energy_rows(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open file: " + path.string());
  std::vector<EnergyRow> rows;
  if (path.extension() == ".json") {
    nlohmann::json doc;
    try {
      in >> doc;
      for (const auto& r : doc) {
        rows.push_back({r.at("node_id").get<int>(), r.at("news_id").get<std::int64_t>(),
                        r.at("energy").get<double>(), r.at("relative_energy").get<double>(),
                        r.at("degree").get<int>(), r.at("component").get<int>()});
      }
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(path.string() + ": invalid energies JSON: " + e.what());
    }
    return rows;
  }
  csv::Reader reader(in);
  std::vector<std::string> row;
  if (!reader.next(row)) return rows;
  const std::vector<std::string> expected{"node_id", "news_id", "energy",
                                          "relative_energy", "degree", "component"};
  if (row != expected)
    throw FormatError(path.string() + ": unexpected energies CSV header");
  while (reader.next(row)) {
    if (row.size() != expected.size())
      throw RecordError(path.string() + ": wrong field count", reader.record_line());
    const auto& file = path.string();
    const auto line = reader.record_line();
    rows.push_back({parse_number<int>(row[0], file, line),
                    parse_number<std::int64_t>(row[1], file, line),
                    parse_number<double>(row[2], file, line),
                    parse_number<double>(row[3], file, line),
                    parse_number<int>(row[4], file, line),
                    parse_number<int>(row[5], file, line)});
  }
  return rows;
}

std::string flow_meta_json(const FlowResult& result, const FlowParams& params) {
  nlohmann::ordered_json doc;
  doc["converged"] = result.converged;
  doc["iterations"] = result.state.iteration;
  doc["residual"] = result.residual;
  doc["tol"] = params.tol;
  doc["p"] = params.p;
  doc["initial_energy"] = params.initial_energy;
  doc["max_iters"] = params.max_iters;
  doc["total_energy"] = result.state.total;
  return doc.dump(2) + "\n";
}

} // namespace fands
