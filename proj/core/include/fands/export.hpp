#pragma once

#include <string>

#include "fands/energy_flow.hpp"
#include "fands/incograph.hpp"

namespace fands {

/// Graphviz output as an undirected `graph`; nodes carry an energy attribute
/// when a state is supplied. Byte-stable for identical inputs.
std::string to_dot(const IncoGraph& graph, const EnergyState* state = nullptr);

/// Conventional force-layout schema:
/// {nodes:[{id,component,degree,energy,relative_energy}],links:[{source,target}]}.
/// The two energy fields are present only when a state is supplied.
std::string to_force_json(const IncoGraph& graph, const EnergyState* state = nullptr);

} // namespace fands
