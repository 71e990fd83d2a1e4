#pragma once

#include <cstdint>
#include <vector>

#include "metdim/digraph.hpp"

namespace metdim {

/// Strongly connected components.
///
/// Component ids follow a topological order of the condensation: every arc
/// between different components goes from a lower id to a higher id.
struct SccPartition {
  std::vector<std::uint32_t> component_of;
  /// Position of each vertex inside its component's vertex list.
  std::vector<std::uint32_t> index_in_component;
  /// Vertex lists, each sorted ascending.
  std::vector<std::vector<Vertex>> components;

  std::size_t count() const noexcept { return components.size(); }
  bool same(Vertex u, Vertex v) const noexcept { return component_of[u] == component_of[v]; }
  bool is_trivial(std::uint32_t c) const noexcept { return components[c].size() == 1; }
};

/// Iterative Tarjan; O(n + m) and safe for deep graphs.
SccPartition strongly_connected_components(const DiGraph& g);

}  // namespace metdim
