#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "metdim/digraph.hpp"
#include "metdim/resolver.hpp"

namespace metdim {

inline constexpr std::uint32_t kNoIndex = std::numeric_limits<std::uint32_t>::max();

/// The cycle of an oriented unicyclic graph plus the per-vertex facts the
/// solver keys on. Cycle-indexed vectors use positions 0..len-1 in
/// traversal order; c_1 in the usual 1-based naming is position 0.
struct CycleContext {
  std::vector<Vertex> cycle;
  std::vector<std::uint32_t> position;  ///< per vertex; kNoIndex off the cycle

  std::vector<char> cycle_source;  ///< both cycle arcs leave the vertex
  std::vector<char> cycle_sink;    ///< both cycle arcs enter the vertex
  std::vector<char> external_in;   ///< has an in-neighbour off the cycle
  std::size_t cycle_sources = 0;
  std::size_t cycle_sinks = 0;
  std::size_t external_in_arcs = 0;  ///< arcs from off the cycle into it

  std::vector<char> source;                    ///< per vertex, in-degree 0
  std::vector<std::uint32_t> twin_class;       ///< per vertex; kNoIndex unless in a class of size >= 2
  std::vector<std::vector<Vertex>> twin_classes;  ///< ascending members

  std::size_t length() const noexcept { return cycle.size(); }
  /// Cycle vertex at position i, taken cyclically.
  Vertex at(std::int64_t i) const noexcept {
    const auto n = static_cast<std::int64_t>(cycle.size());
    return cycle[static_cast<std::size_t>(((i % n) + n) % n)];
  }
  bool on_cycle(Vertex v) const noexcept { return position[v] != kNoIndex; }
  bool is_twin(Vertex v) const noexcept { return twin_class[v] != kNoIndex; }
};

enum class PathKind { Fixable, Unfixable };

/// Directed path spanning from the near sink into its pendant tree.
struct ConcerningPath {
  std::vector<Vertex> path;  ///< path.front() is the near sink
  PathKind kind = PathKind::Fixable;
};

struct SpecialCaseResult {
  int fired = 0;  ///< 1..6, or 0 when no special case applies
  std::vector<Vertex> added;
};

/// Throws std::invalid_argument unless g is an oriented unicyclic graph.
CycleContext cycle_context(const DiGraph& g);

/// Concerning paths, classified. Empty unless the cycle has the two-source
/// shape: length 2k (k > 2), sources at positions i and i+2, sinks at i+1 and
/// i+1+k, and no twin or external in-arc on the rest of the cycle.
std::vector<ConcerningPath> detect_concerning_paths(const DiGraph& g, const CycleContext& ctx);

SpecialCaseResult apply_special_cases(const DiGraph& g, const CycleContext& ctx,
                                      std::span<const ConcerningPath> concerning);

/// For every in-twin class I, adds members until |I \ B| <= 1, by priority.
/// `in_basis` is indexed by vertex.
std::vector<Vertex> resolve_in_twins_prioritized(const CycleContext& ctx, std::span<const ConcerningPath> concerning,
                                                 std::span<const char> in_basis);

/// Minimum strong resolving set in linear time. The result is not verified.
Basis metric_basis_unicyclic(const DiGraph& g);

}  // namespace metdim
