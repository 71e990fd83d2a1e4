#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "metdim/digraph.hpp"
#include "metdim/distances.hpp"
#include "metdim/resolver.hpp"

namespace metdim {

/// Node of a modular decomposition tree. Leaves are single vertices; an
/// internal node's children partition its vertex set into modules.
struct DecompositionNode {
  enum class Kind { Leaf, Parallel, Series, Prime };

  Kind kind = Kind::Leaf;
  std::vector<Vertex> vertices;  ///< ascending
  std::vector<DecompositionNode> children;

  bool is_leaf() const noexcept { return children.empty(); }
  Vertex representative() const noexcept { return vertices.front(); }
};

/// True when every vertex outside `set` relates to all of `set` the same way
/// (arc in, arc out, both, or neither).
bool is_module(const DiGraph& g, std::span<const Vertex> set);

/// Recursive decomposition. A node splits into weak components when
/// disconnected (Parallel), into co-components of the "not a digon" graph when
/// that graph is disconnected (Series), and otherwise into a greedy family of
/// maximal pairwise-disjoint proper modules plus singletons (Prime).
/// Throws std::invalid_argument on n == 0.
DecompositionNode modular_decomposition(const DiGraph& g);

/// Largest number of children of any node (0 for a single vertex).
std::size_t width(const DecompositionNode& node);
std::size_t node_count(const DecompositionNode& node);

/// s x s matrix of distances in G between child representatives. Throws
/// std::logic_error if two vertices of the same children disagree, which
/// means some child is not a module.
std::vector<std::vector<Distance>> quotient_distances(const DecompositionNode& node, const DistanceTable& dist);

/// Bit set over d in {1..max_distance} and infinity: bit d-1 for finite d,
/// bit max_distance for infinity.
using Profile = std::uint64_t;

struct ProfileSpace {
  Distance max_distance = 0;

  Profile bit(Distance d) const noexcept { return d == kInf ? Profile{1} << max_distance : Profile{1} << (d - 1); }
  Profile infinity() const noexcept { return Profile{1} << max_distance; }
  Profile full() const noexcept { return (infinity() << 1) - 1; }
};

/// p_d is set iff some x in `module` has dist(w, x) = d for every w in `set`.
Profile profile_of(const DistanceTable& dist, std::span<const Vertex> set, std::span<const Vertex> module,
                   const ProfileSpace& space);

/// Combination rules at one node. `selected[i]` matters for single-vertex
/// children, `profiles[i]` for the others. Returns the parent profile when
/// conditions (a)-(c) hold, nullopt otherwise.
std::optional<Profile> check_conditions(const DecompositionNode& node, const DistanceTable& dist,
                                        const ProfileSpace& space, std::span<const char> selected,
                                        std::span<const Profile> profiles);

struct TableEntry {
  std::size_t size = 0;
  std::vector<Vertex> witness;  ///< ascending
};
/// Profile -> cheapest set realising it that resolves the factor in G.
using DpTable = std::map<Profile, TableEntry>;

/// Limits on one node's enumeration; CapExceeded beyond them.
inline constexpr std::size_t kMaxTrivialChildren = 20;
inline constexpr std::uint64_t kMaxCombinations = std::uint64_t{1} << 26;
/// Largest n the command-line front end hands to this solver by default.
inline constexpr std::size_t kDefaultModwidthCap = 128;

/// Table of a non-leaf node from its children's tables (`child_tables[i]` is
/// ignored for leaf children).
DpTable dp_factor(const DecompositionNode& node, const DistanceTable& dist, const ProfileSpace& space,
                  std::span<const DpTable> child_tables);

struct ModwidthResult {
  Basis basis;
  std::size_t width = 0;
  Distance max_distance = 0;
  std::size_t root_profiles = 0;
};

/// Exact strong or weak metric dimension by dynamic programming over the
/// decomposition. The basis is verified before returning.
ModwidthResult metric_dimension_modwidth(const DiGraph& g, Mode mode);

}  // namespace metdim
