#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metdim/digraph.hpp"
#include "metdim/distances.hpp"

namespace metdim {

/// Strong: every vertex must be reachable from the set. Weak: one vertex may
/// be unreachable from all of it.
enum class Mode { Strong, Weak };

std::string_view to_string(Mode mode) noexcept;

/// A candidate resolving set and where it came from.
struct Basis {
  std::vector<Vertex> vertices;  ///< sorted, duplicate-free
  Mode mode = Mode::Strong;
  std::string producer;
  bool verified = false;

  std::size_t size() const noexcept { return vertices.size(); }
};

/// Outcome of a resolving check. On failure exactly one witness is set: the
/// lexicographically smallest pair with equal distance vectors, or (Strong
/// mode, no such pair) the smallest vertex unreachable from the whole set.
struct ResolveResult {
  bool resolving = false;
  std::optional<std::pair<Vertex, Vertex>> unresolved_pair;
  std::optional<Vertex> unreachable;

  explicit operator bool() const noexcept { return resolving; }
};

/// vectors[v][i] = dist(s_i, v) where s_0 < s_1 < ... are the members of S.
std::vector<std::vector<Distance>> distance_vectors(const DiGraph& g, std::span<const Vertex> set);

/// Exact check. O(|S| (n + m) + |S| n log n) time, O(n) extra memory.
ResolveResult is_resolving(const DiGraph& g, std::span<const Vertex> set, Mode mode);

/// Cheaper check for very large graphs: reachability is checked exactly, but
/// distinctness only among `anchors` random vertices and their neighbours.
/// A `resolving == true` answer is therefore not a certificate.
ResolveResult is_resolving_sampled(const DiGraph& g, std::span<const Vertex> set, Mode mode, std::size_t anchors,
                                   std::uint64_t seed);

/// Returns `basis` with `verified` recomputed; the vertex set is untouched.
Basis verify_basis(const DiGraph& g, Basis basis);

}  // namespace metdim
