#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace metdim {

using Vertex = std::uint32_t;

struct Arc {
  Vertex from;
  Vertex to;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Immutable simple digraph on vertices 0..n-1.
///
/// Out- and in-adjacency are stored in CSR form and both are sorted by vertex
/// id, so `has_arc` is a binary search. Digons are two separate arcs.
class DiGraph {
 public:
  DiGraph() = default;

  /// Throws std::invalid_argument on a self-loop, an endpoint >= n or a
  /// duplicate arc.
  DiGraph(std::size_t n, std::vector<Arc> arcs);

  std::size_t order() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  /// All arcs, sorted by (from, to).
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  std::span<const Vertex> out_neighbors(Vertex v) const noexcept {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const Vertex> in_neighbors(Vertex v) const noexcept {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }

  std::size_t out_degree(Vertex v) const noexcept { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(Vertex v) const noexcept { return in_offsets_[v + 1] - in_offsets_[v]; }

  bool has_arc(Vertex u, Vertex v) const noexcept;
  bool has_digon(Vertex u, Vertex v) const noexcept { return has_arc(u, v) && has_arc(v, u); }

  friend bool operator==(const DiGraph& a, const DiGraph& b) { return a.n_ == b.n_ && a.arcs_ == b.arcs_; }

 private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Vertex> in_sources_;
};

/// Vertices with in-degree 0, ascending.
std::vector<Vertex> sources(const DiGraph& g);

/// Number of unordered pairs {u,v} joined by arcs in both directions.
std::size_t digon_count(const DiGraph& g);

/// Vertex sets are passed around as sorted, duplicate-free vectors.
std::vector<Vertex> normalized(std::vector<Vertex> set);

/// Subgraph induced by `vertices` (sorted, duplicate-free). Vertex i of the
/// result stands for vertices[i].
DiGraph induced_subgraph(const DiGraph& g, std::span<const Vertex> vertices);

/// Vertex sets of the weakly connected components, each ascending, ordered
/// by smallest member. Vertices flagged in `removed` (if non-empty) are
/// skipped.
std::vector<std::vector<Vertex>> weak_components(const DiGraph& g, std::span<const char> removed = {});

}  // namespace metdim
