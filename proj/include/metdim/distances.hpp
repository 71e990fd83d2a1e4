#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "metdim/digraph.hpp"

namespace metdim {

using Distance = std::uint32_t;

/// "Not reachable". Compares greater than every finite distance.
inline constexpr Distance kInf = std::numeric_limits<Distance>::max();

/// Hop distances from `source`; kInf where unreachable.
std::vector<Distance> bfs_distances(const DiGraph& g, Vertex source);

/// dist(v, target) for every v, via BFS over reversed arcs.
std::vector<Distance> reverse_bfs_distances(const DiGraph& g, Vertex target);

/// Dense n x n table, row-major by source.
class DistanceTable {
 public:
  DistanceTable() = default;
  explicit DistanceTable(std::size_t n) : n_(n), data_(n * n, kInf) {}

  std::size_t order() const noexcept { return n_; }

  Distance operator()(Vertex from, Vertex to) const noexcept { return data_[from * n_ + to]; }
  Distance& operator()(Vertex from, Vertex to) noexcept { return data_[from * n_ + to]; }

  std::span<const Distance> row(Vertex from) const noexcept { return {data_.data() + from * n_, n_}; }

  /// Largest finite off-diagonal entry, 0 when there is none.
  Distance max_finite() const noexcept;

  friend bool operator==(const DistanceTable&, const DistanceTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> data_;
};

/// Floyd-Warshall over unit arc lengths. O(n^3); meant for desk-scale graphs.
DistanceTable all_pairs_distances(const DiGraph& g);

/// Same table from one BFS per source. O(n (n + m)).
DistanceTable bfs_all_pairs(const DiGraph& g);

}  // namespace metdim
