#include "metdim/distances.hpp"

#include <algorithm>

namespace metdim {

namespace {

template <typename Neighbors>
std::vector<Distance> bfs(std::size_t n, Vertex start, Neighbors&& neighbors) {
  std::vector<Distance> dist(n, kInf);
  std::vector<Vertex> queue;
  queue.reserve(n);
  dist[start] = 0;
  queue.push_back(start);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex v : neighbors(u)) {
      if (dist[v] == kInf) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<Distance> bfs_distances(const DiGraph& g, Vertex source) {
  return bfs(g.order(), source, [&](Vertex u) { return g.out_neighbors(u); });
}

std::vector<Distance> reverse_bfs_distances(const DiGraph& g, Vertex target) {
  return bfs(g.order(), target, [&](Vertex u) { return g.in_neighbors(u); });
}

Distance DistanceTable::max_finite() const noexcept {
  Distance best = 0;
  for (Distance d : data_) {
    if (d != kInf) best = std::max(best, d);
  }
  return best;
}

DistanceTable all_pairs_distances(const DiGraph& g) {
  const std::size_t n = g.order();
  DistanceTable table(n);
  for (Vertex v = 0; v < n; ++v) table(v, v) = 0;
  for (const Arc& a : g.arcs()) table(a.from, a.to) = 1;
  for (Vertex k = 0; k < n; ++k) {
    for (Vertex i = 0; i < n; ++i) {
      Distance ik = table(i, k);
      if (ik == kInf) continue;
      for (Vertex j = 0; j < n; ++j) {
        Distance kj = table(k, j);
        if (kj != kInf && ik + kj < table(i, j)) table(i, j) = ik + kj;
      }
    }
  }
  return table;
}

DistanceTable bfs_all_pairs(const DiGraph& g) {
  const std::size_t n = g.order();
  DistanceTable table(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto row = bfs_distances(g, v);
    for (Vertex w = 0; w < n; ++w) table(v, w) = row[w];
  }
  return table;
}

}  // namespace metdim
