#pragma once

// Graph builders and an independent brute-force reference shared by the tests.
// The reference deliberately avoids the library's BFS, resolver and oracle.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "metdim/digraph.hpp"
#include "metdim/resolver.hpp"

namespace testing_support {

using metdim::Arc;
using metdim::DiGraph;
using metdim::Mode;
using metdim::Vertex;

inline DiGraph make(std::size_t n, std::vector<Arc> arcs) { return DiGraph(n, std::move(arcs)); }

inline DiGraph directed_path(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
  return make(n, arcs);
}

inline DiGraph digon_path(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v + 1 < n; ++v) {
    arcs.push_back({v, v + 1});
    arcs.push_back({v + 1, v});
  }
  return make(n, arcs);
}

inline DiGraph directed_cycle(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v) arcs.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return make(n, arcs);
}

// x = 0 with arcs to 1..leaves
inline DiGraph out_star(std::size_t leaves) {
  std::vector<Arc> arcs;
  for (Vertex v = 1; v <= leaves; ++v) arcs.push_back({0, v});
  return make(leaves + 1, arcs);
}

inline DiGraph bidirected_complete(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) arcs.push_back({u, v});
    }
  }
  return make(n, arcs);
}

constexpr unsigned kUnreachable = std::numeric_limits<unsigned>::max();

// Floyd-Warshall on an adjacency matrix built straight from the arc list.
inline std::vector<std::vector<unsigned>> reference_distances(const DiGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<unsigned>> d(n, std::vector<unsigned>(n, kUnreachable));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const Arc& a : g.arcs()) d[a.from][a.to] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] != kUnreachable && d[k][j] != kUnreachable) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

inline bool reference_resolves(const std::vector<std::vector<unsigned>>& d, std::uint64_t mask, Mode mode) {
  const std::size_t n = d.size();
  std::set<std::vector<unsigned>> seen;
  std::size_t unreachable = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<unsigned> vec;
    bool reached = false;
    for (std::size_t s = 0; s < n; ++s) {
      if (mask >> s & 1) {
        vec.push_back(d[s][v]);
        reached = reached || d[s][v] != kUnreachable;
      }
    }
    if (!reached) ++unreachable;
    if (!seen.insert(vec).second) return false;
  }
  return mode == Mode::Strong ? unreachable == 0 : unreachable <= 1;
}

inline bool reference_resolves(const DiGraph& g, const std::vector<Vertex>& set, Mode mode) {
  std::uint64_t mask = 0;
  for (Vertex v : set) mask |= std::uint64_t{1} << v;
  return reference_resolves(reference_distances(g), mask, mode);
}

// Smallest resolving set size by trying every subset; n <= 20.
inline std::size_t reference_dimension(const DiGraph& g, Mode mode) {
  const std::size_t n = g.order();
  const auto d = reference_distances(g);
  std::size_t best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size < best && reference_resolves(d, mask, mode)) best = size;
  }
  return best;
}

// In-neighbourhood classes of size >= 2.
inline std::vector<std::vector<Vertex>> in_twin_classes(const DiGraph& g) {
  std::vector<std::pair<std::vector<Vertex>, Vertex>> keyed;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto in = g.in_neighbors(v);
    keyed.push_back({{in.begin(), in.end()}, v});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::vector<Vertex>> classes;
  for (std::size_t i = 0; i < keyed.size();) {
    std::size_t j = i;
    std::vector<Vertex> members;
    while (j < keyed.size() && keyed[j].first == keyed[i].first) members.push_back(keyed[j++].second);
    if (members.size() >= 2) classes.push_back(members);
    i = j;
  }
  return classes;
}

inline bool contains(const std::vector<Vertex>& set, Vertex v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

}  // namespace testing_support
