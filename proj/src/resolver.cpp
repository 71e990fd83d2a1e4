#include "metdim/resolver.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "metdim/generate.hpp"

namespace metdim {

std::string_view to_string(Mode mode) noexcept { return mode == Mode::Strong ? "strong" : "weak"; }

std::vector<std::vector<Distance>> distance_vectors(const DiGraph& g, std::span<const Vertex> set) {
  auto members = normalized({set.begin(), set.end()});
  std::vector<std::vector<Distance>> vectors(g.order(), std::vector<Distance>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto row = bfs_distances(g, members[i]);
    for (Vertex v = 0; v < g.order(); ++v) vectors[v][i] = row[v];
  }
  return vectors;
}

namespace {

// Smallest (u, v), u < v, among vertices sharing a class id.
std::optional<std::pair<Vertex, Vertex>> smallest_collision(const std::vector<std::uint32_t>& cls,
                                                            const std::vector<Vertex>& order) {
  std::unordered_map<std::uint32_t, Vertex> first;
  std::optional<std::pair<Vertex, Vertex>> best;
  for (Vertex v : order) {
    auto [it, fresh] = first.try_emplace(cls[v], v);
    if (fresh) continue;
    std::pair<Vertex, Vertex> cand{it->second, v};
    if (!best || cand < *best) best = cand;
  }
  return best;
}

ResolveResult finish(std::optional<std::pair<Vertex, Vertex>> pair, const std::vector<char>& reached,
                     std::span<const Vertex> checked, Mode mode) {
  ResolveResult r;
  if (pair) {
    r.unresolved_pair = pair;
    return r;
  }
  if (mode == Mode::Strong) {
    for (Vertex v : checked) {
      if (!reached[v]) {
        r.unreachable = v;
        return r;
      }
    }
  }
  r.resolving = true;
  return r;
}

std::vector<char> reached_from(const DiGraph& g, std::span<const Vertex> set) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> queue;
  for (Vertex s : set) {
    if (!seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex v : g.out_neighbors(queue[head])) {
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace

ResolveResult is_resolving(const DiGraph& g, std::span<const Vertex> set, Mode mode) {
  const std::size_t n = g.order();
  auto members = normalized({set.begin(), set.end()});

  // Partition refinement: after processing s_0..s_i, two vertices share a
  // class iff their distance vectors agree on s_0..s_i.
  std::vector<std::uint32_t> cls(n, 0);
  std::unordered_map<std::uint64_t, std::uint32_t> relabel;
  for (Vertex s : members) {
    auto row = bfs_distances(g, s);
    relabel.clear();
    relabel.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
      std::uint64_t key = (static_cast<std::uint64_t>(cls[v]) << 32) | row[v];
      auto [it, fresh] = relabel.try_emplace(key, static_cast<std::uint32_t>(relabel.size()));
      cls[v] = it->second;
    }
  }

  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  return finish(smallest_collision(cls, all), reached_from(g, members), all, mode);
}

ResolveResult is_resolving_sampled(const DiGraph& g, std::span<const Vertex> set, Mode mode, std::size_t anchors,
                                   std::uint64_t seed) {
  const std::size_t n = g.order();
  auto members = normalized({set.begin(), set.end()});
  std::mt19937_64 rng(seed);

  std::vector<Vertex> sample;
  for (std::size_t i = 0; i < anchors && n > 0; ++i) {
    auto a = static_cast<Vertex>(uniform_below(rng, n));
    sample.push_back(a);
    for (Vertex v : g.out_neighbors(a)) sample.push_back(v);
    for (Vertex v : g.in_neighbors(a)) sample.push_back(v);
  }
  sample = normalized(std::move(sample));

  // Column of each sampled vertex: dist(s, x) for s in members.
  std::vector<std::vector<Distance>> columns;
  columns.reserve(sample.size());
  for (Vertex x : sample) {
    auto back = reverse_bfs_distances(g, x);
    std::vector<Distance> col(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) col[i] = back[members[i]];
    columns.push_back(std::move(col));
  }
  std::vector<std::uint32_t> cls(n, 0);
  std::vector<std::size_t> idx(sample.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return columns[a] < columns[b]; });
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0 && columns[idx[i]] != columns[idx[i - 1]]) ++next;
    cls[sample[idx[i]]] = next;
  }

  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  return finish(smallest_collision(cls, sample), reached_from(g, members), all, mode);
}

Basis verify_basis(const DiGraph& g, Basis basis) {
  basis.verified = is_resolving(g, basis.vertices, basis.mode).resolving;
  return basis;
}

}  // namespace metdim
