#include "metdim/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace metdim {

DiGraph::DiGraph(std::size_t n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  for (const Arc& a : arcs_) {
    if (a.from >= n_ || a.to >= n_) {
      throw std::invalid_argument("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                                  ") has an endpoint >= n = " + std::to_string(n_));
    }
    if (a.from == a.to) throw std::invalid_argument("self-loop at vertex " + std::to_string(a.from));
  }
  std::sort(arcs_.begin(), arcs_.end());
  auto dup = std::adjacent_find(arcs_.begin(), arcs_.end());
  if (dup != arcs_.end()) {
    throw std::invalid_argument("duplicate arc (" + std::to_string(dup->from) + "," + std::to_string(dup->to) + ")");
  }

  out_offsets_.assign(n_ + 1, 0);
  in_offsets_.assign(n_ + 1, 0);
  for (const Arc& a : arcs_) {
    ++out_offsets_[a.from + 1];
    ++in_offsets_[a.to + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_targets_.resize(arcs_.size());
  in_sources_.resize(arcs_.size());
  std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    out_targets_[i] = arcs_[i].to;
    // arcs_ is sorted by source, so each in-list is filled in ascending order.
    in_sources_[in_fill[arcs_[i].to]++] = arcs_[i].from;
  }
}

bool DiGraph::has_arc(Vertex u, Vertex v) const noexcept {
  if (u >= n_ || v >= n_) return false;
  auto out = out_neighbors(u);
  return std::binary_search(out.begin(), out.end(), v);
}

std::vector<Vertex> sources(const DiGraph& g) {
  std::vector<Vertex> result;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.in_degree(v) == 0) result.push_back(v);
  }
  return result;
}

std::size_t digon_count(const DiGraph& g) {
  std::size_t count = 0;
  for (const Arc& a : g.arcs()) {
    if (a.from < a.to && g.has_arc(a.to, a.from)) ++count;
  }
  return count;
}

std::vector<Vertex> normalized(std::vector<Vertex> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

}  // namespace metdim

namespace metdim {

DiGraph induced_subgraph(const DiGraph& g, std::span<const Vertex> vertices) {
  std::vector<std::uint64_t> local(g.order(), 0);  // local id + 1
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i + 1;
  std::vector<Arc> arcs;
  for (Vertex v : vertices) {
    for (Vertex u : g.out_neighbors(v)) {
      if (local[u]) arcs.push_back({static_cast<Vertex>(local[v] - 1), static_cast<Vertex>(local[u] - 1)});
    }
  }
  return DiGraph(vertices.size(), std::move(arcs));
}

std::vector<std::vector<Vertex>> weak_components(const DiGraph& g, std::span<const char> removed) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  if (!removed.empty()) std::copy(removed.begin(), removed.end(), seen.begin());
  std::vector<std::vector<Vertex>> result;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto nbrs : {g.out_neighbors(v), g.in_neighbors(v)}) {
        for (Vertex u : nbrs) {
          if (!seen[u]) {
            seen[u] = 1;
            stack.push_back(u);
          }
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

}  // namespace metdim
