#include "metdim/classify.hpp"

#include <algorithm>

namespace metdim {

std::string_view to_string(ClassKind kind) noexcept {
  switch (kind) {
    case ClassKind::DiTree: return "DiTree";
    case ClassKind::OrientedUnicyclic: return "OrientedUnicyclic";
    case ClassKind::Dag: return "Dag";
    case ClassKind::Other: return "Other";
  }
  return "Other";
}

bool is_weakly_connected(const DiGraph& g) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (auto nbrs : {g.out_neighbors(u), g.in_neighbors(u)}) {
      for (Vertex v : nbrs) {
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          stack.push_back(v);
        }
      }
    }
  }
  return reached == n;
}

bool is_acyclic(const DiGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> indeg(n);
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    indeg[v] = g.in_degree(v);
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    Vertex u = ready.back();
    ready.pop_back();
    ++removed;
    for (Vertex v : g.out_neighbors(u)) {
      if (--indeg[v] == 0) ready.push_back(v);
    }
  }
  return removed == n;
}

std::size_t underlying_edge_count(const DiGraph& g) { return g.arc_count() - digon_count(g); }

namespace {

// Underlying simple neighbours of v (digons reported once), ascending.
std::vector<Vertex> underlying_neighbors(const DiGraph& g, Vertex v) {
  auto out = g.out_neighbors(v);
  auto in = g.in_neighbors(v);
  std::vector<Vertex> result;
  result.reserve(out.size() + in.size());
  std::set_union(out.begin(), out.end(), in.begin(), in.end(), std::back_inserter(result));
  return result;
}

std::vector<Vertex> unique_cycle(const DiGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = underlying_neighbors(g, v).size();
    if (degree[v] == 1) leaves.push_back(v);
  }
  std::vector<char> removed(n, 0);
  while (!leaves.empty()) {
    Vertex v = leaves.back();
    leaves.pop_back();
    removed[v] = 1;
    for (Vertex u : underlying_neighbors(g, v)) {
      if (!removed[u] && --degree[u] == 1) leaves.push_back(u);
    }
  }
  Vertex first = 0;
  while (first < n && removed[first]) ++first;
  if (first == n) return {};

  auto on_cycle = [&](Vertex v) { return !removed[v]; };
  std::vector<Vertex> around;
  for (Vertex u : underlying_neighbors(g, first)) {
    if (on_cycle(u)) around.push_back(u);
  }
  // around holds exactly two ascending ids.
  Vertex second = around[0];
  if (!g.has_arc(first, around[0]) && g.has_arc(first, around[1])) second = around[1];

  std::vector<Vertex> cycle{first};
  Vertex prev = first;
  Vertex cur = second;
  while (cur != first) {
    cycle.push_back(cur);
    Vertex next = cur;
    for (Vertex u : underlying_neighbors(g, cur)) {
      if (on_cycle(u) && u != prev) {
        next = u;
        break;
      }
    }
    prev = cur;
    cur = next;
  }
  return cycle;
}

}  // namespace

GraphClass classify(const DiGraph& g) {
  GraphClass result;
  const std::size_t n = g.order();
  if (n == 0 || !is_weakly_connected(g)) return result;

  const std::size_t digons = digon_count(g);
  const std::size_t edges = g.arc_count() - digons;
  if (edges == n - 1) {
    result.kind = ClassKind::DiTree;
    return result;
  }
  if (digons == 0 && edges == n) {
    result.kind = ClassKind::OrientedUnicyclic;
    result.cycle = unique_cycle(g);
    return result;
  }
  if (is_acyclic(g)) result.kind = ClassKind::Dag;
  return result;
}

}  // namespace metdim
