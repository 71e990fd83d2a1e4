#include "metdim/generate.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace metdim {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

bool bernoulli(std::mt19937_64& rng, double p) {
  // 53 random bits -> [0,1)
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

namespace {

using Edge = std::pair<Vertex, Vertex>;

void check_prob(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
}

// Linear-time Pruefer decoding of a uniform random labelled tree.
std::vector<Edge> random_labelled_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  if (n == 2) return {{0, 1}};
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(uniform_below(rng, n));
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];

  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = static_cast<Vertex>(ptr);
  for (Vertex v : code) {
    edges.push_back({leaf, v});
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = static_cast<Vertex>(ptr);
    }
  }
  edges.push_back({leaf, static_cast<Vertex>(n - 1)});
  return edges;
}

std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
  return perm;
}

void orient(const std::vector<Edge>& edges, double digon_prob, std::mt19937_64& rng, std::vector<Arc>& arcs) {
  for (auto [u, v] : edges) {
    if (bernoulli(rng, digon_prob)) {
      arcs.push_back({u, v});
      arcs.push_back({v, u});
    } else if (bernoulli(rng, 0.5)) {
      arcs.push_back({u, v});
    } else {
      arcs.push_back({v, u});
    }
  }
}

// Cycle on the first cycle_len labels of a random permutation; remaining
// vertices attach via `parent_of(i)` which returns an earlier position.
template <typename ParentOf>
DiGraph unicyclic(std::size_t n, std::size_t cycle_len, std::mt19937_64& rng, ParentOf&& parent_of, bool shuffle) {
  if (cycle_len < 3 || cycle_len > n) throw std::invalid_argument("cycle_len must lie in [3, n]");
  std::vector<Vertex> label(n);
  if (shuffle) {
    label = random_permutation(n, rng);
  } else {
    for (std::size_t i = 0; i < n; ++i) label[i] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < cycle_len; ++i) edges.push_back({label[i], label[(i + 1) % cycle_len]});
  for (std::size_t i = cycle_len; i < n; ++i) edges.push_back({label[parent_of(i)], label[i]});
  std::vector<Arc> arcs;
  arcs.reserve(n);
  orient(edges, 0.0, rng, arcs);
  return DiGraph(n, std::move(arcs));
}

}  // namespace

DiGraph random_instance(InstanceClass cls, std::size_t n, const GenParams& params, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  check_prob(params.digon_prob, "digon_prob");
  check_prob(params.arc_prob, "arc_prob");
  std::mt19937_64 rng(seed);
  std::vector<Arc> arcs;

  switch (cls) {
    case InstanceClass::DiTree: {
      orient(random_labelled_tree(n, rng), params.digon_prob, rng, arcs);
      return DiGraph(n, std::move(arcs));
    }
    case InstanceClass::OrientedUnicyclic: {
      return unicyclic(n, params.cycle_len, rng, [&](std::size_t i) { return uniform_below(rng, i); }, true);
    }
    case InstanceClass::Dag: {
      auto order = random_permutation(n, rng);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (bernoulli(rng, params.arc_prob)) arcs.push_back({order[i], order[j]});
        }
      }
      return DiGraph(n, std::move(arcs));
    }
    case InstanceClass::Random: {
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          if (u != v && bernoulli(rng, params.arc_prob)) arcs.push_back({u, v});
        }
      }
      return DiGraph(n, std::move(arcs));
    }
  }
  throw std::invalid_argument("unknown instance class");
}

DiGraph path_heavy_instance(InstanceClass cls, std::size_t n, const GenParams& params, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  check_prob(params.digon_prob, "digon_prob");
  std::mt19937_64 rng(seed);
  auto parent_of = [&](std::size_t i) -> std::size_t {
    return bernoulli(rng, 0.9) ? i - 1 : uniform_below(rng, i);
  };
  switch (cls) {
    case InstanceClass::DiTree: {
      std::vector<Edge> edges;
      edges.reserve(n);
      for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<Vertex>(parent_of(i)), static_cast<Vertex>(i)});
      std::vector<Arc> arcs;
      arcs.reserve(2 * n);
      orient(edges, params.digon_prob, rng, arcs);
      return DiGraph(n, std::move(arcs));
    }
    case InstanceClass::OrientedUnicyclic:
      return unicyclic(n, params.cycle_len, rng, parent_of, false);
    default:
      throw std::invalid_argument("path-heavy instances exist for DiTree and OrientedUnicyclic only");
  }
}

}  // namespace metdim
