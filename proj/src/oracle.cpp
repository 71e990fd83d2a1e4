#include "metdim/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstring>

#include "metdim/distances.hpp"

namespace metdim {

std::vector<Vertex> forced_vertices(const DiGraph& g, Mode mode) {
  if (mode == Mode::Weak) return {};
  return sources(g);
}

namespace {

constexpr std::uint8_t kUnreached = 0xFF;
using Key = std::array<std::uint8_t, kMaxOracleCap>;

// Distances straight from the definition, one BFS per vertex; kept apart
// from the resolver's partition-refinement path.
class Checker {
 public:
  explicit Checker(const DiGraph& g) : n_(g.order()), dist_(n_ * n_), keys_(n_), order_(n_) {
    for (Vertex s = 0; s < n_; ++s) {
      auto row = bfs_distances(g, s);
      for (Vertex v = 0; v < n_; ++v) dist_[s * n_ + v] = row[v] == kInf ? kUnreached : static_cast<std::uint8_t>(row[v]);
    }
  }

  bool resolves(const std::vector<Vertex>& set, Mode mode) {
    const std::size_t k = set.size();
    for (Vertex v = 0; v < n_; ++v) {
      bool reached = false;
      for (std::size_t i = 0; i < k; ++i) {
        std::uint8_t d = dist_[set[i] * n_ + v];
        keys_[v][i] = d;
        reached = reached || d != kUnreached;
      }
      if (mode == Mode::Strong && !reached) return false;
      order_[v] = v;
    }
    std::sort(order_.begin(), order_.end(),
              [&](Vertex a, Vertex b) { return std::memcmp(keys_[a].data(), keys_[b].data(), k) < 0; });
    for (std::size_t i = 1; i < n_; ++i) {
      if (std::memcmp(keys_[order_[i]].data(), keys_[order_[i - 1]].data(), k) == 0) return false;
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> dist_;
  std::vector<Key> keys_;
  std::vector<Vertex> order_;
};

// Advances `idx` (strictly increasing, values < pool) to the next
// combination in lexicographic order. False when exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t pool) {
  const std::size_t r = idx.size();
  for (std::size_t i = r; i-- > 0;) {
    if (idx[i] < pool - r + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

OracleResult min_resolving_set(const DiGraph& g, Mode mode, std::size_t cap) {
  const std::size_t n = g.order();
  cap = std::min(cap, kMaxOracleCap);
  if (n > cap) {
    throw CapExceeded("exact oracle is limited to n <= " + std::to_string(cap) + " (got n = " + std::to_string(n) + ")");
  }

  Checker checker(g);
  OracleResult result;
  const auto srcs = sources(g);
  const auto forced = forced_vertices(g, mode);

  std::vector<Vertex> pool;
  for (Vertex v = 0; v < n; ++v) {
    if (!std::binary_search(forced.begin(), forced.end(), v)) pool.push_back(v);
  }
  std::vector<char> is_source(n, 0);
  for (Vertex s : srcs) is_source[s] = 1;

  const std::size_t start = mode == Mode::Strong ? forced.size() : (srcs.empty() ? 0 : srcs.size() - 1);
  std::vector<Vertex> cand;
  for (std::size_t k = start; k <= n; ++k) {
    const std::size_t r = k - forced.size();
    if (r > pool.size()) break;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    do {
      cand.clear();
      std::size_t missing_sources = srcs.size();
      std::size_t fi = 0;
      std::size_t pi = 0;
      // Merge forced and chosen pool members into one ascending set.
      while (fi < forced.size() || pi < r) {
        Vertex next;
        if (pi == r || (fi < forced.size() && forced[fi] < pool[idx[pi]])) {
          next = forced[fi++];
        } else {
          next = pool[idx[pi++]];
        }
        if (is_source[next]) --missing_sources;
        cand.push_back(next);
      }
      if (mode == Mode::Weak && missing_sources > 1) continue;
      ++result.candidates_checked;
      if (checker.resolves(cand, mode)) {
        result.dimension = k;
        result.witness = Basis{cand, mode, "exact", false};
        result.witness = verify_basis(g, std::move(result.witness));
        return result;
      }
    } while (r > 0 && next_combination(idx, pool.size()));
  }
  // Unreachable: the full vertex set always resolves.
  throw std::logic_error("exact oracle found no resolving set");
}

}  // namespace metdim
