#include "metdim/scc.hpp"

#include <algorithm>

namespace metdim {

SccPartition strongly_connected_components(const DiGraph& g) {
  const std::size_t n = g.order();
  constexpr std::uint32_t kUnvisited = 0xFFFFFFFFu;

  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  // Explicit DFS frames: vertex and position in its out-list.
  std::vector<std::pair<Vertex, std::size_t>> frames;
  std::vector<std::vector<Vertex>> found;  // reverse topological order
  std::uint32_t next_index = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;

    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      auto out = g.out_neighbors(v);
      if (pos < out.size()) {
        Vertex w = out[pos++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      Vertex done = v;
      frames.pop_back();
      if (!frames.empty()) {
        Vertex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != done);
        std::sort(comp.begin(), comp.end());
        found.push_back(std::move(comp));
      }
    }
  }

  SccPartition part;
  part.component_of.resize(n);
  part.index_in_component.resize(n);
  part.components.reserve(found.size());
  for (auto it = found.rbegin(); it != found.rend(); ++it) {
    auto id = static_cast<std::uint32_t>(part.components.size());
    for (std::uint32_t i = 0; i < it->size(); ++i) {
      part.component_of[(*it)[i]] = id;
      part.index_in_component[(*it)[i]] = i;
    }
    part.components.push_back(std::move(*it));
  }
  return part;
}

}  // namespace metdim
