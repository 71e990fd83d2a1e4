#include "metdim/reduction.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "metdim/io.hpp"
#include "metdim/oracle.hpp"

namespace metdim {

namespace {

std::vector<std::vector<Vertex>> neighbour_lists(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

bool connected_without(const std::vector<std::vector<Vertex>>& adj, std::size_t skip) {
  const std::size_t n = adj.size();
  std::vector<char> seen(n, 0);
  std::size_t start = n;
  for (std::size_t v = 0; v < n && start == n; ++v) {
    if (v != skip) start = v;
  }
  if (start == n) return true;
  std::vector<Vertex> stack{static_cast<Vertex>(start)};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v]) {
      if (w != skip && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n - (skip < n ? 1 : 0);
}

Edge ordered(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Position of w in the rotation of v.
std::size_t rotation_slot(const VcInstance& inst, Vertex v, Vertex w) {
  const auto& r = inst.rotation[v];
  return static_cast<std::size_t>(std::find(r.begin(), r.end(), w) - r.begin());
}

}  // namespace

std::size_t VcInstance::edge_index(Vertex u, Vertex v) const noexcept {
  const Edge e = ordered(u, v);
  return static_cast<std::size_t>(std::find(edges.begin(), edges.end(), e) - edges.begin());
}

void validate(const VcInstance& inst) {
  const std::size_t n = inst.n;
  std::set<Edge> seen;
  std::vector<std::size_t> degree(n, 0);
  for (auto [u, v] : inst.edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (u > v) throw std::invalid_argument("edges must be stored with the smaller endpoint first");
    if (!seen.insert({u, v}).second) {
      throw std::invalid_argument("repeated edge " + std::to_string(u) + " " + std::to_string(v));
    }
    ++degree[u];
    ++degree[v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] != 3) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]));
    }
  }
  if (inst.rotation.size() != n) throw std::invalid_argument("rotation must list every vertex");
  for (Vertex v = 0; v < n; ++v) {
    auto r = inst.rotation[v];
    std::sort(r.begin(), r.end());
    for (std::size_t i = 0; i < 3; ++i) {
      const bool repeated = i > 0 && r[i] == r[i - 1];
      if (repeated || r[i] >= n || !seen.count(ordered(v, r[i]))) {
        throw std::invalid_argument("rotation of vertex " + std::to_string(v) + " is not its neighbourhood");
      }
    }
  }
  std::vector<char> covered(n, 0);
  for (std::size_t i : inst.matching) {
    if (i >= inst.edges.size()) throw std::invalid_argument("matching refers to a missing edge");
    auto [u, v] = inst.edges[i];
    if (covered[u] || covered[v]) throw std::invalid_argument("matching edges share a vertex");
    covered[u] = covered[v] = 1;
  }
  if (inst.matching.size() * 2 != n) throw std::invalid_argument("matching is not perfect");
}

bool is_two_connected(std::size_t n, std::span<const Edge> edges) {
  const auto adj = neighbour_lists(n, edges);
  if (!connected_without(adj, n)) return false;
  for (std::size_t v = 0; v < n; ++v) {
    if (!connected_without(adj, v)) return false;
  }
  return n >= 3;
}

std::size_t face_count(const VcInstance& inst) {
  // A dart (u, v) is followed by (v, w) with w after u clockwise around v.
  std::set<Edge> seen;
  std::size_t faces = 0;
  for (auto [a, b] : inst.edges) {
    for (Edge start : {Edge{a, b}, Edge{b, a}}) {
      if (seen.count(start)) continue;
      ++faces;
      Edge dart = start;
      while (seen.insert(dart).second) {
        auto [u, v] = dart;
        dart = {v, inst.rotation[v][(rotation_slot(inst, v, u) + 1) % 3]};
      }
    }
  }
  return faces;
}

std::vector<std::size_t> find_perfect_matching(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].first].push_back(i);
    incident[edges[i].second].push_back(i);
  }
  std::vector<char> matched(n, 0);
  std::vector<std::size_t> chosen;
  std::function<bool()> extend = [&]() {
    std::size_t v = 0;
    while (v < n && matched[v]) ++v;
    if (v == n) return true;
    for (std::size_t i : incident[v]) {
      const Vertex w = edges[i].first == v ? edges[i].second : edges[i].first;
      if (matched[w]) continue;
      matched[v] = matched[w] = 1;
      chosen.push_back(i);
      if (extend()) return true;
      chosen.pop_back();
      matched[v] = matched[w] = 0;
    }
    return false;
  };
  if (n % 2 != 0 || !extend()) return {};
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

VcInstance parse_vc_instance(std::string_view text) {
  VcInstance inst;
  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
      ++no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      lines.emplace_back(no, line.substr(first));
    }
  }
  std::size_t at = 0;
  auto numbers = [&](std::size_t want) {
    if (at >= lines.size()) throw ParseError(0, "unexpected end of input");
    std::istringstream in(lines[at].second);
    std::vector<std::uint64_t> values;
    std::string word;
    while (in >> word) {
      std::uint64_t x = 0;
      try {
        std::size_t used = 0;
        x = std::stoull(word, &used);
        if (used != word.size()) throw std::invalid_argument(word);
      } catch (const std::exception&) {
        throw ParseError(lines[at].first, "expected an integer, got \"" + word + "\"");
      }
      values.push_back(x);
    }
    if (values.size() != want) {
      throw ParseError(lines[at].first, "expected " + std::to_string(want) + " integers");
    }
    ++at;
    return values;
  };
  auto keyword = [&](std::string_view word) {
    if (at < lines.size() && lines[at].second.rfind(word, 0) == 0) {
      ++at;
      return true;
    }
    return false;
  };

  const auto header = numbers(2);
  inst.n = header[0];
  if (inst.n > (std::uint64_t{1} << 20)) throw ParseError(lines[0].first, "too many vertices");
  for (std::uint64_t i = 0; i < header[1]; ++i) {
    const std::size_t line_no = at < lines.size() ? lines[at].first : 0;
    const auto e = numbers(2);
    if (e[0] >= inst.n || e[1] >= inst.n) throw ParseError(line_no, "endpoint out of range");
    inst.edges.push_back(ordered(static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1])));
  }
  if (!keyword("rotation:")) throw ParseError(at < lines.size() ? lines[at].first : 0, "expected \"rotation:\"");
  for (std::size_t v = 0; v < inst.n; ++v) {
    const auto r = numbers(3);
    inst.rotation.push_back({static_cast<Vertex>(r[0]), static_cast<Vertex>(r[1]), static_cast<Vertex>(r[2])});
  }
  if (keyword("matching:")) {
    while (at < lines.size()) {
      const std::size_t line_no = lines[at].first;
      const auto e = numbers(2);
      const std::size_t i = inst.edge_index(static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1]));
      if (i == inst.edges.size()) throw ParseError(line_no, "matching edge is not an edge");
      inst.matching.push_back(i);
    }
  } else {
    if (at < lines.size()) throw ParseError(lines[at].first, "expected \"matching:\" or end of input");
    inst.matching = find_perfect_matching(inst.n, inst.edges);
  }
  try {
    validate(inst);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  return inst;
}

std::string format_vc_instance(const VcInstance& inst) {
  std::ostringstream out;
  out << inst.n << ' ' << inst.edges.size() << '\n';
  for (auto [u, v] : inst.edges) out << u << ' ' << v << '\n';
  out << "rotation:\n";
  for (const auto& r : inst.rotation) out << r[0] << ' ' << r[1] << ' ' << r[2] << '\n';
  out << "matching:\n";
  for (std::size_t i : inst.matching) out << inst.edges[i].first << ' ' << inst.edges[i].second << '\n';
  return out.str();
}

std::vector<VcInstance> builtin_instances() {
  VcInstance k4;
  k4.name = "k4";
  k4.n = 4;
  k4.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  // 3 drawn inside the triangle 0 1 2
  k4.rotation = {{{2, 3, 1}}, {{0, 3, 2}}, {{1, 3, 0}}, {{0, 2, 1}}};
  k4.matching = {0, 5};

  VcInstance prism;
  prism.name = "prism";
  prism.n = 6;
  prism.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
  // triangle 3 4 5 drawn inside triangle 0 1 2
  prism.rotation = {{{2, 3, 1}}, {{0, 4, 2}}, {{1, 5, 0}}, {{0, 5, 4}}, {{3, 5, 1}}, {{4, 3, 2}}};
  prism.matching = {2, 4, 5};

  return {k4, prism};
}

VcInstance builtin_instance(std::string_view name) {
  for (auto& inst : builtin_instances()) {
    if (inst.name == name) return inst;
  }
  throw std::invalid_argument("unknown instance \"" + std::string(name) + "\" (expected k4 or prism)");
}

Gadget build_gadget(const VcInstance& inst) {
  validate(inst);
  Gadget out;
  auto& map = out.map;
  Vertex next = static_cast<Vertex>(inst.n);
  std::vector<Arc> arcs;

  map.in_matching.assign(inst.edges.size(), 0);
  for (std::size_t i : inst.matching) map.in_matching[i] = 1;

  for (auto [u, v] : inst.edges) {
    EdgeGadget e{next, next + 1, next + 2, next + 3, next + 4};
    next += 5;
    arcs.insert(arcs.end(), {{e.a, e.b}, {e.b, e.c}, {e.c, e.du}, {e.c, e.dv}, {u, e.du}, {v, e.dv}});
    map.edge.push_back(e);
  }
  for (std::size_t i : inst.matching) {
    auto [u, v] = inst.edges[i];
    const auto& ru = inst.rotation[u];
    const auto& rv = inst.rotation[v];
    const std::size_t pu = rotation_slot(inst, u, v);
    const std::size_t pv = rotation_slot(inst, v, u);
    MatchingGadget m{i, next, next + 1, next + 2, 0, 0, 0, 0};
    next += 3;
    m.ux = inst.edge_index(u, ru[(pu + 1) % 3]);
    m.uy = inst.edge_index(u, ru[(pu + 2) % 3]);
    m.vs = inst.edge_index(v, rv[(pv + 1) % 3]);
    m.vt = inst.edge_index(v, rv[(pv + 2) % 3]);
    const Vertex c = map.edge[i].c;
    arcs.insert(arcs.end(), {{m.f, m.g},
                             {m.g, c},
                             {m.g, m.h},
                             {m.h, u},
                             {m.h, v},
                             {c, map.edge[m.uy].c},
                             {c, map.edge[m.vs].c},
                             {m.h, map.edge[m.ux].c},
                             {m.h, map.edge[m.vt].c}});
    map.matched.push_back(m);
  }
  out.graph = DiGraph(next, std::move(arcs));
  return out;
}

bool is_vertex_cover(std::span<const Edge> edges, std::span<const Vertex> cover) {
  auto has = [&](Vertex v) { return std::find(cover.begin(), cover.end(), v) != cover.end(); };
  return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return has(e.first) || has(e.second); });
}

Basis resolving_from_cover(const VcInstance& inst, const Gadget& gadget, std::span<const Vertex> cover) {
  for (Vertex v : cover) {
    if (v >= inst.n) throw std::invalid_argument("cover vertex " + std::to_string(v) + " out of range");
  }
  if (!is_vertex_cover(inst.edges, cover)) throw std::invalid_argument("not a vertex cover");
  Basis basis;
  basis.mode = Mode::Strong;
  basis.producer = "reduction";
  basis.vertices.assign(cover.begin(), cover.end());
  for (const auto& e : gadget.map.edge) basis.vertices.push_back(e.a);
  for (const auto& m : gadget.map.matched) basis.vertices.push_back(m.f);
  basis.vertices = normalized(std::move(basis.vertices));
  return basis;
}

std::vector<Vertex> cover_from_resolving(const VcInstance& inst, const Gadget& gadget, std::span<const Vertex> set) {
  if (!is_resolving(gadget.graph, set, Mode::Strong)) {
    throw std::invalid_argument("set does not strongly resolve the gadget");
  }
  std::vector<char> in_set(gadget.graph.order(), 0);
  for (Vertex v : set) in_set[v] = 1;
  std::vector<char> in_cover(inst.n, 0);
  for (Vertex v = 0; v < inst.n; ++v) in_cover[v] = in_set[v];

  auto count = [&](std::initializer_list<Vertex> vs) {
    std::size_t k = 0;
    for (Vertex v : vs) k += in_set[v];
    return k;
  };
  auto add_one = [&](Vertex u, Vertex v) {
    if (!in_cover[u]) {
      in_cover[u] = 1;
    } else {
      in_cover[v] = 1;
    }
  };
  auto apply = [&](std::size_t i, std::size_t hits, std::size_t one) {
    auto [u, v] = inst.edges[i];
    if (hits > one) {
      in_cover[u] = in_cover[v] = 1;
    } else if (hits == one) {
      add_one(u, v);
    }
  };

  for (const auto& m : gadget.map.matched) {
    const auto& e = gadget.map.edge[m.edge];
    apply(m.edge, count({e.a, e.b, e.c, m.f, m.g, m.h, e.du, e.dv}), 3);
  }
  for (std::size_t i = 0; i < inst.edges.size(); ++i) {
    if (gadget.map.in_matching[i]) continue;
    const auto& e = gadget.map.edge[i];
    apply(i, count({e.a, e.b, e.c, e.du, e.dv}), 2);
  }
  std::vector<Vertex> cover;
  for (Vertex v = 0; v < inst.n; ++v) {
    if (in_cover[v]) cover.push_back(v);
  }
  return cover;
}

std::vector<Vertex> brute_force_vertex_cover(std::size_t n, std::span<const Edge> edges) {
  if (n > kVertexCoverCap) {
    throw CapExceeded("vertex cover search is limited to " + std::to_string(kVertexCoverCap) + " vertices");
  }
  for (std::size_t k = 0; k <= n; ++k) {
    // subsets of size k in lexicographic order
    std::vector<Vertex> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);
    while (true) {
      if (is_vertex_cover(edges, pick)) return pick;
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {};
}

GadgetReport inspect_gadget(const DiGraph& g) {
  const std::size_t n = g.order();
  GadgetReport report;

  std::vector<std::size_t> indegree(n);
  std::deque<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    indegree[v] = g.in_degree(v);
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    Vertex v = ready.front();
    ready.pop_front();
    ++removed;
    for (Vertex w : g.out_neighbors(v)) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  report.acyclic = removed == n;

  std::vector<std::set<Vertex>> adj(n);
  for (const Arc& a : g.arcs()) {
    adj[a.from].insert(a.to);
    adj[a.to].insert(a.from);
  }
  report.triangle_free = true;
  for (Vertex u = 0; u < n && report.triangle_free; ++u) {
    for (Vertex v : adj[u]) {
      if (v <= u) continue;
      for (Vertex w : adj[v]) {
        if (w > v && adj[u].count(w)) report.triangle_free = false;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) report.max_degree = std::max(report.max_degree, g.in_degree(v) + g.out_degree(v));
  report.max_distance = bfs_all_pairs(g).max_finite();
  return report;
}

std::vector<ForcedPair> forced_pairs(const Gadget& gadget) {
  const std::size_t n = gadget.graph.order();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& e : gadget.map.edge) pairs.push_back({e.a, e.b});
  for (const auto& m : gadget.map.matched) pairs.push_back({m.f, m.g});

  std::vector<ForcedPair> out;
  for (auto [x, y] : pairs) {
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (v != x && v != y) rest.push_back(v);
    }
    out.push_back({x, y, is_resolving(gadget.graph, rest, Mode::Strong)});
  }
  return out;
}

}  // namespace metdim
