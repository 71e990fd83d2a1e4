#include "metdim/unicyclic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "metdim/classify.hpp"

namespace metdim {

CycleContext cycle_context(const DiGraph& g) {
  auto cls = classify(g);
  if (cls.kind != ClassKind::OrientedUnicyclic) throw std::invalid_argument("input is not an oriented unicyclic graph");
  const std::size_t n = g.order();

  CycleContext ctx;
  ctx.cycle = std::move(cls.cycle);
  const std::size_t len = ctx.cycle.size();
  ctx.position.assign(n, kNoIndex);
  for (std::uint32_t i = 0; i < len; ++i) ctx.position[ctx.cycle[i]] = i;

  ctx.cycle_source.assign(len, 0);
  ctx.cycle_sink.assign(len, 0);
  ctx.external_in.assign(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    const Vertex c = ctx.cycle[i];
    const Vertex prev = ctx.at(std::int64_t{i} - 1);
    const Vertex next = ctx.at(std::int64_t{i} + 1);
    const bool out_prev = g.has_arc(c, prev);
    const bool out_next = g.has_arc(c, next);
    ctx.cycle_source[i] = out_prev && out_next;
    ctx.cycle_sink[i] = !out_prev && !out_next;
    ctx.cycle_sources += ctx.cycle_source[i];
    ctx.cycle_sinks += ctx.cycle_sink[i];
    for (Vertex u : g.in_neighbors(c)) {
      if (!ctx.on_cycle(u)) {
        ctx.external_in[i] = 1;
        ++ctx.external_in_arcs;
      }
    }
  }

  ctx.source.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) ctx.source[v] = g.in_degree(v) == 0;

  // In-twins: equal nonempty in-neighbourhoods. Single in-neighbour classes
  // are bucketed directly; larger in-lists (rare in a unicyclic graph) go
  // through an ordered map.
  ctx.twin_class.assign(n, kNoIndex);
  auto take = [&](std::vector<Vertex> members) {
    if (members.size() < 2) return;
    const auto id = static_cast<std::uint32_t>(ctx.twin_classes.size());
    for (Vertex v : members) ctx.twin_class[v] = id;
    ctx.twin_classes.push_back(std::move(members));
  };
  // counting sort of the single-parent vertices by parent
  std::vector<std::uint32_t> start(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (g.in_degree(v) == 1) ++start[g.in_neighbors(v)[0] + 1];
  }
  for (std::size_t p = 0; p < n; ++p) start[p + 1] += start[p];
  std::vector<Vertex> children(start[n]);
  std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_list;
  for (Vertex v = 0; v < n; ++v) {
    auto in = g.in_neighbors(v);
    if (in.size() == 1) {
      children[fill[in[0]]++] = v;
    } else if (in.size() > 1) {
      by_list[{in.begin(), in.end()}].push_back(v);
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (start[p + 1] - start[p] >= 2) take({children.begin() + start[p], children.begin() + start[p + 1]});
  }
  for (auto& [key, members] : by_list) take(std::move(members));
  return ctx;
}

namespace {

// Sources at positions i and i+2 along some direction, sinks at i+1 and
// i+1+k. Returns the near sink, or kNoIndex.
std::uint32_t sixth_case_near_sink(const CycleContext& ctx) {
  const std::size_t len = ctx.length();
  if (ctx.cycle_sources != 2 || len % 2 != 0 || len / 2 <= 2) return kNoIndex;
  const std::int64_t k = static_cast<std::int64_t>(len / 2);
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(len); ++i) {
    if (!ctx.cycle_source[i]) continue;
    const auto pos = [&](std::int64_t j) { return ctx.position[ctx.at(j)]; };
    if (!ctx.cycle_source[pos(i + 2)] || !ctx.cycle_sink[pos(i + 1)] || !ctx.cycle_sink[pos(i + 1 + k)]) continue;
    bool clean = true;
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(len) && clean; ++j) {
      if (j == i || j == pos(i + 2)) continue;
      if (ctx.external_in[j] || ctx.is_twin(ctx.cycle[j])) clean = false;
    }
    if (clean) return pos(i + 1);
  }
  return kNoIndex;
}

}  // namespace

std::vector<ConcerningPath> detect_concerning_paths(const DiGraph& g, const CycleContext& ctx) {
  std::vector<ConcerningPath> paths;
  const std::uint32_t near = sixth_case_near_sink(ctx);
  if (near == kNoIndex) return paths;
  const std::size_t depth = ctx.length() / 2 - 2;
  const Vertex root = ctx.cycle[near];

  // Depth-first over out-arcs into in-degree-1 vertices off the cycle; every
  // vertex at depth k-2 closes one path.
  std::vector<Vertex> trail{root};
  std::vector<std::size_t> next_child{0};
  while (!trail.empty()) {
    const Vertex v = trail.back();
    if (trail.size() - 1 == depth) {
      paths.push_back({trail, PathKind::Fixable});
      trail.pop_back();
      next_child.pop_back();
      continue;
    }
    auto out = g.out_neighbors(v);
    std::size_t& idx = next_child.back();
    while (idx < out.size() && (ctx.on_cycle(out[idx]) || g.in_degree(out[idx]) != 1)) ++idx;
    if (idx == out.size()) {
      trail.pop_back();
      next_child.pop_back();
      continue;
    }
    trail.push_back(out[idx++]);
    next_child.push_back(0);
  }

  std::vector<char> on_path(g.order(), 0);
  for (const auto& p : paths) {
    for (Vertex v : p.path) on_path[v] = 1;
  }
  for (auto& p : paths) {
    bool unfixable = true;
    for (Vertex v : p.path) {
      if (!ctx.is_twin(v)) continue;
      for (Vertex w : ctx.twin_classes[ctx.twin_class[v]]) {
        if (!on_path[w]) unfixable = false;
      }
    }
    p.kind = unfixable ? PathKind::Unfixable : PathKind::Fixable;
  }
  return paths;
}

namespace {

bool has_private_out_neighbor(const DiGraph& g, const CycleContext& ctx, Vertex u) {
  for (Vertex v : g.out_neighbors(u)) {
    if (!ctx.on_cycle(v) && g.in_degree(v) == 1) return true;
  }
  return false;
}

// Case 4 with the short path walked in direction `dir` from source s to sink t.
bool fourth_case(const DiGraph& g, const CycleContext& ctx, std::int64_t s, std::int64_t t, int dir, Vertex& add) {
  const auto len = static_cast<std::int64_t>(ctx.length());
  const std::int64_t k = (((t - s) * dir) % len + len) % len;
  const std::int64_t longer = len - k;
  if (k <= 1 || longer < k) return false;
  if (!has_private_out_neighbor(g, ctx, ctx.at(t - dir))) return false;
  for (std::int64_t j = 1; j <= longer; ++j) {
    const Vertex c = ctx.at(s - dir * j);
    if (ctx.external_in[ctx.position[c]]) return false;
    if (j >= 2 && j < longer && ctx.is_twin(c)) return false;
  }
  add = ctx.at(s - dir);
  return true;
}

bool fifth_case(const DiGraph& g, const CycleContext& ctx, std::int64_t s, std::int64_t t) {
  const auto len = static_cast<std::int64_t>(ctx.length());
  const std::int64_t k = ((t - s) % len + len) % len;
  if (len != 2 * k || k <= 1) return false;
  if (!has_private_out_neighbor(g, ctx, ctx.at(t - 1)) || !has_private_out_neighbor(g, ctx, ctx.at(t + 1))) {
    return false;
  }
  for (std::int64_t j = 0; j < len; ++j) {
    if (j == ((s % len) + len) % len) continue;
    if (ctx.external_in[j]) return false;
  }
  const Vertex minus = ctx.at(s - 1);
  const Vertex plus = ctx.at(s + 1);
  for (std::int64_t j = 0; j < len; ++j) {
    const Vertex c = ctx.cycle[j];
    if (c == ctx.at(s) || c == minus || c == plus) continue;
    if (ctx.is_twin(c)) return false;
  }
  for (Vertex c : {minus, plus}) {
    if (ctx.is_twin(c) && ctx.twin_classes[ctx.twin_class[c]].size() >= 3) return false;
  }
  return true;
}

}  // namespace

SpecialCaseResult apply_special_cases(const DiGraph& g, const CycleContext& ctx,
                                      std::span<const ConcerningPath> concerning) {
  SpecialCaseResult r;
  const auto len = static_cast<std::int64_t>(ctx.length());
  bool cycle_twin = false;
  for (Vertex c : ctx.cycle) cycle_twin = cycle_twin || ctx.is_twin(c);

  if (ctx.cycle_sinks == 0) {
    if (ctx.external_in_arcs == 0 && !cycle_twin) {
      r.fired = 1;
      r.added = {*std::min_element(ctx.cycle.begin(), ctx.cycle.end())};
      return r;
    }
    if (ctx.external_in_arcs == 1) {
      std::int64_t i = 0;
      while (!ctx.external_in[i]) ++i;
      const Vertex ci = ctx.cycle[i];
      bool clean = true;
      for (std::int64_t j = 0; j < len; ++j) {
        if (j != i && ctx.is_twin(ctx.cycle[j])) clean = false;
      }
      Vertex u = ci;
      for (Vertex w : g.in_neighbors(ci)) {
        if (!ctx.on_cycle(w)) u = w;
      }
      if (clean && has_private_out_neighbor(g, ctx, u)) {
        r.fired = 2;
        r.added = {ci};
        return r;
      }
    }
    return r;
  }

  if (ctx.cycle_sources == 1) {
    std::int64_t s = 0;
    while (!ctx.cycle_source[s]) ++s;
    std::int64_t t = 0;
    while (!ctx.cycle_sink[t]) ++t;

    if (ctx.at(s + 1) == ctx.cycle[t] || ctx.at(s - 1) == ctx.cycle[t]) {
      bool clean = true;
      for (std::int64_t j = 0; j < len; ++j) {
        if (j == s) continue;
        if (ctx.is_twin(ctx.cycle[j]) || ctx.external_in[j]) clean = false;
      }
      if (clean) {
        r.fired = 3;
        // c_{i-1} under either traversal direction; both resolve the pair
        r.added = {std::min(ctx.at(s - 1), ctx.at(s + 1))};
      }
      return r;
    }

    if (fifth_case(g, ctx, s, t)) {
      r.fired = 5;
      r.added = {ctx.cycle[t]};
      return r;
    }
    std::vector<Vertex> options;
    Vertex add = 0;
    if (fourth_case(g, ctx, s, t, +1, add)) options.push_back(add);
    if (fourth_case(g, ctx, s, t, -1, add)) options.push_back(add);
    if (!options.empty()) {
      r.fired = 4;
      r.added = {*std::min_element(options.begin(), options.end())};
    }
    return r;
  }

  if (!concerning.empty()) {
    bool any_unfixable = false;
    bool any_fixable = false;
    for (const auto& p : concerning) {
      (p.kind == PathKind::Unfixable ? any_unfixable : any_fixable) = true;
    }
    if (any_unfixable && !any_fixable) {
      r.fired = 6;
      r.added = {concerning.front().path.front()};
    }
  }
  return r;
}

std::vector<Vertex> resolve_in_twins_prioritized(const CycleContext& ctx, std::span<const ConcerningPath> concerning,
                                                 std::span<const char> in_basis) {
  // 0 = none, 1 = fixable, 2 = unfixable; fixable wins on overlap.
  std::vector<char> path_kind(ctx.position.size(), 0);
  for (const auto& p : concerning) {
    if (p.kind != PathKind::Unfixable) continue;
    for (Vertex v : p.path) path_kind[v] = 2;
  }
  for (const auto& p : concerning) {
    if (p.kind != PathKind::Fixable) continue;
    for (Vertex v : p.path) path_kind[v] = 1;
  }

  std::vector<Vertex> added;
  for (const auto& members : ctx.twin_classes) {
    std::vector<Vertex> open;
    for (Vertex v : members) {
      if (!in_basis[v]) open.push_back(v);
    }
    if (open.size() <= 1) continue;

    bool all_concerning = true;
    for (Vertex v : members) all_concerning = all_concerning && path_kind[v] != 0;
    auto rank = [&](Vertex v) {
      if (!all_concerning && ctx.on_cycle(v)) return 0;
      if (path_kind[v] == 2) return 1;
      if (path_kind[v] == 1) return 2;
      return 3;
    };
    std::stable_sort(open.begin(), open.end(), [&](Vertex a, Vertex b) { return rank(a) < rank(b); });
    added.insert(added.end(), open.begin(), open.end() - 1);
  }
  return added;
}

Basis metric_basis_unicyclic(const DiGraph& g) {
  const auto ctx = cycle_context(g);
  const auto concerning = detect_concerning_paths(g, ctx);
  std::vector<char> in_basis(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) in_basis[v] = ctx.source[v];
  for (Vertex v : apply_special_cases(g, ctx, concerning).added) in_basis[v] = 1;
  for (Vertex v : resolve_in_twins_prioritized(ctx, concerning, in_basis)) in_basis[v] = 1;

  Basis basis;
  basis.mode = Mode::Strong;
  basis.producer = "unicyclic";
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_basis[v]) basis.vertices.push_back(v);
  }
  return basis;
}

}  // namespace metdim
