#include "metdim/ditree.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "metdim/classify.hpp"

namespace metdim {

namespace {

void require_ditree(const DiGraph& g) {
  if (classify(g).kind != ClassKind::DiTree) throw std::invalid_argument("input is not a di-tree");
}

std::optional<Escalator> escalator_of(const ComponentContext& ctx) {
  if (!ctx.is_path() || ctx.entering.size() != 1) return std::nullopt;
  const Vertex entry = ctx.entering[0].to;
  std::uint32_t cur = 0;
  while (ctx.vertices[cur] != entry) ++cur;
  if (ctx.degree(cur) != 1) return std::nullopt;

  Escalator e;
  e.component = ctx.component;
  e.entered_from = ctx.entering[0].from;
  std::vector<std::uint32_t> local{cur};
  std::uint32_t prev = cur;
  while (local.size() < ctx.size()) {
    auto nb = ctx.neighbors(cur);
    std::uint32_t next = nb[0] == prev && nb.size() > 1 ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    local.push_back(cur);
  }
  for (std::size_t i = 0; i + 1 < local.size(); ++i) {
    if (ctx.external_out[local[i]]) return std::nullopt;
  }
  for (std::uint32_t l : local) e.path.push_back(ctx.vertices[l]);
  return e;
}

void fill_exits(const DiGraph& g, const SccPartition& sccs, Escalator& e) {
  for (Vertex z : g.out_neighbors(e.exit())) {
    if (!sccs.same(z, e.exit())) e.exits.push_back(z);
  }
}

// entered_by[v] = y + 1 when v is the entry endpoint of an escalator entered from y.
AlmostInTwinClass twin_class_at(const DiGraph& g, const SccPartition& sccs, Vertex x,
                                const std::vector<std::uint64_t>& entered_by) {
  AlmostInTwinClass cls;
  cls.apex = x;
  for (Vertex a : g.out_neighbors(x)) {
    if (g.has_arc(a, x)) continue;
    if (sccs.is_trivial(sccs.component_of[a])) {
      if (g.in_degree(a) == 1) {
        cls.members.push_back(a);
        cls.kinds.push_back(TwinKind::TrivialScc);
      }
    } else if (entered_by[a] == static_cast<std::uint64_t>(x) + 1) {
      cls.members.push_back(a);
      cls.kinds.push_back(TwinKind::EscalatorEndpoint);
    }
  }
  return cls;
}

}  // namespace

bool ComponentContext::is_path() const noexcept {
  if (size() < 2) return false;
  for (std::uint32_t i = 0; i < size(); ++i) {
    if (degree(i) > 2) return false;
  }
  return true;
}

std::vector<Vertex> ComponentContext::dummies() const {
  std::vector<Vertex> out;
  for (std::uint32_t i = 0; i < size(); ++i) {
    if (dummy[i]) out.push_back(vertices[i]);
  }
  return out;
}

std::vector<Escalator> detect_escalators(const DiGraph& g, const SccPartition& sccs, std::span<const char> fed) {
  std::vector<Escalator> result;
  for (std::uint32_t c = 0; c < sccs.count(); ++c) {
    if (sccs.is_trivial(c)) continue;
    if (auto e = escalator_of(component_context(g, sccs, c, fed))) {
      fill_exits(g, sccs, *e);
      result.push_back(std::move(*e));
    }
  }
  return result;
}

std::vector<AlmostInTwinClass> almost_in_twin_classes(const DiGraph& g, const SccPartition& sccs,
                                                      std::span<const Escalator> escalators) {
  std::vector<std::uint64_t> entered_by(g.order(), 0);
  for (const auto& e : escalators) entered_by[e.entry()] = static_cast<std::uint64_t>(e.entered_from) + 1;
  std::vector<AlmostInTwinClass> result;
  for (Vertex x = 0; x < g.order(); ++x) {
    auto cls = twin_class_at(g, sccs, x, entered_by);
    if (!cls.members.empty()) result.push_back(std::move(cls));
  }
  return result;
}

bool component_is_fed(const DiGraph& g, const SccPartition& sccs, std::uint32_t component,
                      std::span<const char> in_basis) {
  std::size_t entering = 0;
  for (Vertex v : sccs.components[component]) {
    if (in_basis[v]) return true;
    for (Vertex u : g.in_neighbors(v)) {
      if (sccs.component_of[u] != component) ++entering;
    }
  }
  return entering >= 2;
}

ComponentContext component_context(const DiGraph& g, const SccPartition& sccs, std::uint32_t component,
                                   std::span<const char> fed) {
  ComponentContext ctx;
  ctx.component = component;
  ctx.vertices = sccs.components.at(component);
  const std::size_t k = ctx.vertices.size();
  ctx.offsets.assign(k + 1, 0);
  ctx.dummy.assign(k, 0);
  ctx.external_out.assign(k, 0);
  ctx.exit_target.assign(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    Vertex v = ctx.vertices[i];
    // In a di-tree every arc inside an SCC is half of a digon, so the
    // out-neighbours in the component are exactly the neighbours in C.
    for (Vertex u : g.out_neighbors(v)) {
      if (sccs.same(u, v)) {
        ctx.adjacency.push_back(sccs.index_in_component[u]);
      } else if (!ctx.external_out[i] && (fed.empty() || !fed[sccs.component_of[u]])) {
        ctx.external_out[i] = 1;
        ctx.exit_target[i] = u;
      }
    }
    ctx.offsets[i + 1] = static_cast<std::uint32_t>(ctx.adjacency.size());
    for (Vertex u : g.in_neighbors(v)) {
      if (!sccs.same(u, v)) {
        ctx.dummy[i] = 1;
        ctx.entering.push_back({u, v});
      }
    }
  }
  return ctx;
}

std::vector<SpecialLeg> detect_special_legs(const ComponentContext& ctx) {
  std::vector<SpecialLeg> legs;
  for (std::uint32_t v = 0; v < ctx.size(); ++v) {
    if (!ctx.dummy[v] && ctx.degree(v) < 3) continue;
    for (std::uint32_t first : ctx.neighbors(v)) {
      std::vector<std::uint32_t> local{v};
      std::uint32_t prev = v;
      std::uint32_t cur = first;
      bool ok = true;
      while (true) {
        if (ctx.dummy[cur]) {
          ok = false;
          break;
        }
        local.push_back(cur);
        if (ctx.degree(cur) == 1) break;
        if (ctx.degree(cur) != 2) {
          ok = false;
          break;
        }
        auto nb = ctx.neighbors(cur);
        std::uint32_t next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      if (!ok) continue;

      SpecialLeg leg;
      bool witnessed = false;
      for (std::size_t i = 0; i + 1 < local.size() && !witnessed; ++i) {
        if (ctx.external_out[local[i]]) {
          witnessed = true;
          leg.witness = {ctx.vertices[local[i]], ctx.exit_target[local[i]]};
        }
      }
      if (!witnessed) continue;
      for (std::uint32_t l : local) leg.path.push_back(ctx.vertices[l]);
      legs.push_back(std::move(leg));
    }
  }
  return legs;
}

std::vector<Vertex> solve_path_component(const ComponentContext& ctx) {
  if (!ctx.is_path()) throw std::invalid_argument("component is not a path");
  std::vector<std::uint32_t> ends;
  for (std::uint32_t i = 0; i < ctx.size(); ++i) {
    if (ctx.degree(i) == 1) ends.push_back(i);
  }
  // vertices are ascending, so ends[0] carries the smaller id
  const std::uint32_t x = ends[0];
  const std::uint32_t y = ends[1];

  std::vector<std::uint32_t> dummies;
  std::vector<std::uint32_t> outs;
  for (std::uint32_t i = 0; i < ctx.size(); ++i) {
    if (ctx.dummy[i]) dummies.push_back(i);
    if (ctx.external_out[i]) outs.push_back(i);
  }
  if (dummies.empty()) {
    if (outs.empty()) return {ctx.vertices[x]};
    if (outs.size() == 1 && outs[0] == x) return {ctx.vertices[y]};
    if (outs.size() == 1 && outs[0] == y) return {ctx.vertices[x]};
    return {ctx.vertices[x], ctx.vertices[y]};
  }
  if (dummies.size() == 1) {
    const std::uint32_t w = dummies[0];
    if (w != x && w != y && !ctx.external_out[w]) return {ctx.vertices[x]};
  }
  return {};
}

std::vector<Vertex> solve_component_legs(const ComponentContext& ctx, std::span<const char> in_basis) {
  std::vector<Vertex> added;
  for (std::uint32_t b = 0; b < ctx.size(); ++b) {
    if (ctx.degree(b) < 3) continue;
    std::vector<Vertex> free_ends;
    for (std::uint32_t first : ctx.neighbors(b)) {
      std::uint32_t prev = b;
      std::uint32_t cur = first;
      bool blocked = false;
      bool leg = true;
      while (true) {
        if (ctx.dummy[cur] || in_basis[ctx.vertices[cur]]) blocked = true;
        if (ctx.degree(cur) == 1) break;
        if (ctx.degree(cur) != 2) {
          leg = false;
          break;
        }
        auto nb = ctx.neighbors(cur);
        std::uint32_t next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      if (leg && !blocked) free_ends.push_back(ctx.vertices[cur]);
    }
    if (free_ends.size() < 2) continue;
    std::sort(free_ends.begin(), free_ends.end());
    added.insert(added.end(), free_ends.begin(), free_ends.end() - 1);
  }
  return added;
}

Basis metric_basis_ditree(const DiGraph& g) {
  require_ditree(g);
  const std::size_t n = g.order();
  const auto sccs = strongly_connected_components(g);
  std::vector<char> in_basis(n, 0);

  // fed[c]: some basis vertex reaches c without entering through a given
  // single arc. Two entering arcs suffice, since every component without
  // entering arcs receives a basis vertex of its own.
  std::vector<char> fed(sccs.count(), 0);
  for (std::uint32_t c = 0; c < sccs.count(); ++c) {
    std::size_t entering = 0;
    for (Vertex v : sccs.components[c]) {
      for (Vertex u : g.in_neighbors(v)) entering += sccs.component_of[u] != c;
    }
    fed[c] = entering >= 2;
  }
  auto add = [&](Vertex v) {
    in_basis[v] = 1;
    fed[sccs.component_of[v]] = 1;
  };

  for (Vertex s : sources(g)) add(s);

  // Reverse topological sweep. When component c is reached, everything
  // downstream is final, so exit targets have settled fed flags and
  // escalators below c are known.
  std::vector<std::uint64_t> entered_by(n, 0);
  for (std::uint32_t c = static_cast<std::uint32_t>(sccs.count()); c-- > 0;) {
    for (Vertex x : sccs.components[c]) {
      auto cls = twin_class_at(g, sccs, x, entered_by);
      // members are ascending; the largest stays out
      for (std::size_t i = 0; i + 1 < cls.members.size(); ++i) add(cls.members[i]);
    }
    if (sccs.is_trivial(c)) continue;

    const auto ctx = component_context(g, sccs, c, fed);
    const auto legs = detect_special_legs(ctx);
    // On a path a special leg always ends at an endpoint, which already does
    // what the single-interior-dummy case asks for.
    if (ctx.is_path() && (legs.empty() || ctx.entering.empty())) {
      for (Vertex v : solve_path_component(ctx)) add(v);
    }
    for (const auto& leg : legs) add(leg.endpoint());
    for (Vertex v : solve_component_legs(ctx, in_basis)) add(v);
    if (auto e = escalator_of(ctx)) entered_by[e->entry()] = static_cast<std::uint64_t>(e->entered_from) + 1;
  }

  Basis basis;
  basis.mode = Mode::Strong;
  basis.producer = "ditree";
  for (Vertex v = 0; v < n; ++v) {
    if (in_basis[v]) basis.vertices.push_back(v);
  }
  return basis;
}

Basis weak_metric_basis_ditree(const DiGraph& g) {
  Basis strong = metric_basis_ditree(g);
  Basis weak = strong;
  weak.mode = Mode::Weak;
  // Only a source can be the one unreached vertex. Leaving s unreached means
  // strongly resolving T - s, a forest whose trees are solved separately
  // (vertices of different trees are told apart by reachability).
  std::vector<char> removed(g.order(), 0);
  for (Vertex s : sources(g)) {
    removed[s] = 1;
    std::vector<Vertex> trial;
    for (const auto& comp : weak_components(g, removed)) {
      for (Vertex v : metric_basis_ditree(induced_subgraph(g, comp)).vertices) trial.push_back(comp[v]);
      if (trial.size() >= strong.size()) break;
    }
    removed[s] = 0;
    if (trial.size() < strong.size()) {
      weak.vertices = normalized(std::move(trial));
      return weak;
    }
  }
  return weak;
}

}  // namespace metdim
