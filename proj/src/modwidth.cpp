#include "metdim/modwidth.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "metdim/oracle.hpp"

namespace metdim {

namespace {

// 2*(v->x) + (x->v): the four ways an outside vertex can see x.
int relation(const DiGraph& g, Vertex v, Vertex x) { return 2 * g.has_arc(v, x) + g.has_arc(x, v); }

// Connected components of `members` under `linked`, each ascending.
template <class Linked>
std::vector<std::vector<Vertex>> components_by(const std::vector<Vertex>& members, Linked&& linked) {
  const std::size_t k = members.size();
  std::vector<int> comp(k, -1);
  std::vector<std::vector<Vertex>> result;
  for (std::size_t s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(result.size());
    result.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      result.back().push_back(members[a]);
      for (std::size_t b = 0; b < k; ++b) {
        if (comp[b] < 0 && linked(members[a], members[b])) {
          comp[b] = id;
          stack.push_back(b);
        }
      }
    }
    std::sort(result.back().begin(), result.back().end());
  }
  return result;
}

// Smallest module of G[members] containing `seed`: keep absorbing any vertex
// that sees two members differently.
std::vector<Vertex> module_closure(const DiGraph& g, const std::vector<Vertex>& members, std::vector<Vertex> seed) {
  std::vector<char> inside(g.order(), 0);
  const Vertex u = seed.front();
  std::vector<Vertex> closure;
  for (Vertex s : seed) inside[s] = 1;
  std::vector<Vertex> pending = std::move(seed);
  while (!pending.empty()) {
    Vertex s = pending.back();
    pending.pop_back();
    closure.push_back(s);
    for (Vertex y : members) {
      if (!inside[y] && relation(g, y, s) != relation(g, y, u)) {
        inside[y] = 1;
        pending.push_back(y);
      }
    }
  }
  std::sort(closure.begin(), closure.end());
  return closure;
}

DecompositionNode decompose(const DiGraph& g, std::vector<Vertex> members) {
  DecompositionNode node;
  node.vertices = std::move(members);
  if (node.vertices.size() == 1) return node;
  const auto& xs = node.vertices;

  std::vector<std::vector<Vertex>> parts =
      components_by(xs, [&](Vertex a, Vertex b) { return g.has_arc(a, b) || g.has_arc(b, a); });
  node.kind = DecompositionNode::Kind::Parallel;
  if (parts.size() == 1) {
    parts = components_by(xs, [&](Vertex a, Vertex b) { return a != b && !g.has_digon(a, b); });
    node.kind = DecompositionNode::Kind::Series;
  }
  if (parts.size() == 1) {
    node.kind = DecompositionNode::Kind::Prime;
    std::vector<std::vector<Vertex>> candidates;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        auto m = module_closure(g, xs, {xs[i], xs[j]});
        if (m.size() < xs.size()) candidates.push_back(std::move(m));
      }
    }
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<char> used(g.order(), 0);
    parts.clear();
    for (auto& m : candidates) {
      if (std::any_of(m.begin(), m.end(), [&](Vertex x) { return used[x]; })) continue;
      // Pair closures miss modules like a set of three in-twins, so grow the
      // pick one vertex at a time while it stays proper and disjoint.
      for (bool grown = true; grown;) {
        grown = false;
        for (Vertex x : xs) {
          if (used[x] || std::binary_search(m.begin(), m.end(), x)) continue;
          auto seed = m;
          seed.push_back(x);
          auto bigger = module_closure(g, xs, std::move(seed));
          if (bigger.size() == xs.size() || std::any_of(bigger.begin(), bigger.end(), [&](Vertex y) { return used[y]; })) {
            continue;
          }
          m = std::move(bigger);
          grown = true;
        }
      }
      for (Vertex x : m) used[x] = 1;
      parts.push_back(std::move(m));
    }
    for (Vertex x : xs) {
      if (!used[x]) parts.push_back({x});
    }
    std::sort(parts.begin(), parts.end());
  }
  for (auto& part : parts) node.children.push_back(decompose(g, std::move(part)));
  return node;
}

}  // namespace

bool is_module(const DiGraph& g, std::span<const Vertex> set) {
  if (set.empty()) return true;
  std::vector<char> inside(g.order(), 0);
  for (Vertex x : set) inside[x] = 1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (inside[v]) continue;
    const int r = relation(g, v, set[0]);
    for (Vertex x : set) {
      if (relation(g, v, x) != r) return false;
    }
  }
  return true;
}

DecompositionNode modular_decomposition(const DiGraph& g) {
  if (g.order() == 0) throw std::invalid_argument("cannot decompose the empty graph");
  std::vector<Vertex> all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  return decompose(g, std::move(all));
}

std::size_t width(const DecompositionNode& node) {
  std::size_t w = node.children.size();
  for (const auto& c : node.children) w = std::max(w, width(c));
  return w;
}

std::size_t node_count(const DecompositionNode& node) {
  std::size_t count = 1;
  for (const auto& c : node.children) count += node_count(c);
  return count;
}

std::vector<std::vector<Distance>> quotient_distances(const DecompositionNode& node, const DistanceTable& dist) {
  const std::size_t s = node.children.size();
  std::vector<std::vector<Distance>> q(s, std::vector<Distance>(s, 0));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (i == j) continue;
      const Distance d = dist(node.children[i].representative(), node.children[j].representative());
      for (Vertex x : node.children[i].vertices) {
        for (Vertex y : node.children[j].vertices) {
          if (dist(x, y) != d) {
            throw std::logic_error("child " + std::to_string(i) + " or " + std::to_string(j) + " is not a module");
          }
        }
      }
      q[i][j] = d;
    }
  }
  return q;
}

Profile profile_of(const DistanceTable& dist, std::span<const Vertex> set, std::span<const Vertex> module,
                   const ProfileSpace& space) {
  Profile p = 0;
  for (Vertex x : module) {
    if (set.empty()) {
      p |= space.full();
      continue;
    }
    const Distance d = dist(set[0], x);
    if (d == 0) continue;
    bool constant = true;
    for (Vertex w : set) constant = constant && dist(w, x) == d;
    if (constant) p |= space.bit(d);
  }
  return p;
}

std::optional<Profile> check_conditions(const DecompositionNode& node, const DistanceTable& dist,
                                        const ProfileSpace& space, std::span<const char> selected,
                                        std::span<const Profile> profiles) {
  const std::size_t s = node.children.size();
  auto rep = [&](std::size_t i) { return node.children[i].representative(); };
  auto trivial = [&](std::size_t i) { return node.children[i].is_leaf(); };
  std::vector<std::size_t> z;
  for (std::size_t i = 0; i < s; ++i) {
    if (!trivial(i) || selected[i]) z.push_back(i);
  }
  auto in_z = [&](std::size_t i) { return std::find(z.begin(), z.end(), i) != z.end(); };
  // Some member of Z other than a and b sees them at different distances.
  auto separated = [&](std::size_t a, std::size_t b) {
    for (std::size_t k : z) {
      if (k != a && k != b && dist(rep(k), rep(a)) != dist(rep(k), rep(b))) return true;
    }
    return false;
  };

  // (a) Z resolves the quotient
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = a + 1; b < s; ++b) {
      if (!in_z(a) && !in_z(b) && !separated(a, b)) return std::nullopt;
    }
  }
  // (b) d-constant vertices of nontrivial children against unselected singletons
  for (std::size_t i = 0; i < s; ++i) {
    if (trivial(i)) continue;
    for (std::size_t j = 0; j < s; ++j) {
      if (!trivial(j) || selected[j]) continue;
      const Distance d = dist(rep(i), rep(j));
      if ((profiles[i] & space.bit(d)) && !separated(i, j)) return std::nullopt;
    }
  }
  // (c) d-constant vertices of two nontrivial children
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (i == j || trivial(i) || trivial(j)) continue;
      const Distance d1 = dist(rep(i), rep(j));
      const Distance d2 = dist(rep(j), rep(i));
      if ((profiles[i] & space.bit(d1)) && (profiles[j] & space.bit(d2)) && !separated(i, j)) return std::nullopt;
    }
  }
  // (d) the parent profile
  Profile parent = 0;
  for (std::size_t i = 0; i < s; ++i) {
    if (trivial(i) && selected[i]) continue;
    Profile candidate = trivial(i) ? space.full() : profiles[i];
    for (std::size_t k : z) {
      if (k != i) candidate &= space.bit(dist(rep(k), rep(i)));
    }
    parent |= candidate;
  }
  return parent;
}

namespace {

// Everything about a node that depends on the trivial selection I only.
struct SelectionMasks {
  bool resolves = false;           // (a)
  std::vector<Profile> forbidden;  // (b), per nontrivial child
  std::vector<std::pair<Profile, Profile>> clash;  // (c), per nontrivial pair (i < j)
  Profile from_trivial = 0;        // (d), unselected singletons
  std::vector<Profile> carry;      // (d), per nontrivial child
};

SelectionMasks masks_for(std::uint64_t chosen, const std::vector<std::size_t>& triv,
                         const std::vector<std::size_t>& nontriv, const std::vector<std::vector<Distance>>& q,
                         const ProfileSpace& space) {
  const std::size_t s = q.size();
  std::vector<char> in_z(s, 0);
  for (std::size_t i : nontriv) in_z[i] = 1;
  for (std::size_t t = 0; t < triv.size(); ++t) {
    if (chosen >> t & 1) in_z[triv[t]] = 1;
  }
  auto separated = [&](std::size_t a, std::size_t b) {
    for (std::size_t k = 0; k < s; ++k) {
      if (in_z[k] && k != a && k != b && q[k][a] != q[k][b]) return true;
    }
    return false;
  };

  SelectionMasks m;
  m.resolves = true;
  for (std::size_t a = 0; a < s && m.resolves; ++a) {
    for (std::size_t b = a + 1; b < s; ++b) {
      if (!in_z[a] && !in_z[b] && !separated(a, b)) {
        m.resolves = false;
        break;
      }
    }
  }
  if (!m.resolves) return m;

  for (std::size_t i : nontriv) {
    Profile f = 0;
    for (std::size_t j : triv) {
      if (!in_z[j] && !separated(i, j)) f |= space.bit(q[i][j]);
    }
    m.forbidden.push_back(f);
  }
  for (std::size_t a = 0; a < nontriv.size(); ++a) {
    for (std::size_t b = a + 1; b < nontriv.size(); ++b) {
      const std::size_t i = nontriv[a];
      const std::size_t j = nontriv[b];
      if (separated(i, j)) {
        m.clash.push_back({0, 0});
      } else {
        m.clash.push_back({space.bit(q[i][j]), space.bit(q[j][i])});
      }
    }
  }
  auto constant_from_z = [&](std::size_t i) {
    Profile c = space.full();
    for (std::size_t k = 0; k < s; ++k) {
      if (in_z[k] && k != i) c &= space.bit(q[k][i]);
    }
    return c;
  };
  for (std::size_t j : triv) {
    if (!in_z[j]) m.from_trivial |= constant_from_z(j);
  }
  for (std::size_t i : nontriv) m.carry.push_back(constant_from_z(i));
  return m;
}

}  // namespace

DpTable dp_factor(const DecompositionNode& node, const DistanceTable& dist, const ProfileSpace& space,
                  std::span<const DpTable> child_tables) {
  const auto q = quotient_distances(node, dist);
  std::vector<std::size_t> triv;
  std::vector<std::size_t> nontriv;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    (node.children[i].is_leaf() ? triv : nontriv).push_back(i);
  }
  if (triv.size() > kMaxTrivialChildren) {
    throw CapExceeded("decomposition node has " + std::to_string(triv.size()) + " single-vertex children (limit " +
                      std::to_string(kMaxTrivialChildren) + ")");
  }

  // Child table entries as flat arrays for the odometer below.
  std::vector<std::vector<std::pair<Profile, const TableEntry*>>> options;
  std::uint64_t combos = std::uint64_t{1} << triv.size();
  for (std::size_t i : nontriv) {
    options.emplace_back();
    for (const auto& [p, e] : child_tables[i]) options.back().push_back({p, &e});
    if (options.back().empty()) return {};
    combos *= options.back().size();
    if (combos > kMaxCombinations) throw CapExceeded("too many profile combinations at one decomposition node");
  }

  struct Best {
    std::size_t size;
    std::uint64_t chosen;
    std::vector<std::size_t> picks;
  };
  std::map<Profile, Best> best;
  std::vector<std::size_t> picks(nontriv.size());

  for (std::uint64_t chosen = 0; chosen < (std::uint64_t{1} << triv.size()); ++chosen) {
    const auto m = masks_for(chosen, triv, nontriv, q, space);
    if (!m.resolves) continue;
    const auto base = static_cast<std::size_t>(__builtin_popcountll(chosen));
    std::fill(picks.begin(), picks.end(), 0);
    while (true) {
      bool ok = true;
      std::size_t size = base;
      Profile parent = m.from_trivial;
      for (std::size_t a = 0; a < nontriv.size() && ok; ++a) {
        const Profile p = options[a][picks[a]].first;
        size += options[a][picks[a]].second->size;
        if (p & m.forbidden[a]) ok = false;
        parent |= p & m.carry[a];
      }
      std::size_t pair = 0;
      for (std::size_t a = 0; a < nontriv.size() && ok; ++a) {
        for (std::size_t b = a + 1; b < nontriv.size(); ++b, ++pair) {
          const auto [mi, mj] = m.clash[pair];
          if ((options[a][picks[a]].first & mi) && (options[b][picks[b]].first & mj)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        auto it = best.find(parent);
        if (it == best.end() || size < it->second.size) best[parent] = {size, chosen, picks};
      }
      std::size_t a = 0;
      while (a < picks.size() && ++picks[a] == options[a].size()) picks[a++] = 0;
      if (a == picks.size()) break;
    }
  }

  DpTable table;
  for (const auto& [p, b] : best) {
    TableEntry e;
    e.size = b.size;
    for (std::size_t t = 0; t < triv.size(); ++t) {
      if (b.chosen >> t & 1) e.witness.push_back(node.children[triv[t]].representative());
    }
    for (std::size_t a = 0; a < nontriv.size(); ++a) {
      const auto& w = options[a][b.picks[a]].second->witness;
      e.witness.insert(e.witness.end(), w.begin(), w.end());
    }
    std::sort(e.witness.begin(), e.witness.end());
    table.emplace(p, std::move(e));
  }
  return table;
}

namespace {

DpTable solve_node(const DecompositionNode& node, const DistanceTable& dist, const ProfileSpace& space) {
  std::vector<DpTable> child_tables(node.children.size());
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (!node.children[i].is_leaf()) child_tables[i] = solve_node(node.children[i], dist, space);
  }
  return dp_factor(node, dist, space, child_tables);
}

}  // namespace

ModwidthResult metric_dimension_modwidth(const DiGraph& g, Mode mode) {
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("empty graph");
  ModwidthResult result;
  result.basis.mode = mode;
  result.basis.producer = "modwidth";
  if (n == 1) {
    if (mode == Mode::Strong) result.basis.vertices = {0};
    result.basis = verify_basis(g, std::move(result.basis));
    return result;
  }

  const auto dist = all_pairs_distances(g);
  ProfileSpace space;
  space.max_distance = dist.max_finite();
  if (space.max_distance >= 63) throw CapExceeded("finite distances above 62 do not fit a profile");
  const auto root = modular_decomposition(g);
  result.width = width(root);
  result.max_distance = space.max_distance;

  const auto table = solve_node(root, dist, space);
  result.root_profiles = table.size();
  const TableEntry* pick = nullptr;
  for (const auto& [p, e] : table) {
    if (mode == Mode::Strong && (p & space.infinity())) continue;
    if (!pick || e.size < pick->size) pick = &e;
  }
  if (!pick) throw std::logic_error("modular-width DP found no resolving set");
  result.basis.vertices = pick->witness;
  result.basis = verify_basis(g, std::move(result.basis));
  return result;
}

}  // namespace metdim
