#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metdim/digraph.hpp"
#include "metdim/distances.hpp"
#include "metdim/resolver.hpp"

namespace metdim {

using Edge = std::pair<Vertex, Vertex>;

/// Cubic graph with a clockwise rotation per vertex and a perfect matching.
struct VcInstance {
  std::string name;
  std::size_t n = 0;
  std::vector<Edge> edges;                    ///< first < second
  std::vector<std::array<Vertex, 3>> rotation;  ///< clockwise neighbours per vertex
  std::vector<std::size_t> matching;          ///< indices into edges

  /// Index of edge {u, v}, or edges.size() when absent.
  std::size_t edge_index(Vertex u, Vertex v) const noexcept;
};

/// Throws std::invalid_argument naming the first broken invariant: degree
/// other than 3, repeated or looping edges, a rotation that is not a
/// permutation of the neighbours, or a matching that is not perfect.
void validate(const VcInstance& inst);

/// Connected, and stays connected after deleting any one vertex.
bool is_two_connected(std::size_t n, std::span<const Edge> edges);

/// Faces traced by the rotation system; n - m + faces == 2 iff the rotation
/// is a planar embedding of a connected graph.
std::size_t face_count(const VcInstance& inst);

/// Perfect matching by backtracking (edge indices), empty when none exists.
std::vector<std::size_t> find_perfect_matching(std::size_t n, std::span<const Edge> edges);

/// "n m", m edge lines, "rotation:" with n lines of three neighbours, then
/// "matching:" with edge lines. A missing matching block is filled by
/// find_perfect_matching. The result is validated.
VcInstance parse_vc_instance(std::string_view text);
std::string format_vc_instance(const VcInstance& inst);

/// K_4 and the triangular prism, with planar rotations.
std::vector<VcInstance> builtin_instances();
/// Throws std::invalid_argument on an unknown name.
VcInstance builtin_instance(std::string_view name);

struct EdgeGadget {
  Vertex a, b, c, du, dv;
};

struct MatchingGadget {
  std::size_t edge;  ///< index into VcInstance::edges; u = first, v = second
  Vertex f, g, h;
  // neighbours of u clockwise are v, x, y; of v are u, s, t
  std::size_t ux, uy, vs, vt;  ///< edge indices
};

struct GadgetMap {
  std::vector<EdgeGadget> edge;          ///< per edge index
  std::vector<MatchingGadget> matched;   ///< per matching entry
  std::vector<char> in_matching;         ///< per edge index
};

struct Gadget {
  DiGraph graph;
  GadgetMap map;
};

/// Vertices 0..n-1 are the original ones; then a, b, c, d^u, d^v per edge in
/// index order; then f, g, h per matching edge in matching order.
Gadget build_gadget(const VcInstance& inst);

/// C plus every a_e and every f_e. Throws std::invalid_argument unless C
/// covers every edge.
Basis resolving_from_cover(const VcInstance& inst, const Gadget& gadget, std::span<const Vertex> cover);

/// Counting translation back to a cover of the cubic graph. Throws
/// std::invalid_argument unless `set` strongly resolves the gadget.
std::vector<Vertex> cover_from_resolving(const VcInstance& inst, const Gadget& gadget, std::span<const Vertex> set);

bool is_vertex_cover(std::span<const Edge> edges, std::span<const Vertex> cover);

inline constexpr std::size_t kVertexCoverCap = 20;

/// Smallest cover by size-ordered enumeration; the lexicographically least
/// one among those. Throws CapExceeded when n > kVertexCoverCap.
std::vector<Vertex> brute_force_vertex_cover(std::size_t n, std::span<const Edge> edges);

struct GadgetReport {
  bool acyclic = false;
  bool triangle_free = false;  ///< no triangle in the underlying graph
  std::size_t max_degree = 0;  ///< in + out
  Distance max_distance = 0;   ///< largest finite distance
};

GadgetReport inspect_gadget(const DiGraph& g);

/// One forced pair: no strong resolving set avoids both vertices.
struct ForcedPair {
  Vertex first, second;
  ResolveResult without;  ///< is_resolving(V minus the pair, Strong)

  bool forced() const noexcept { return !without.resolving; }
};

/// {a_e, b_e} per edge, then {f_e, g_e} per matching edge. Every strong
/// resolving set hits each forced pair, so it has at least |E| + |M| members.
std::vector<ForcedPair> forced_pairs(const Gadget& gadget);

}  // namespace metdim
