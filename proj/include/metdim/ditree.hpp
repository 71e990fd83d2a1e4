#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "metdim/digraph.hpp"
#include "metdim/resolver.hpp"
#include "metdim/scc.hpp"

namespace metdim {

/// Strongly connected component whose underlying graph is a path, entered by
/// exactly one external arc at one endpoint and left by external arcs only
/// from the opposite endpoint.
struct Escalator {
  std::uint32_t component = 0;
  std::vector<Vertex> path;  ///< path.front() is the entry endpoint
  Vertex entered_from = 0;   ///< the unique external in-neighbour
  std::vector<Vertex> exits; ///< external out-neighbours of path.back()

  Vertex entry() const { return path.front(); }
  Vertex exit() const { return path.back(); }
};

enum class TwinKind { TrivialScc, EscalatorEndpoint };

/// Out-neighbours of `apex` that are indistinguishable from everything behind
/// the apex: trivial SCCs whose only in-neighbour is the apex, and entry
/// endpoints of escalators entered from the apex.
struct AlmostInTwinClass {
  Vertex apex = 0;
  std::vector<Vertex> members;  ///< ascending
  std::vector<TwinKind> kinds;  ///< parallel to members
};

/// Local view of one non-trivial SCC: its underlying tree C, the dummy set D
/// (vertices with an external in-arc) and which vertices have open exits.
/// Local ids index `vertices`.
///
/// An exit is an arc y->z leaving C. It is open unless z's component is fed,
/// i.e. reached from the basis without passing through y->z. Fed targets are
/// already told apart from every vertex of C, so only open exits matter.
struct ComponentContext {
  std::uint32_t component = 0;
  std::vector<Vertex> vertices;
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> adjacency;
  std::vector<char> dummy;
  std::vector<char> external_out;   ///< has an open exit
  std::vector<Vertex> exit_target;  ///< smallest open exit target where external_out
  std::vector<Arc> entering;        ///< all arcs from outside into C

  std::size_t size() const noexcept { return vertices.size(); }
  std::size_t degree(std::uint32_t local) const noexcept { return offsets[local + 1] - offsets[local]; }
  std::span<const std::uint32_t> neighbors(std::uint32_t local) const noexcept {
    return {adjacency.data() + offsets[local], adjacency.data() + offsets[local + 1]};
  }
  bool is_path() const noexcept;
  /// Global ids of D, ascending.
  std::vector<Vertex> dummies() const;
};

/// Pendant path of C from an anchor (in D or of degree >= 3) to a leaf not in
/// D, with degree-2 non-dummy interior, such that some non-endpoint member has
/// an arc leaving C.
struct SpecialLeg {
  std::vector<Vertex> path;  ///< anchor first, endpoint last
  Arc witness{};             ///< an arc from path \ {endpoint} leaving C

  Vertex anchor() const { return path.front(); }
  Vertex endpoint() const { return path.back(); }
};

/// `fed` (per component id, may be empty) marks exit targets to ignore, as in
/// component_context.
std::vector<Escalator> detect_escalators(const DiGraph& g, const SccPartition& sccs, std::span<const char> fed = {});

/// One class per apex with at least one member, apexes ascending.
std::vector<AlmostInTwinClass> almost_in_twin_classes(const DiGraph& g, const SccPartition& sccs,
                                                      std::span<const Escalator> escalators);

/// `fed` is indexed by component id; when empty every exit counts as open.
ComponentContext component_context(const DiGraph& g, const SccPartition& sccs, std::uint32_t component,
                                   std::span<const char> fed = {});

/// A component is fed when it has at least two arcs entering it or contains
/// a vertex of `in_basis`. Only meaningful once the component is final.
bool component_is_fed(const DiGraph& g, const SccPartition& sccs, std::uint32_t component,
                      std::span<const char> in_basis);

std::vector<SpecialLeg> detect_special_legs(const ComponentContext& ctx);

/// Extra basis vertices for a component whose underlying tree is a path.
/// Endpoint x is the smaller id, y the larger. Throws std::invalid_argument
/// when C is not a path.
std::vector<Vertex> solve_path_component(const ComponentContext& ctx);

/// Endpoints of k-1 legs for every branch vertex of C with k >= 2 legs that
/// contain neither a basis vertex (per `in_basis`, indexed by global id) nor
/// a dummy. The leg with the largest endpoint is left out.
std::vector<Vertex> solve_component_legs(const ComponentContext& ctx, std::span<const char> in_basis);

/// Minimum strong resolving set of a di-tree in O(n + m). Throws
/// std::invalid_argument when g is not a di-tree. The result is not verified.
Basis metric_basis_ditree(const DiGraph& g);

/// Weak metric basis: the strong basis with the first removable source
/// (ascending id) dropped, if any.
Basis weak_metric_basis_ditree(const DiGraph& g);

}  // namespace metdim
