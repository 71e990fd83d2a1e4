#pragma once

#include <string_view>
#include <vector>

#include "metdim/digraph.hpp"

namespace metdim {

enum class ClassKind { DiTree, OrientedUnicyclic, Dag, Other };

std::string_view to_string(ClassKind kind) noexcept;

/// Graph class with witnesses.
///
/// Precedence when several labels apply: DiTree, then OrientedUnicyclic, then
/// Dag. Weakly disconnected graphs are always Other.
struct GraphClass {
  ClassKind kind = ClassKind::Other;
  /// OrientedUnicyclic only: the cycle c_1..c_k in traversal order. c_1 is the
  /// smallest id on the cycle; c_2 is its cycle neighbour reached by an arc
  /// leaving c_1 (smaller id when both or neither qualify).
  std::vector<Vertex> cycle;
};

bool is_weakly_connected(const DiGraph& g);
bool is_acyclic(const DiGraph& g);

/// Number of edges of the underlying simple graph (digons collapsed).
std::size_t underlying_edge_count(const DiGraph& g);

GraphClass classify(const DiGraph& g);

}  // namespace metdim
