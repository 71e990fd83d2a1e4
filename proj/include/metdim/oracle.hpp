#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "metdim/digraph.hpp"
#include "metdim/resolver.hpp"

namespace metdim {

/// An input exceeded a configured size limit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  std::size_t dimension = 0;
  Basis witness;
  std::uint64_t candidates_checked = 0;
};

inline constexpr std::size_t kDefaultOracleCap = 16;
/// Hard ceiling for the oracle cap; distance keys are stored in one byte each.
inline constexpr std::size_t kMaxOracleCap = 32;

/// Vertices every resolving set must contain. Strong: all sources. Weak: none
/// (one source may be left out; the search handles that).
std::vector<Vertex> forced_vertices(const DiGraph& g, Mode mode);

/// Exact metric dimension by size-ordered subset enumeration.
///
/// Candidates of each size are tried in lexicographic order, so the witness
/// is the lexicographically least minimum resolving set. Strong mode only
/// enumerates supersets of the sources; weak mode only sets missing at most
/// one source. Throws CapExceeded when n > cap.
OracleResult min_resolving_set(const DiGraph& g, Mode mode, std::size_t cap = kDefaultOracleCap);

}  // namespace metdim
