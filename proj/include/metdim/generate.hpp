#pragma once

#include <cstdint>
#include <random>

#include "metdim/digraph.hpp"

namespace metdim {

enum class InstanceClass {
  DiTree,             ///< uniform labelled tree (Pruefer), edges become digons with digon_prob
  OrientedUnicyclic,  ///< cycle of cycle_len plus random pendant trees, every edge oriented
  Dag,                ///< random topological order, each forward pair an arc with arc_prob
  Random,             ///< each ordered pair an arc with arc_prob
};

struct GenParams {
  double digon_prob = 0.0;
  std::size_t cycle_len = 3;
  double arc_prob = 0.5;
};

/// Deterministic in (cls, n, params, seed). Throws std::invalid_argument on
/// n == 0, probabilities outside [0,1] or cycle_len outside [3, n].
DiGraph random_instance(InstanceClass cls, std::size_t n, const GenParams& params, std::uint64_t seed);

/// Long-chain instances for scaling runs: each new vertex extends the
/// previous one with probability 0.9, otherwise attaches to a uniform earlier
/// vertex. Vertices are numbered in construction order. DiTree and
/// OrientedUnicyclic only.
DiGraph path_heavy_instance(InstanceClass cls, std::size_t n, const GenParams& params, std::uint64_t seed);

/// Uniform integer in [0, bound) by rejection, stable across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
/// True with probability p.
bool bernoulli(std::mt19937_64& rng, double p);

}  // namespace metdim
