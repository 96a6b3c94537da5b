#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "mmadf/adf.hpp"
#include "mmadf/mma.hpp"

namespace mmadf {

/// Seeded generator whose draws do not depend on the standard library's
/// distribution implementations, so a seed replays identically everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (next() >> 63) != 0; }
  Label label() { return static_cast<Label>(below(3)); }

 private:
  std::mt19937_64 engine_;
};

/// Graph over `n` arguments named a_1..a_n. Every argument gets between 0
/// and min(max_attackers, n) distinct attackers (self-attacks allowed);
/// attacks are declared in shuffled order.
AttackGraph random_graph(Rng& rng, std::size_t n, std::size_t max_attackers);

/// Scales drawn with thresholds up to k + 1 + `overshoot`.
MmaFramework random_mma(Rng& rng, const AttackGraph& g, std::uint32_t overshoot = 0);

AdfFramework random_adf(Rng& rng, const AttackGraph& g);

/// A concretisation picked row by row, uniformly among designated labels.
AdfFramework random_concretisation(Rng& rng, const MmaFramework& mma);

/// An MMA with every scale loosened (may lowered, must raised) at random, so
/// the input lies below it in the abstract order.
MmaFramework random_loosening(Rng& rng, const MmaFramework& mma, std::uint32_t max_step = 2);

}  // namespace mmadf
