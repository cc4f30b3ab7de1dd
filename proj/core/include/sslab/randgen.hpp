#pragma once

#include <cstdint>
#include <random>

#include "sslab/prufer.hpp"
#include "sslab/radical.hpp"
#include "sslab/spectral.hpp"

namespace sslab {

/// Deterministic generators for property sweeps; everything is a pure
/// function of the seed so failures are reproducible.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t next() { return eng(); }
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(eng() % static_cast<unsigned>(n)); }
  bool coin() { return (eng() & 1) != 0; }
};

Ordinal random_ordinal_below(Rng& rng, const Ordinal& top);

/// A random definable set of the space (never the generic point alone unless
/// allow_generic).
DefSet random_definable(Rng& rng, const Space& s, bool allow_generic = false);

/// A random nonempty closed set without the generic point (empty only on
/// spaces that have no nonzero prime at all).
DefSet random_closed_proper(Rng& rng, const Space& s);

IdealDescriptor random_ideal(Rng& rng, const SpacePtr& space);

SpacePtr random_poset_space(Rng& rng, int nonzero_points);

SpectralOp random_spectral(Rng& rng, const SpacePtr& space);
std::vector<SpectralOp> random_family(Rng& rng, const SpacePtr& space, int size);

PruferPtr random_descriptor(Rng& rng, const SpacePtr& space);
StableOpPair random_pair(Rng& rng, const PruferPtr& descriptor);

}  // namespace sslab
