#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "sslab/prufer.hpp"

namespace sslab {

/// Brute-force reference semantics on finite posets: the ground truth that
/// the pair formulas in prufer.hpp are tested against. Runs only on posets
/// with at most 12 points.

/// All (C, sharp) descriptors of a finite poset, as masks over point indices:
/// C ranges over the up-closed sets avoiding the generic point, sharp over
/// the subsets of Min(C) n branched. Row 0 of every table is the zero ideal,
/// which separates the trivial operation from the localization at the zero
/// ideal (they agree on every proper ideal).
struct DescriptorUniverse {
  PruferPtr descriptor;
  struct Row {
    std::uint32_t C = 0, sharp = 0;
  };
  std::vector<Row> rows;

  static std::shared_ptr<const DescriptorUniverse> build(PruferPtr descriptor);
  IdealDescriptor ideal(std::size_t row) const;
};
using UniversePtr = std::shared_ptr<const DescriptorUniverse>;

/// The localizing-system table of one stable operation over a descriptor
/// universe: one membership bit per (C, sharp) row plus the zero-ideal bit.
struct FTable {
  UniversePtr universe;
  bool zero = false;
  std::vector<bool> bits;

  bool subset_of(const FTable& other) const;
  friend bool operator==(const FTable& a, const FTable& b) {
    return a.zero == b.zero && a.bits == b.bits;
  }
};

FTable f_table(const UniversePtr& universe, const StableOpPair& op);

/// True iff the table is upward closed in the descriptor order
/// (C' inside C and sharp' inside sharp step from an ideal to a larger one).
bool localizing_axioms_check(const FTable& table);

/// All valid stable pairs of the descriptor, deterministically ordered
/// (delta masks ascending, then pi masks ascending; point indices follow the
/// name-sorted order of the space).
std::vector<StableOpPair> enumerate_pairs(const PruferPtr& descriptor);

struct LatticeBounds {
  StableOpPair glb, lub;
};

/// GLB/LUB under table containment, found by scanning the full enumeration;
/// raises if the bound is missing or not unique (which would falsify
/// lattice-ness).
LatticeBounds lattice_oracle(const std::vector<StableOpPair>& pairs,
                             const std::vector<FTable>& tables, const StableOpPair& a,
                             const StableOpPair& b);

/// Convenience bundle: enumeration plus tables over one shared universe.
struct PosetOracle {
  UniversePtr universe;
  std::vector<StableOpPair> pairs;
  std::vector<FTable> tables;

  static PosetOracle build(const PruferPtr& descriptor);
  LatticeBounds bounds(const StableOpPair& a, const StableOpPair& b) const;
};

/// Every labeled finite poset with a unique minimum on at most `max_points`
/// points (the minimum is the generic point "o"; the nonzero primes are
/// named p, q, r, s).
std::vector<SpacePtr> poset_catalog(int max_points);

/// All order automorphisms of a poset that preserve the descriptor flags.
std::vector<Homeomorphism> flag_preserving_automorphisms(const PruferPtr& descriptor);

}  // namespace sslab
