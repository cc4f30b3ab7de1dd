#pragma once

#include <vector>

#include "sslab/spaces.hpp"

namespace sslab {

/// A spectral operation stored by its canonical down-closed defining set.
/// Two spectral operations are equal exactly when their down-closures agree,
/// so equality of `delta_down` is equality of operations. The empty set
/// encodes the trivial operation (every ideal collapses); any nonempty
/// defining set contains the generic point by down-closure.
struct SpectralOp {
  SpacePtr space;
  DefSet delta_down;
  friend bool operator==(const SpectralOp& a, const SpectralOp& b) {
    return *a.space == *b.space && a.delta_down == b.delta_down;
  }
};

/// The membership-relevant data of a nonzero ideal I: C models V(I) (closed,
/// without the generic point) and `sharp` the locus of minimal primes where
/// I is locally a proper primary ideal. The zero ideal is deliberately not
/// representable; membership queries about it are answered at the CLI layer.
struct IdealDescriptor {
  SpacePtr space;
  DefSet C;
  DefSet sharp;
};

SpectralOp canonicalize_delta(SpacePtr space, const DefSet& delta);

/// Validates closedness of C, properness, and sharp inside Min(C).
IdealDescriptor make_ideal(SpacePtr space, DefSet C, DefSet sharp);

/// 1 lies in I^{s_Delta} iff no prime of Delta contains I.
bool spectral_member(const SpectralOp& op, const IdealDescriptor& ideal);

/// Order by closed-ideal containment: a <= b iff b.delta_down is contained in
/// a.delta_down.
bool spectral_leq(const SpectralOp& a, const SpectralOp& b);

/// Lattice structure of the spectral family: the infimum is defined by the
/// union of the defining sets, the supremum by their intersection. The
/// supremum here is the supremum inside the spectral lattice; the semistar
/// supremum of the same family can be strictly larger (see radical.hpp).
SpectralOp spectral_inf(const std::vector<SpectralOp>& family);
SpectralOp spectral_sup(const std::vector<SpectralOp>& family);

}  // namespace sslab
