#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sslab/radical.hpp"
#include "sslab/spectral.hpp"

namespace sslab {

/// Flags of a one-dimensional-Prufer-style model: which nonzero primes are
/// idempotent (the local divisorial closure is nontrivial exactly there) and
/// which are branched (admit a proper primary ideal). One-dimensional
/// backends force branched = Max; finite posets default to every nonzero
/// prime, overridable only to smaller sets.
struct PruferDescriptor {
  SpacePtr space;
  DefSet idempotent;
  DefSet branched;
};
using PruferPtr = std::shared_ptr<const PruferDescriptor>;

PruferPtr make_descriptor(SpacePtr space, DefSet idempotent,
                          std::optional<DefSet> branched_override = std::nullopt);

/// A stable operation in normalized (quasi-spectrum, pseudo-spectrum) form.
/// The pair IS the operation on these descriptors. Membership reduces to the
/// descriptor by the valuation-local case analysis: idempotent maximal
/// ideals collapse under the local divisorial closure, proper primaries are
/// divisorial, and non-maximal primes are divisorial; hence
///
///   1 in I^op  iff  V(I) n delta = {}  and  V(I) n pi n sharp(I) = {}.
///
/// The pair invariants (pi outside delta, pi idempotent and branched, every
/// prime strictly below a pi point inside delta) are exactly what make this
/// reduction sound; validate_pair names each violated rule.
struct StableOpPair {
  PruferPtr descriptor;
  DefSet delta;  // down-closed quasi-spectrum
  DefSet pi;     // pseudo-spectrum
  friend bool operator==(const StableOpPair& a, const StableOpPair& b) {
    return *a.descriptor->space == *b.descriptor->space && a.delta == b.delta && a.pi == b.pi;
  }
};

struct PairViolation {
  enum class Rule {
    delta_not_down_closed,
    generic_flagged,
    pi_not_idempotent,
    pi_not_branched,
    pi_inside_delta,
    lower_prime_missing,
  };
  Rule rule;
  std::string detail;
};
std::string violation_text(const PairViolation& v);

/// Canonicalizes and validates; throws ErrorKind::invalid_pair listing every
/// violated rule.
StableOpPair validate_pair(PruferPtr descriptor, DefSet delta, DefSet pi);
std::vector<PairViolation> check_pair(const PruferDescriptor& d, const DefSet& delta,
                                      const DefSet& pi);

bool stable_member(const StableOpPair& op, const IdealDescriptor& ideal);
/// Membership of the zero ideal: true exactly for the trivial pair.
bool stable_member_zero(const StableOpPair& op);

/// a <= b iff every ideal b trivializes is trivialized by a; in pair form
/// b.delta inside a.delta and b.pi inside a.delta u a.pi.
bool stable_leq(const StableOpPair& a, const StableOpPair& b);

StableOpPair stable_meet(const StableOpPair& a, const StableOpPair& b);
StableOpPair stable_join(const StableOpPair& a, const StableOpPair& b);

/// Radical = spectral = empty pseudo-spectrum, in pair form.
bool is_radical_stable(const StableOpPair& op);

/// A black-box stable operation: proper-ideal membership plus the membership
/// of the zero ideal (needed to tell the trivial operation I -> K from the
/// localization at the zero ideal, which agree on every proper ideal).
struct MembershipOracle {
  std::function<bool(const IdealDescriptor&)> member;
  bool zero_is_member = true;
};
MembershipOracle oracle_of(const StableOpPair& op);

/// Rebuilds the canonical pair from membership probes. On finite posets the
/// probes are the points themselves. One-dimensional backends need `atoms`:
/// a finite partition of Max refining the oracle's behaviour (each atom is
/// uniform for the underlying operation); normalize refines them further
/// against the descriptor flags. Raises ErrorKind::oracle_not_stable when the
/// reconstruction fails validation.
StableOpPair stable_normalize(const PruferPtr& descriptor, const MembershipOracle& oracle,
                              const std::vector<DefSet>& atoms = {});
/// Round-trip: probes stable_member of the pair on its own generated algebra.
StableOpPair normalize_roundtrip(const StableOpPair& op);

/// A flag-preserving homeomorphism between descriptors: an explicit order
/// isomorphism on finite posets, or the identity / the 0<->1 bit flip on
/// one-dimensional backends.
struct Homeomorphism {
  enum class Kind { poset, identity, bitflip };
  Kind kind = Kind::identity;
  SpacePtr src, dst;
  std::vector<int> image;  // poset: image[i] = index in dst
};

Homeomorphism make_poset_map(SpacePtr src, SpacePtr dst,
                             const std::vector<std::pair<std::string, std::string>>& assignment);
Homeomorphism identity_map(SpacePtr space);
Homeomorphism bitflip_map(SpacePtr cantor_space);
Homeomorphism inverse_map(const Homeomorphism& phi);
DefSet map_set(const Homeomorphism& phi, const DefSet& a);

/// Transfers a pair along phi onto the target descriptor; phi must preserve
/// the idempotent and branched flags (ErrorKind::invalid_map otherwise).
StableOpPair transfer_pair(const Homeomorphism& phi, const PruferPtr& target,
                           const StableOpPair& op);

}  // namespace sslab
