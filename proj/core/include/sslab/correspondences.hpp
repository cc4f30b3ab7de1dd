#pragma once

#include <variant>

#include "sslab/prufer.hpp"
#include "sslab/radical.hpp"

namespace sslab {

/// One stable operation seen as its localizing system (the upward-closed
/// family of trivialized ideals). Membership delegates to the source.
struct LocalizingSystemView {
  std::variant<StableOpPair, RadicalOp, SpectralOp> source;
};

LocalizingSystemView ls_view(StableOpPair op);
LocalizingSystemView ls_view(RadicalOp op);
LocalizingSystemView ls_view(SpectralOp op);

bool ls_member(const LocalizingSystemView& view, const IdealDescriptor& ideal);

/// A localizing system is radical when "radical in" forces "ideal in". In
/// pair form that is exactly an empty pseudo-spectrum; joins of spectral
/// families are radical by construction.
bool is_radical_ls(const LocalizingSystemView& view);

/// Singular length functions are determined by their ideal colength, a
/// {0, infinity}-valued map; colength 0 is localizing-system membership.
enum class Colength { zero, infinity };

struct SingularLengthView {
  LocalizingSystemView base;
};

SingularLengthView length_view(LocalizingSystemView base);
Colength colength_tau(const SingularLengthView& view, const IdealDescriptor& ideal);

/// Support of the length function of a pair: primes with a primary ideal of
/// positive colength. Equals delta u pi without the generic point.
DefSet sigma_support(const StableOpPair& op);

/// Rebuilds the length function from its localized pieces over the support
/// and returns the pair of the rebuilt function, which must equal the input
/// on min-scattered backends (finite posets and ordinals). A mismatch raises
/// an error carrying a distinguishing ideal.
StableOpPair sharp_rebuild(const StableOpPair& op);

/// Test hook: rebuild against an arbitrary localized-membership oracle.
StableOpPair sharp_rebuild_with(const StableOpPair& op, const MembershipOracle& oracle);

}  // namespace sslab
