#include "sslab/spectral.hpp"

namespace sslab {

static void same_space(const SpacePtr& a, const SpacePtr& b, const char* what) {
  if (!a || !b || !(*a == *b))
    fail(ErrorKind::backend_mismatch, std::string("operands live on different spaces in ") + what);
}

SpectralOp canonicalize_delta(SpacePtr space, const DefSet& delta) {
  if (!space) fail(ErrorKind::invalid_set, "null space");
  return SpectralOp{space, generizations_of(*space, delta)};
}

IdealDescriptor make_ideal(SpacePtr space, DefSet C, DefSet sharp) {
  if (!space) fail(ErrorKind::invalid_set, "null space");
  if (!is_closed(*space, C))
    fail(ErrorKind::invalid_ideal, "ideal support must be Zariski-closed");
  if (contains_generic(*space, C))
    fail(ErrorKind::invalid_ideal, "ideal support must not contain the generic point");
  if (!subset_of(*space, sharp, minimal_points(*space, C)))
    fail(ErrorKind::invalid_ideal, "sharp locus must consist of minimal primes of the support");
  return IdealDescriptor{std::move(space), std::move(C), std::move(sharp)};
}

bool spectral_member(const SpectralOp& op, const IdealDescriptor& ideal) {
  same_space(op.space, ideal.space, "spectral_member");
  return is_empty(set_intersect(*op.space, ideal.C, op.delta_down));
}

bool spectral_leq(const SpectralOp& a, const SpectralOp& b) {
  same_space(a.space, b.space, "spectral_leq");
  return subset_of(*a.space, b.delta_down, a.delta_down);
}

SpectralOp spectral_inf(const std::vector<SpectralOp>& family) {
  if (family.empty()) fail(ErrorKind::invalid_set, "spectral_inf of an empty family");
  SpectralOp out = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) {
    same_space(out.space, family[i].space, "spectral_inf");
    out.delta_down = set_union(*out.space, out.delta_down, family[i].delta_down);
  }
  return out;
}

SpectralOp spectral_sup(const std::vector<SpectralOp>& family) {
  if (family.empty()) fail(ErrorKind::invalid_set, "spectral_sup of an empty family");
  SpectralOp out = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) {
    same_space(out.space, family[i].space, "spectral_sup");
    out.delta_down = set_intersect(*out.space, out.delta_down, family[i].delta_down);
  }
  return out;
}

}  // namespace sslab
