#include "sslab/prufer.hpp"

#include <algorithm>

namespace sslab {

namespace {

void same_space(const SpacePtr& a, const SpacePtr& b, const char* what) {
  if (!a || !b || !(*a == *b))
    fail(ErrorKind::backend_mismatch, std::string("operands live on different spaces in ") + what);
}

void same_descriptor(const StableOpPair& a, const StableOpPair& b, const char* what) {
  same_space(a.descriptor->space, b.descriptor->space, what);
  if (a.descriptor->idempotent != b.descriptor->idempotent ||
      a.descriptor->branched != b.descriptor->branched)
    fail(ErrorKind::backend_mismatch, std::string("descriptor flags differ in ") + what);
}

DefSet nonzero_primes(const Space& s) {
  if (s.backend() == Backend::poset)
    return poset_set(s, s.all_mask() & ~(1u << s.generic_point()));
  return max_part(s);
}

// Points of `candidates` whose strict generizations all lie in delta. On
// one-dim backends the only strict generization of a maximal point is the
// generic point.
DefSet well_founded_over(const Space& s, const DefSet& candidates, const DefSet& delta) {
  if (s.backend() != Backend::poset)
    return contains_generic(s, delta) ? candidates : empty_set(s);
  std::uint32_t bits = 0;
  for (int i = 0; i < s.point_count(); ++i) {
    if (!((candidates.bits >> i) & 1u)) continue;
    std::uint32_t lower = s.down_mask(i) & ~(1u << i);
    if ((lower & ~delta.bits) == 0) bits |= 1u << i;
  }
  return poset_set(s, bits);
}

}  // namespace

PruferPtr make_descriptor(SpacePtr space, DefSet idempotent,
                          std::optional<DefSet> branched_override) {
  if (!space) fail(ErrorKind::invalid_set, "null space");
  const Space& s = *space;
  DefSet nonzero = nonzero_primes(s);
  if (!subset_of(s, idempotent, nonzero))
    fail(ErrorKind::invalid_pair, "idempotent locus must consist of nonzero primes");
  DefSet branched = nonzero;
  if (branched_override) {
    if (s.backend() != Backend::poset)
      fail(ErrorKind::invalid_pair,
           "one-dimensional backends force branched = all maximal points");
    if (!subset_of(s, *branched_override, nonzero))
      fail(ErrorKind::invalid_pair, "branched locus must consist of nonzero primes");
    branched = *branched_override;
  }
  auto d = std::make_shared<PruferDescriptor>();
  d->space = std::move(space);
  d->idempotent = std::move(idempotent);
  d->branched = std::move(branched);
  return d;
}

std::string violation_text(const PairViolation& v) {
  switch (v.rule) {
    case PairViolation::Rule::delta_not_down_closed: return "delta-not-down-closed: " + v.detail;
    case PairViolation::Rule::generic_flagged: return "generic-flagged: " + v.detail;
    case PairViolation::Rule::pi_not_idempotent: return "pi-not-idempotent: " + v.detail;
    case PairViolation::Rule::pi_not_branched: return "pi-not-branched: " + v.detail;
    case PairViolation::Rule::pi_inside_delta: return "pi-inside-delta: " + v.detail;
    case PairViolation::Rule::lower_prime_missing: return "lower-prime-missing: " + v.detail;
  }
  return "?";
}

std::vector<PairViolation> check_pair(const PruferDescriptor& d, const DefSet& delta,
                                      const DefSet& pi) {
  const Space& s = *d.space;
  std::vector<PairViolation> out;
  auto describe = [&](const DefSet& x) { return render_set(s, x); };

  if (generizations_of(s, delta) != delta)
    out.push_back({PairViolation::Rule::delta_not_down_closed,
                   "delta must equal its own generization closure"});
  if (contains_generic(s, pi))
    out.push_back({PairViolation::Rule::generic_flagged, "pi must not contain the generic point"});

  DefSet bad_idem = with_generic(s, set_difference(s, pi, d.idempotent), false);
  if (!is_empty(bad_idem))
    out.push_back({PairViolation::Rule::pi_not_idempotent, describe(bad_idem)});

  DefSet bad_branch = with_generic(s, set_difference(s, pi, d.branched), false);
  if (!is_empty(bad_branch))
    out.push_back({PairViolation::Rule::pi_not_branched, describe(bad_branch)});

  DefSet overlap = set_intersect(s, pi, delta);
  if (!is_empty(overlap))
    out.push_back({PairViolation::Rule::pi_inside_delta, describe(overlap)});

  DefSet ill = set_difference(s, pi, well_founded_over(s, pi, delta));
  if (!is_empty(ill))
    out.push_back({PairViolation::Rule::lower_prime_missing, describe(ill)});

  return out;
}

StableOpPair validate_pair(PruferPtr descriptor, DefSet delta, DefSet pi) {
  auto violations = check_pair(*descriptor, delta, pi);
  if (!violations.empty()) {
    std::string msg = "invalid stable pair:";
    for (const auto& v : violations) msg += " [" + violation_text(v) + "]";
    fail(ErrorKind::invalid_pair, msg);
  }
  return StableOpPair{std::move(descriptor), std::move(delta), std::move(pi)};
}

bool stable_member(const StableOpPair& op, const IdealDescriptor& ideal) {
  const Space& s = *op.descriptor->space;
  same_space(op.descriptor->space, ideal.space, "stable_member");
  if (!subset_of(s, ideal.sharp, op.descriptor->branched))
    fail(ErrorKind::invalid_ideal, "sharp locus outside the branched locus");
  if (!is_empty(set_intersect(s, ideal.C, op.delta))) return false;
  return is_empty(set_intersect(s, set_intersect(s, ideal.C, op.pi), ideal.sharp));
}

bool stable_member_zero(const StableOpPair& op) {
  return is_empty(op.delta) && is_empty(op.pi);
}

bool stable_leq(const StableOpPair& a, const StableOpPair& b) {
  same_descriptor(a, b, "stable_leq");
  const Space& s = *a.descriptor->space;
  return subset_of(s, b.delta, a.delta) &&
         subset_of(s, b.pi, set_union(s, a.delta, a.pi));
}

StableOpPair stable_meet(const StableOpPair& a, const StableOpPair& b) {
  same_descriptor(a, b, "stable_meet");
  const Space& s = *a.descriptor->space;
  DefSet delta = set_union(s, a.delta, b.delta);
  DefSet pi = set_difference(s, set_union(s, a.pi, b.pi), delta);
  return validate_pair(a.descriptor, std::move(delta), std::move(pi));
}

StableOpPair stable_join(const StableOpPair& a, const StableOpPair& b) {
  same_descriptor(a, b, "stable_join");
  const Space& s = *a.descriptor->space;
  DefSet delta = set_intersect(s, a.delta, b.delta);
  DefSet closed_a = set_union(s, a.delta, a.pi);
  DefSet closed_b = set_union(s, b.delta, b.pi);
  DefSet pi = set_difference(s, set_intersect(s, closed_a, closed_b), delta);
  // Drop pseudo-spectrum points whose strict generizations left delta; they
  // cannot survive in any valid pair above both arguments.
  pi = well_founded_over(s, pi, delta);
  return validate_pair(a.descriptor, std::move(delta), std::move(pi));
}

bool is_radical_stable(const StableOpPair& op) { return is_empty(op.pi); }

MembershipOracle oracle_of(const StableOpPair& op) {
  MembershipOracle o;
  o.member = [op](const IdealDescriptor& ideal) { return stable_member(op, ideal); };
  o.zero_is_member = stable_member_zero(op);
  return o;
}

StableOpPair stable_normalize(const PruferPtr& descriptor, const MembershipOracle& oracle,
                              const std::vector<DefSet>& atoms) {
  const Space& s = *descriptor->space;
  DefSet delta = empty_set(s);
  DefSet pi = empty_set(s);

  if (s.backend() == Backend::poset) {
    for (int p = 0; p < s.point_count(); ++p) {
      if (p == s.generic_point()) continue;
      IdealDescriptor vp = make_ideal(descriptor->space, poset_set(s, s.up_mask(p)), empty_set(s));
      if (!oracle.member(vp)) delta = set_union(s, delta, point_set(s, Point::poset(p)));
    }
    if (!oracle.zero_is_member) delta = with_generic(s, delta, true);
    DefSet candidates = set_difference(
        s, set_intersect(s, descriptor->idempotent, descriptor->branched), delta);
    for (int p = 0; p < s.point_count(); ++p) {
      if (!((candidates.bits >> p) & 1u) || p == s.generic_point()) continue;
      DefSet vp = poset_set(s, s.up_mask(p));
      IdealDescriptor primary = make_ideal(descriptor->space, vp, point_set(s, Point::poset(p)));
      if (!oracle.member(primary)) pi = set_union(s, pi, point_set(s, Point::poset(p)));
    }
  } else {
    if (atoms.empty())
      fail(ErrorKind::invalid_set,
           "normalizing on a one-dimensional backend needs a probe partition of Max");
    // Refine the given partition against the descriptor flags, then probe
    // one sample per atom; atoms are uniform for the oracle by contract.
    std::vector<DefSet> gens = atoms;
    gens.push_back(descriptor->idempotent);
    gens.push_back(descriptor->branched);
    std::vector<DefSet> fine = algebra_atoms(s, gens);
    for (const DefSet& atom : fine) {
      Point p = *sample_point(s, atom);
      IdealDescriptor vp = make_ideal(descriptor->space, point_set(s, p), empty_set(s));
      if (!oracle.member(vp)) delta = set_union(s, delta, atom);
    }
    if (!oracle.zero_is_member) delta = with_generic(s, delta, true);
    DefSet candidates = set_difference(
        s, set_intersect(s, descriptor->idempotent, descriptor->branched), delta);
    for (const DefSet& atom : fine) {
      DefSet cand = set_intersect(s, atom, candidates);
      if (is_empty(cand)) continue;
      Point p = *sample_point(s, cand);
      IdealDescriptor primary =
          make_ideal(descriptor->space, point_set(s, p), point_set(s, p));
      if (!oracle.member(primary)) pi = set_union(s, pi, cand);
    }
  }

  auto violations = check_pair(*descriptor, delta, pi);
  if (!violations.empty()) {
    std::string msg = "membership oracle is not a stable operation on this descriptor:";
    for (const auto& v : violations) msg += " [" + violation_text(v) + "]";
    fail(ErrorKind::oracle_not_stable, msg);
  }
  return StableOpPair{descriptor, std::move(delta), std::move(pi)};
}

StableOpPair normalize_roundtrip(const StableOpPair& op) {
  const Space& s = *op.descriptor->space;
  std::vector<DefSet> atoms;
  if (s.backend() != Backend::poset)
    atoms = algebra_atoms(s, {op.delta, op.pi});
  return stable_normalize(op.descriptor, oracle_of(op), atoms);
}

// -- Homeomorphisms ------------------------------------------------------------

Homeomorphism make_poset_map(SpacePtr src, SpacePtr dst,
                             const std::vector<std::pair<std::string, std::string>>& assignment) {
  if (!src || !dst || src->backend() != Backend::poset || dst->backend() != Backend::poset)
    fail(ErrorKind::invalid_map, "point map needs two finite posets");
  if (src->point_count() != dst->point_count())
    fail(ErrorKind::invalid_map, "point map needs posets of equal size");
  const int n = src->point_count();
  std::vector<int> image(n, -1);
  for (const auto& [from, to] : assignment) {
    int i = src->point_index(from), j = dst->point_index(to);
    if (i < 0 || j < 0) fail(ErrorKind::invalid_map, "unknown point in map: " + from + "->" + to);
    if (image[i] != -1) fail(ErrorKind::invalid_map, "point mapped twice: " + from);
    image[i] = j;
  }
  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    if (image[i] < 0) fail(ErrorKind::invalid_map, "unmapped point: " + src->point_names()[i]);
    if (hit[image[i]]) fail(ErrorKind::invalid_map, "map is not injective");
    hit[image[i]] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (src->leq_points(i, j) != dst->leq_points(image[i], image[j]))
        fail(ErrorKind::invalid_map, "map does not preserve and reflect the order");
  Homeomorphism phi;
  phi.kind = Homeomorphism::Kind::poset;
  phi.src = std::move(src);
  phi.dst = std::move(dst);
  phi.image = std::move(image);
  return phi;
}

Homeomorphism identity_map(SpacePtr space) {
  Homeomorphism phi;
  phi.kind = Homeomorphism::Kind::identity;
  phi.src = space;
  phi.dst = std::move(space);
  return phi;
}

Homeomorphism bitflip_map(SpacePtr cantor_space) {
  if (!cantor_space || cantor_space->backend() != Backend::cantor)
    fail(ErrorKind::invalid_map, "the bit flip is a map of the cantor backend");
  Homeomorphism phi;
  phi.kind = Homeomorphism::Kind::bitflip;
  phi.src = cantor_space;
  phi.dst = std::move(cantor_space);
  return phi;
}

Homeomorphism inverse_map(const Homeomorphism& phi) {
  if (phi.kind != Homeomorphism::Kind::poset) return phi;  // involutions / identity
  Homeomorphism inv;
  inv.kind = Homeomorphism::Kind::poset;
  inv.src = phi.dst;
  inv.dst = phi.src;
  inv.image.assign(phi.image.size(), -1);
  for (std::size_t i = 0; i < phi.image.size(); ++i) inv.image[phi.image[i]] = static_cast<int>(i);
  return inv;
}

static std::string flip_word(std::string w) {
  for (char& c : w) c = c == '0' ? '1' : '0';
  return w;
}

DefSet map_set(const Homeomorphism& phi, const DefSet& a) {
  switch (phi.kind) {
    case Homeomorphism::Kind::identity: return a;
    case Homeomorphism::Kind::poset: {
      DefSet out = empty_set(*phi.dst);
      for (std::size_t i = 0; i < phi.image.size(); ++i)
        if ((a.bits >> i) & 1u) out.bits |= 1u << phi.image[i];
      return out;
    }
    case Homeomorphism::Kind::bitflip: {
      DefSet out = a;
      for (auto& w : out.clopen) w = flip_word(w);
      std::sort(out.clopen.begin(), out.clopen.end());
      auto flip_points = [](std::vector<PeriodicWord>& pts) {
        for (auto& p : pts) p = PeriodicWord::make(flip_word(p.pre()), flip_word(p.per()));
        std::sort(pts.begin(), pts.end());
      };
      flip_points(out.plus);
      flip_points(out.minus);
      return out;
    }
  }
  return a;
}

StableOpPair transfer_pair(const Homeomorphism& phi, const PruferPtr& target,
                           const StableOpPair& op) {
  if (!(*phi.src == *op.descriptor->space))
    fail(ErrorKind::invalid_map, "map source differs from the pair's space");
  if (!(*phi.dst == *target->space))
    fail(ErrorKind::invalid_map, "map target differs from the target descriptor's space");
  if (map_set(phi, op.descriptor->idempotent) != target->idempotent)
    fail(ErrorKind::invalid_map, "map does not preserve the idempotent locus");
  if (map_set(phi, op.descriptor->branched) != target->branched)
    fail(ErrorKind::invalid_map, "map does not preserve the branched locus");
  const Space& dst = *target->space;
  DefSet delta = map_set(phi, op.delta);
  if (dst.backend() != Backend::poset) delta = with_generic(dst, delta, op.delta.generic);
  return validate_pair(target, std::move(delta), map_set(phi, op.pi));
}

}  // namespace sslab
