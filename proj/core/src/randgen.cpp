#include "sslab/randgen.hpp"

#include <algorithm>

namespace sslab {

Ordinal random_ordinal_below(Rng& rng, const Ordinal& top) {
  const int lead = std::max(top.leading_exponent(), 0);
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<Ordinal::Term> terms;
    for (int e = lead; e >= 0; --e)
      if (rng.below(3) == 0)
        terms.push_back({e, static_cast<std::uint64_t>(1 + rng.below(4))});
    Ordinal x = Ordinal::from_terms(std::move(terms));
    if (x <= top) return x;
  }
  return top;
}

DefSet random_definable(Rng& rng, const Space& s, bool allow_generic) {
  DefSet d = empty_set(s);
  switch (s.backend()) {
    case Backend::poset: {
      std::uint32_t mask = static_cast<std::uint32_t>(rng.next()) & s.all_mask();
      if (!allow_generic) mask &= ~(1u << s.generic_point());
      d = poset_set(s, mask);
      break;
    }
    case Backend::ordinal: {
      int parts = 1 + rng.below(3);
      for (int i = 0; i < parts; ++i) {
        Ordinal a = random_ordinal_below(rng, s.max_top());
        Ordinal b = random_ordinal_below(rng, s.max_top());
        if (b < a) std::swap(a, b);
        int r = rng.below(std::max(s.max_top().leading_exponent() + 1, 1));
        d = set_union(s, d, cell_set(s, a, b, r, rng.coin()));
      }
      break;
    }
    case Backend::cantor: {
      int cyls = rng.below(3);
      for (int i = 0; i < cyls; ++i) {
        std::string w;
        int len = rng.below(4);
        for (int j = 0; j < len; ++j) w += rng.coin() ? '1' : '0';
        d = set_union(s, d, cylinder(s, w));
      }
      for (int i = 0; i < 2; ++i) {
        std::string pre, per;
        int plen = rng.below(3);
        for (int j = 0; j < plen; ++j) pre += rng.coin() ? '1' : '0';
        per += rng.coin() ? '1' : '0';
        if (rng.coin()) per += rng.coin() ? '1' : '0';
        DefSet pt = point_set(s, Point::cantor(PeriodicWord::make(pre, per)));
        d = rng.coin() ? set_union(s, d, pt) : set_difference(s, d, pt);
      }
      break;
    }
  }
  if (allow_generic && s.backend() != Backend::poset && rng.coin())
    d = with_generic(s, d, true);
  return d;
}

DefSet random_closed_proper(Rng& rng, const Space& s) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    DefSet c = closure_of(s, random_definable(rng, s, false));
    if (!is_empty(c) && !contains_generic(s, c)) return c;
  }
  // Fall back to a single closed point.
  switch (s.backend()) {
    case Backend::poset: {
      std::uint32_t max = s.maximal_mask();
      if (max == 0) return empty_set(s);  // only the generic point exists
      int idx = 0;
      while (!((max >> idx) & 1u)) ++idx;
      return poset_set(s, s.up_mask(idx));
    }
    case Backend::ordinal: return point_set(s, Point::ordinal(Ordinal()));
    case Backend::cantor: return point_set(s, Point::cantor(PeriodicWord::make("", "0")));
  }
  return empty_set(s);
}

IdealDescriptor random_ideal(Rng& rng, const SpacePtr& space) {
  const Space& s = *space;
  DefSet c = random_closed_proper(rng, s);
  DefSet sharp = set_intersect(s, minimal_points(s, c), random_definable(rng, s, false));
  return make_ideal(space, std::move(c), std::move(sharp));
}

SpacePtr random_poset_space(Rng& rng, int nonzero_points) {
  static const char* kNames[] = {"p", "q", "r", "s", "t"};
  std::vector<std::string> points = {"o"};
  std::vector<std::pair<std::string, std::string>> less;
  for (int i = 0; i < nonzero_points && i < 5; ++i) {
    points.push_back(kNames[i]);
    less.push_back({"o", kNames[i]});
  }
  for (int i = 0; i < nonzero_points; ++i)
    for (int j = i + 1; j < nonzero_points; ++j)
      if (rng.below(5) < 2) less.push_back({kNames[i], kNames[j]});
  return Space::finite_poset(points, less);
}

SpectralOp random_spectral(Rng& rng, const SpacePtr& space) {
  return canonicalize_delta(space, random_definable(rng, *space, true));
}

std::vector<SpectralOp> random_family(Rng& rng, const SpacePtr& space, int size) {
  std::vector<SpectralOp> fam;
  for (int i = 0; i < size; ++i) fam.push_back(random_spectral(rng, space));
  return fam;
}

PruferPtr random_descriptor(Rng& rng, const SpacePtr& space) {
  const Space& s = *space;
  DefSet idem = random_definable(rng, s, false);
  if (s.backend() == Backend::poset) idem.bits &= ~(1u << s.generic_point());
  return make_descriptor(space, std::move(idem));
}

StableOpPair random_pair(Rng& rng, const PruferPtr& descriptor) {
  const Space& s = *descriptor->space;
  for (int attempt = 0; attempt < 64; ++attempt) {
    DefSet delta = generizations_of(s, random_definable(rng, s, false));
    if (rng.below(8) == 0) delta = empty_set(s);
    DefSet candidates = set_difference(
        s, set_intersect(s, descriptor->idempotent, descriptor->branched), delta);
    DefSet pi = set_intersect(s, candidates, random_definable(rng, s, false));
    if (is_empty(delta)) pi = empty_set(s);
    if (s.backend() == Backend::poset) {
      // Keep only pseudo-spectrum points whose strict generizations sit in delta.
      std::uint32_t keep = 0;
      for (int p = 0; p < s.point_count(); ++p) {
        std::uint32_t lower = s.down_mask(p) & ~(1u << p);
        if (((pi.bits >> p) & 1u) && (lower & ~delta.bits) == 0) keep |= 1u << p;
      }
      pi = poset_set(s, keep);
    }
    if (check_pair(*descriptor, delta, pi).empty())
      return StableOpPair{descriptor, std::move(delta), std::move(pi)};
  }
  return StableOpPair{descriptor, empty_set(s), empty_set(s)};
}

}  // namespace sslab
