#include <vector>

#include "doctest.h"
#include "sslab/oracle.hpp"
#include "sslab/radical.hpp"
#include "sslab/randgen.hpp"

using namespace sslab;

namespace {

Ordinal O(const char* lit) { return Ordinal::parse(lit); }

// The punctured model on the Cantor backend: sup over all P of the spectral
// operation defined by Max without P.
RadicalOp supnonrad() {
  auto c = Space::cantor_one_dim();
  return radical_punctured(c, max_part(*c), max_part(*c));
}

IdealDescriptor ideal_of(const SpacePtr& sp, DefSet c) {
  return make_ideal(sp, std::move(c), empty_set(*sp));
}

}  // namespace

TEST_CASE("quasi-closed tests") {
  auto op = supnonrad();
  const Space& c = *op.space;
  // Perfect sets stay dense after puncturing.
  CHECK(quasi_closed_test(op, cylinder(c, "0")));
  // A finite set has an isolated point, so some puncture breaks density.
  CHECK_FALSE(quasi_closed_test(op, point_set(c, Point::cantor(PeriodicWord::make("", "0")))));
  CHECK_THROWS_AS(quasi_closed_test(op, empty_set(c)), Error);

  auto w = Space::ordinal_one_dim(O("w"));
  DefSet below = set_difference(*w, max_part(*w), point_set(*w, Point::ordinal(O("w"))));
  RadicalOp join = radical_join_of({canonicalize_delta(w, below)});
  CHECK(quasi_closed_test(join, max_part(*w)));  // [0,w) is dense in [0,w]
}

TEST_CASE("greatest quasi-closed set on the ordinal backend") {
  auto w = Space::ordinal_one_dim(O("w"));
  DefSet d1 = max_part(*w);                                   // [0,w]
  DefSet d2 = cell_set(*w, O("1"), O("w"), 0, /*exact=*/false);  // [1,w]
  RadicalOp op = radical_join_of({canonicalize_delta(w, d1), canonicalize_delta(w, d2)});
  DefSet g = greatest_quasi_closed(op, max_part(*w));
  CHECK(g == d2);

  // Independent check: the candidate is quasi-closed and every strictly
  // larger closed set in the generated algebra is not.
  CHECK(quasi_closed_test(op, g));
  std::vector<DefSet> atoms = algebra_atoms(*w, {d1, d2, g});
  const std::uint32_t subsets = 1u << atoms.size();
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    DefSet cand = empty_set(*w);
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if ((mask >> i) & 1u) cand = set_union(*w, cand, atoms[i]);
    if (!is_closed(*w, cand) || !subset_of(*w, g, cand) || cand == g) continue;
    CHECK_FALSE(quasi_closed_test(op, cand));
  }
}

TEST_CASE("one fixpoint step strips an isolated point") {
  auto op = supnonrad();
  const Space& c = *op.space;
  Point p = Point::cantor(PeriodicWord::make("1", "1"));
  DefSet c0 = set_union(c, cylinder(c, "0"), point_set(c, p));
  int iterations = 0;
  DefSet g = greatest_quasi_closed(op, c0, &iterations);
  CHECK(g == cylinder(c, "0"));
  CHECK(iterations <= 3);

  // A defining family disjoint from c0 leaves nothing.
  auto s = Space::finite_poset({"o", "p", "q"}, {{"o", "p"}, {"o", "q"}});
  RadicalOp j = radical_join_of({canonicalize_delta(s, poset_set(*s, {"o", "p"}))});
  CHECK(is_empty(greatest_quasi_closed(j, poset_set(*s, {"q"}))));
}

TEST_CASE("membership in the punctured model") {
  auto op = supnonrad();
  const Space& c = *op.space;
  // Clopen-supported ideals stay proper...
  CHECK_FALSE(radical_member(op, ideal_of(op.space, cylinder(c, "0"))));
  CHECK_FALSE(radical_member(op, ideal_of(op.space, max_part(c))));
  // ...while finitely supported ideals collapse.
  DefSet finite = set_union(c, point_set(c, Point::cantor(PeriodicWord::make("", "0"))),
                            point_set(c, Point::cantor(PeriodicWord::make("", "1"))));
  CHECK(radical_member(op, ideal_of(op.space, finite)));
  // Confirmed against the quasi-closed test on every subset of the support.
  auto pts = finite_points(c, finite);
  REQUIRE(pts.has_value());
  for (std::uint32_t mask = 1; mask < (1u << pts->size()); ++mask) {
    DefSet sub = empty_set(c);
    for (std::size_t i = 0; i < pts->size(); ++i)
      if ((mask >> i) & 1u) sub = set_union(c, sub, point_set(c, (*pts)[i]));
    CHECK_FALSE(quasi_closed_test(op, sub));
  }
}

TEST_CASE("a singleton join agrees with the spectral membership") {
  Rng rng(55);
  for (int iter = 0; iter < 100; ++iter) {
    SpacePtr sp = random_poset_space(rng, 1 + rng.below(4));
    SpectralOp base = random_spectral(rng, sp);
    RadicalOp join = radical_join_of({base});
    for (int t = 0; t < 10; ++t) {
      IdealDescriptor ideal = random_ideal(rng, sp);
      CHECK(radical_member(join, ideal) == spectral_member(base, ideal));
    }
  }
}

TEST_CASE("quasi-spectra") {
  auto op = supnonrad();
  DefSet q = radical_qspec(op);
  CHECK(q == with_generic(*op.space, empty_set(*op.space), true));  // only the zero ideal

  Rng rng(66);
  for (int iter = 0; iter < 50; ++iter) {
    SpacePtr sp = random_poset_space(rng, 1 + rng.below(4));
    SpectralOp base = random_spectral(rng, sp);
    DefSet expect = set_union(*sp, base.delta_down, poset_set(*sp, 1u << sp->generic_point()));
    CHECK(radical_qspec(radical_join_of({base})) == expect);
  }
}

TEST_CASE("meet quasi-spectra match the spectral infimum on the catalog") {
  for (const SpacePtr& sp : poset_catalog(5)) {
    Rng rng(17);
    for (int t = 0; t < 4; ++t) {
      SpectralOp a = random_spectral(rng, sp), b = random_spectral(rng, sp);
      RadicalOp meet = radical_meet(radical_join_of({a}), radical_join_of({b}));
      DefSet expect = set_union(*sp, spectral_inf({a, b}).delta_down,
                                poset_set(*sp, 1u << sp->generic_point()));
      CHECK(radical_qspec(meet) == expect);
      // Membership of the meet is the conjunction.
      for (int k = 0; k < 6; ++k) {
        IdealDescriptor ideal = random_ideal(rng, sp);
        CHECK(radical_member(meet, ideal) ==
              (radical_member(radical_join_of({a}), ideal) &&
               radical_member(radical_join_of({b}), ideal)));
      }
    }
  }
}

TEST_CASE("spectrality decisions") {
  auto report = radical_is_spectral(supnonrad());
  CHECK_FALSE(report.spectral);
  REQUIRE(report.witness.has_value());
  CHECK_FALSE(is_empty(*report.witness));
  CHECK(report.witness->plus.empty());  // the witness is clopen

  auto w = Space::ordinal_one_dim(O("w^2"));
  Rng rng(5);
  RadicalOp join = radical_join_of(random_family(rng, w, 3));
  auto ord_report = radical_is_spectral(join);
  CHECK(ord_report.spectral);
  CHECK(ord_report.via == "min-scattered fast path");

  SpacePtr sp = random_poset_space(rng, 3);
  auto single = radical_is_spectral(radical_join_of({random_spectral(rng, sp)}));
  CHECK(single.spectral);
}

TEST_CASE("every join/punctured/meet term is spectral on finite posets") {
  Rng rng(91);
  for (const SpacePtr& sp : poset_catalog(4)) {
    RadicalOp a = radical_join_of(random_family(rng, sp, 1 + rng.below(2)));
    CHECK(radical_is_spectral(a).spectral);

    DefSet maxp = poset_set(*sp, sp->maximal_mask());
    DefSet punct = set_intersect(*sp, maxp, random_definable(rng, *sp, false));
    RadicalOp b = radical_punctured(sp, maxp, punct);
    CHECK(radical_is_spectral(b).spectral);

    CHECK(radical_is_spectral(radical_meet(a, b)).spectral);
  }
}

TEST_CASE("join and meet constructors") {
  Rng rng(2);
  auto sp = random_poset_space(rng, 3);
  SpectralOp a = random_spectral(rng, sp), b = random_spectral(rng, sp);
  RadicalOp ja = radical_join_of({a}), jb = radical_join_of({b});

  RadicalOp joined = radical_join(ja, jb);
  REQUIRE(joined.form == RadicalOp::Form::join);
  CHECK(joined.family.size() == 2);

  // Punctured forms with one support merge their puncture sets.
  auto c = Space::cantor_one_dim();
  DefSet s1 = cylinder(*c, "0"), s2 = cylinder(*c, "1");
  RadicalOp p1 = radical_punctured(c, max_part(*c), s1);
  RadicalOp p2 = radical_punctured(c, max_part(*c), s2);
  RadicalOp merged = radical_join(p1, p2);
  REQUIRE(merged.form == RadicalOp::Form::punctured);
  CHECK(merged.punct_s == max_part(*c));

  // Meets cannot be joined.
  CHECK_THROWS_AS(radical_join(radical_meet(ja, jb), ja), Error);

  // Meet of an op with the trivial operation behaves like the op.
  RadicalOp trivial = radical_join_of({canonicalize_delta(sp, empty_set(*sp))});
  RadicalOp met = radical_meet(ja, trivial);
  for (int t = 0; t < 20; ++t) {
    IdealDescriptor ideal = random_ideal(rng, sp);
    CHECK(radical_member(met, ideal) == radical_member(ja, ideal));
    CHECK(radical_member(radical_meet(ja, ja), ideal) == radical_member(ja, ideal));
  }
}

TEST_CASE("join membership matches the spectral supremum on finite posets") {
  // With finitely many minimal primes, every radical operation is spectral:
  // the semistar supremum of a family is the spectral operation on the
  // intersection of the defining sets.
  Rng rng(88);
  for (const SpacePtr& sp : poset_catalog(5)) {
    for (int t = 0; t < 3; ++t) {
      auto fam = random_family(rng, sp, 1 + rng.below(3));
      RadicalOp join = radical_join_of(fam);
      SpectralOp sup = spectral_sup(fam);
      for (int k = 0; k < 8; ++k) {
        IdealDescriptor ideal = random_ideal(rng, sp);
        CHECK(radical_member(join, ideal) == spectral_member(sup, ideal));
      }
    }
  }
}

TEST_CASE("join membership matches the spectral supremum on ordinals") {
  Rng rng(20260810);
  for (const char* top : {"w", "w^2", "w^3"}) {
    auto w = Space::ordinal_one_dim(O(top));
    for (int f = 0; f < 60; ++f) {
      auto fam = random_family(rng, w, 1 + rng.below(3));
      RadicalOp join = radical_join_of(fam);
      SpectralOp sup = spectral_sup(fam);
      for (int k = 0; k < 20; ++k) {
        IdealDescriptor ideal = random_ideal(rng, w);
        CHECK(radical_member(join, ideal) == spectral_member(sup, ideal));
      }
    }
  }
}

TEST_CASE("radical membership ignores the sharp locus") {
  Rng rng(99);
  int checked = 0;
  while (checked < 200) {
    SpacePtr sp = rng.coin() ? SpacePtr(random_poset_space(rng, 1 + rng.below(4)))
                             : Space::ordinal_one_dim(O("w^2"));
    RadicalOp op = radical_join_of(random_family(rng, sp, 1 + rng.below(2)));
    IdealDescriptor base = random_ideal(rng, sp);
    bool expect = radical_member(op, base);
    // Every sharp assignment gives the same answer.
    DefSet mins = minimal_points(*sp, base.C);
    for (int v = 0; v < 3; ++v) {
      DefSet sharp = v == 0   ? empty_set(*sp)
                     : v == 1 ? mins
                              : set_intersect(*sp, mins, random_definable(rng, *sp, false));
      IdealDescriptor probe = make_ideal(sp, base.C, sharp);
      CHECK(radical_member(op, probe) == expect);
      ++checked;
    }
  }
}

TEST_CASE("greatest quasi-closed contains every quasi-closed subset") {
  Rng rng(1234);
  for (int iter = 0; iter < 60; ++iter) {
    SpacePtr sp = random_poset_space(rng, 1 + rng.below(4));
    RadicalOp op = radical_join_of(random_family(rng, sp, 1 + rng.below(3)));
    DefSet c0 = random_closed_proper(rng, *sp);
    DefSet g = greatest_quasi_closed(op, c0);
    if (!is_empty(g)) CHECK(quasi_closed_test(op, g));
    // All closed subsets of c0 (exhaustive on these small posets).
    for (std::uint32_t mask = 1; mask <= c0.bits; ++mask) {
      if ((mask & ~c0.bits) != 0) continue;
      DefSet sub = poset_set(*sp, mask);
      if (!is_closed(*sp, sub)) continue;
      if (quasi_closed_test(op, sub)) CHECK(subset_of(*sp, sub, g));
    }
  }
}
