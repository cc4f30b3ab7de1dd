#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "sslab/spaces.hpp"

using namespace sslab;

namespace {

Ordinal O(const char* lit) { return Ordinal::parse(lit); }

SpacePtr W(const char* top) { return Space::ordinal_one_dim(O(top)); }

DefSet ge_cell(const Space& s, const char* lo, const char* hi, int r) {
  return cell_set(s, O(lo), O(hi), r, /*exact=*/false);
}
DefSet eq_cell(const Space& s, const char* lo, const char* hi, int r) {
  return cell_set(s, O(lo), O(hi), r, /*exact=*/true);
}

// ---------------------------------------------------------------------------
// Truncated-copy oracle for max_top = w*R: every point is w*a+b; rows are
// enumerated up to b <= B, and a set is sampled through member_point only.
// The topology (limits, closure, isolated points) is recomputed from first
// principles: the only limit points of [0, w*R] are the w*a with a >= 1, and
// such a point is a limit of a set iff the set has a tail in row a-1. Sets
// used here keep their row membership constant beyond b >= C0, so the tail
// test is decided by inspecting b in [C0, B].
// ---------------------------------------------------------------------------

constexpr int kRows = 5;    // max_top = w*5
constexpr int kC0 = 10;     // endpoint coefficients in tests stay below this
constexpr int kB = 30;

struct TruncModel {
  // membership[a][b], rows a in [0, kRows), plus the top point w*kRows.
  bool mem[kRows + 1][kB + 1] = {};
  bool top = false;

  static TruncModel sample(const Space& s, const DefSet& d) {
    TruncModel m;
    for (int a = 0; a < kRows; ++a)
      for (int b = 0; b <= kB; ++b) {
        Ordinal x = a == 0 ? Ordinal::nat(b) : Ordinal::omega_power(1, a) + Ordinal::nat(b);
        m.mem[a][b] = member_point(s, d, Point::ordinal(x));
      }
    m.top = member_point(s, d, Point::ordinal(Ordinal::omega_power(1, kRows)));
    return m;
  }

  bool has_tail(int row) const {
    bool all = true, none = true;
    for (int b = kC0; b <= kB; ++b) (mem[row][b] ? none : all) = false;
    REQUIRE((all || none));  // sets in these tests are tail-definite
    return all;
  }

  bool at(int a, int b) const { return a == kRows ? (b == 0 && top) : mem[a][b]; }

  // x = w*a+b is isolated in the subspace: successors and 0 always are; a
  // limit point w*a is isolated iff the set has no tail in row a-1.
  bool isolated(int a, int b) const {
    REQUIRE(at(a, b));
    if (b > 0 || a == 0) return true;
    return !has_tail(a - 1);
  }
};

Ordinal pt(int a, int b) {
  return a == 0 ? Ordinal::nat(b) : Ordinal::omega_power(1, a) + Ordinal::nat(b);
}

DefSet random_cells(std::mt19937_64& rng, const Space& s) {
  auto rnd_ord = [&]() {
    int a = static_cast<int>(rng() % (kRows + 1));
    int b = a == kRows ? 0 : static_cast<int>(rng() % 6);
    return pt(a, b);
  };
  DefSet d = empty_set(s);
  int parts = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < parts; ++i) {
    Ordinal x = rnd_ord(), y = rnd_ord();
    if (y < x) std::swap(x, y);
    int r = static_cast<int>(rng() % 3);  // 0, 1, 2; 2 is empty at this height
    d = set_union(s, d, cell_set(s, x, y, r, rng() % 2 == 0));
  }
  return d;
}

}  // namespace

TEST_CASE("cell constructors and membership") {
  auto s = W("w^2");
  DefSet limits = ge_cell(*s, "0", "w^2", 1);
  CHECK(member_point(*s, limits, Point::ordinal(O("0"))));  // nu(0) = top >= 1
  CHECK(member_point(*s, limits, Point::ordinal(O("w"))));
  CHECK(member_point(*s, limits, Point::ordinal(O("w*3"))));
  CHECK(member_point(*s, limits, Point::ordinal(O("w^2"))));
  CHECK_FALSE(member_point(*s, limits, Point::ordinal(O("4"))));
  CHECK_FALSE(member_point(*s, limits, Point::ordinal(O("w+1"))));

  // Canonical form: the two ways to build the successors agree.
  DefSet succ1 = eq_cell(*s, "0", "w^2", 0);
  DefSet succ2 = set_difference(*s, max_part(*s), limits);
  CHECK(succ1 == succ2);
}

TEST_CASE("complement of the limit cell is the successor cell") {
  auto s = W("w");
  DefSet a = ge_cell(*s, "0", "w", 1);          // {0, w}
  DefSet c = set_complement(*s, a);             // {1, 2, ...} + generic flag flip
  CHECK(c == with_generic(*s, eq_cell(*s, "1", "w", 0), true));
  CHECK(with_generic(*s, c, false) == eq_cell(*s, "1", "w", 0));
  CHECK_FALSE(member_point(*s, c, Point::ordinal(O("w"))));
  CHECK(member_point(*s, c, Point::ordinal(O("3"))));
}

TEST_CASE("closure completes each cell upward") {
  auto s = W("w");
  CHECK(closure_of(*s, eq_cell(*s, "0", "w", 0)) == ge_cell(*s, "1", "w", 0));
  // [0,w) closes to [0,w]: w is the supremum.
  DefSet half_open = set_union(*s, eq_cell(*s, "1", "w", 0), point_set(*s, Point::ordinal(O("0"))));
  CHECK(closure_of(*s, half_open) == ge_cell(*s, "0", "w", 0));
  // A set containing the generic point closes to all of Spec.
  CHECK(closure_of(*s, with_generic(*s, empty_set(*s), true)) == full_spec(*s));
}

TEST_CASE("derived sets of Max") {
  auto s2 = W("w^2");
  // derived(Max [0,w^2]) = {x in (0,w^2] : nu >= 1}: the cell without 0.
  DefSet derived = derived_set_in(*s2, max_part(*s2));
  CHECK(derived == ge_cell(*s2, "1", "w^2", 1));
  CHECK_FALSE(member_point(*s2, derived, Point::ordinal(O("0"))));

  auto s1 = W("w");
  CHECK(derived_set_in(*s1, max_part(*s1)) == eq_cell(*s1, "w", "w", 1));  // {w}
  // derived of a finite set is empty.
  DefSet fin = set_union(*s1, point_set(*s1, Point::ordinal(O("3"))),
                         point_set(*s1, Point::ordinal(O("7"))));
  CHECK(derived_set_in(*s1, fin) == empty_set(*s1));
}

TEST_CASE("isolated points of the nu>=1 cell in [0,w^2]") {
  auto s = W("w^2");
  DefSet cell = ge_cell(*s, "0", "w^2", 1);
  DefSet iso = isolated_points_in(*s, cell);
  // {0} plus the exactly-nu=1 points; w^2 is the unique limit of the cell.
  DefSet expect = set_union(*s, point_set(*s, Point::ordinal(O("0"))), eq_cell(*s, "w", "w^2", 1));
  CHECK(iso == expect);
  CHECK(derived_set_in(*s, cell) == eq_cell(*s, "w^2", "w^2", 2));
}

TEST_CASE("Max [0,w] isolated points are the naturals") {
  auto s = W("w");
  DefSet iso = isolated_points_in(*s, max_part(*s));
  DefSet expect = set_union(*s, point_set(*s, Point::ordinal(O("0"))), eq_cell(*s, "1", "w", 0));
  CHECK(iso == expect);
}

TEST_CASE("cb_rank of Max [0,w^k] is k+1") {
  for (int k = 0; k <= 5; ++k) {
    auto s = Space::ordinal_one_dim(Ordinal::omega_power(k, 1));
    auto r = cb_rank(*s, max_part(*s));
    REQUIRE(r.has_value());
    CHECK(*r == k + 1);
  }
  CHECK(cb_rank(*W("w"), empty_set(*W("w"))) == 0);
}

TEST_CASE("perfect report on ordinal sets") {
  auto s = W("w");
  auto r = perfect_report(*s, max_part(*s));
  CHECK(r.is_scattered);
  CHECK_FALSE(r.is_perfect);
  REQUIRE(r.witness_isolated.has_value());
  CHECK(r.witness_isolated->ord == O("0"));  // the minimum of a well-order is isolated

  auto e = perfect_report(*s, empty_set(*s));
  CHECK(e.is_scattered);
  CHECK(e.is_perfect);
}

TEST_CASE("density on the order backend") {
  auto s = W("w");
  DefSet maxp = max_part(*s);
  DefSet below = set_difference(*s, maxp, point_set(*s, Point::ordinal(O("w"))));  // [0,w)
  CHECK(is_dense_in(*s, below, maxp));
  // Dropping 0 (isolated in Max) breaks density.
  DefSet succ = eq_cell(*s, "1", "w", 0);
  CHECK_FALSE(is_dense_in(*s, succ, maxp));
}

TEST_CASE("boolean/closure behaviour agrees with the truncated-copy oracle") {
  auto s = W("w*5");
  std::mt19937_64 rng(20260801);
  for (int iter = 0; iter < 300; ++iter) {
    DefSet a = random_cells(rng, *s);
    DefSet b = random_cells(rng, *s);

    // Membership of boolean combinations distributes pointwise.
    DefSet u = set_union(*s, a, b), i = set_intersect(*s, a, b), d = set_difference(*s, a, b);
    for (int t = 0; t < 24; ++t) {
      int row = static_cast<int>(rng() % (kRows + 1));
      Ordinal x = pt(row, row == kRows ? 0 : static_cast<int>(rng() % kB));
      Point p = Point::ordinal(x);
      bool ma = member_point(*s, a, p), mb = member_point(*s, b, p);
      CHECK(member_point(*s, u, p) == (ma || mb));
      CHECK(member_point(*s, i, p) == (ma && mb));
      CHECK(member_point(*s, d, p) == (ma && !mb));
    }

    // Isolated points and closure match the brute-force model.
    TruncModel ma = TruncModel::sample(*s, a);
    DefSet iso = isolated_points_in(*s, a);
    DefSet clo = closure_of(*s, a);
    for (int row = 0; row <= kRows; ++row) {
      for (int bcol = 0; bcol <= (row == kRows ? 0 : kB); ++bcol) {
        Point p = Point::ordinal(pt(row, bcol));
        if (ma.at(row, bcol)) {
          CHECK(member_point(*s, iso, p) == ma.isolated(row, bcol));
          CHECK(member_point(*s, clo, p));
        } else {
          CHECK_FALSE(member_point(*s, iso, p));
          bool limit = bcol == 0 && row >= 1 && ma.has_tail(row - 1);
          CHECK(member_point(*s, clo, p) == limit);
        }
      }
    }
  }
}

TEST_CASE("set identities hold on random cell sets at height w^3") {
  auto s = W("w^3");
  std::mt19937_64 rng(5150);
  auto rnd = [&]() {
    DefSet d = empty_set(*s);
    int parts = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < parts; ++i) {
      std::vector<Ordinal::Term> terms;
      for (int e = 3; e >= 0; --e)
        if (rng() % 2) terms.push_back({e, 1 + rng() % 3});
      Ordinal x = Ordinal::from_terms(terms);
      Ordinal y = x + Ordinal::omega_power(static_cast<int>(rng() % 3), 1 + rng() % 2);
      d = set_union(*s, d, cell_set(*s, x, y, static_cast<int>(rng() % 4), rng() % 2 == 0));
    }
    return d;
  };
  for (int iter = 0; iter < 400; ++iter) {
    DefSet a = rnd(), b = rnd();
    // De Morgan.
    CHECK(set_complement(*s, set_union(*s, a, b)) ==
          set_intersect(*s, set_complement(*s, a), set_complement(*s, b)));
    // Closure: extensive, idempotent, distributes over finite unions.
    DefSet ca = closure_of(*s, a);
    CHECK(subset_of(*s, a, ca));
    CHECK(closure_of(*s, ca) == ca);
    CHECK(closure_of(*s, set_union(*s, a, b)) == set_union(*s, ca, closure_of(*s, b)));
    // Partition into isolated and derived parts.
    CHECK(set_union(*s, isolated_points_in(*s, a), derived_set_in(*s, a)) == a);
    CHECK(is_empty(set_intersect(*s, isolated_points_in(*s, a), derived_set_in(*s, a))));
    // Derived sets of closed sets stay closed and shrink.
    DefSet der = derived_set_in(*s, ca);
    CHECK(subset_of(*s, der, ca));
    CHECK(is_closed(*s, der));
  }
}
