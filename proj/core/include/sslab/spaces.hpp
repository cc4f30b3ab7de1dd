#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sslab/error.hpp"
#include "sslab/ordinal.hpp"

namespace sslab {

enum class Backend { poset, ordinal, cantor };
std::string_view backend_name(Backend b);

/// An eventually periodic binary sequence pre (per)^w, the point model of the
/// Cantor backend. Canonical: per is primitive (not a proper power) and pre is
/// as short as possible, so equality of sequences is structural equality.
class PeriodicWord {
 public:
  static PeriodicWord make(std::string pre, std::string per);
  /// Parses  pre(per)  with both parts over {0,1}, e.g. "01(10)".
  static PeriodicWord parse(std::string_view text);

  const std::string& pre() const { return pre_; }
  const std::string& per() const { return per_; }
  char at(std::size_t i) const;
  bool starts_with(std::string_view word) const;
  std::string str() const;

  friend auto operator<=>(const PeriodicWord&, const PeriodicWord&) = default;

 private:
  std::string pre_, per_;
};

class Space;
using SpacePtr = std::shared_ptr<const Space>;

/// A decidable model of a prime spectrum with Zariski topology.
///
///  - finite_poset: an explicit finite poset under the containment order with
///    a unique minimum (the generic point / zero ideal). Zariski-closed sets
///    are the up-closed sets.
///  - ordinal_one_dim: Spec = {generic} u Max, with Max the ordinal interval
///    [0, max_top] under the order topology; maximal points are pairwise
///    incomparable.
///  - cantor_one_dim: Spec = {generic} u Max with Max the Cantor space {0,1}^w.
class Space : public std::enable_shared_from_this<Space> {
 public:
  static SpacePtr finite_poset(std::vector<std::string> points,
                               std::vector<std::pair<std::string, std::string>> less);
  static SpacePtr ordinal_one_dim(Ordinal max_top);
  static SpacePtr cantor_one_dim();

  Backend backend() const { return backend_; }
  bool one_dimensional() const { return backend_ != Backend::poset; }

  // Finite poset accessors. Points are stored sorted by name; masks are
  // bitsets over point indices (the generic point has its own bit).
  int point_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& point_names() const { return names_; }
  int generic_point() const { return generic_; }
  int point_index(std::string_view name) const;
  bool leq_points(int a, int b) const { return (up_[a] >> b) & 1u; }
  std::uint32_t up_mask(int p) const { return up_[p]; }
  std::uint32_t down_mask(int p) const { return down_[p]; }
  std::uint32_t all_mask() const;
  std::uint32_t maximal_mask() const { return maximal_; }

  const Ordinal& max_top() const { return max_top_; }

  bool operator==(const Space& other) const;
  std::string describe() const;

 private:
  Space() = default;
  Backend backend_ = Backend::poset;
  std::vector<std::string> names_;
  std::vector<std::uint32_t> up_, down_;
  std::uint32_t maximal_ = 0;
  int generic_ = -1;
  Ordinal max_top_;
};

/// One canonical segment of the ordinal backend: the points of [lo, hi] whose
/// nu is exactly `nu` (nu == kNuTop encodes the single point 0). lo is always
/// a member; hi is either the largest member (nu(hi) == nu) or the supremum of
/// the members (nu(hi) > nu, a limit bound that is itself not a member).
struct CellSeg {
  Ordinal lo, hi;
  int nu = 0;
  friend bool operator==(const CellSeg&, const CellSeg&) = default;
};

/// A decidable subset of a spectrum, in canonical form; structural equality
/// is set equality. Payload fields are backend-specific:
///  - poset:   `bits`, a mask over point indices (generic included as a bit);
///  - ordinal: `cells`, disjoint maximal segments sorted by lo, plus `generic`;
///  - cantor:  `clopen` (prefix-free, sibling-merged cylinder words),
///             `plus` (isolated points outside the clopen part),
///             `minus` (punctures inside the clopen part), plus `generic`.
/// Instances are produced by the operations below and must not be edited in
/// place.
struct DefSet {
  Backend backend = Backend::poset;
  std::uint32_t bits = 0;
  std::vector<CellSeg> cells;
  std::vector<std::string> clopen;
  std::vector<PeriodicWord> plus, minus;
  bool generic = false;

  friend bool operator==(const DefSet&, const DefSet&) = default;
};

/// A single point of a space, used for witnesses and sampling.
struct Point {
  Backend backend = Backend::poset;
  bool generic = false;
  int index = -1;                     // poset
  Ordinal ord;                        // ordinal backend
  std::optional<PeriodicWord> word;   // cantor backend

  static Point generic_of(const Space& s);
  static Point poset(int index);
  static Point ordinal(Ordinal o);
  static Point cantor(PeriodicWord w);
  std::string str(const Space& s) const;
  friend bool operator==(const Point&, const Point&) = default;
};

// -- Constructors ------------------------------------------------------------

DefSet empty_set(const Space& s);
DefSet full_spec(const Space& s);
/// All of Max (one-dim) / all nonzero primes (poset); never the generic point.
DefSet max_part(const Space& s);
DefSet poset_set(const Space& s, std::uint32_t mask);
DefSet poset_set(const Space& s, const std::vector<std::string>& names);
/// {x in [lo, hi] : nu(x) >= r} for exact == false, nu(x) == r for exact.
/// r may be kNuTop. Result is canonicalized; bounds are clamped to max_top.
DefSet cell_set(const Space& s, const Ordinal& lo, const Ordinal& hi, int r, bool exact);
DefSet cylinder(const Space& s, std::string_view word);
DefSet point_set(const Space& s, const Point& p);
DefSet with_generic(const Space& s, DefSet a, bool generic);

// -- Boolean algebra ---------------------------------------------------------

enum class SetOp { unite, intersect, complement, difference };

DefSet set_union(const Space& s, const DefSet& a, const DefSet& b);
DefSet set_intersect(const Space& s, const DefSet& a, const DefSet& b);
/// Complement relative to the full Spec (flips generic membership).
DefSet set_complement(const Space& s, const DefSet& a);
DefSet set_difference(const Space& s, const DefSet& a, const DefSet& b);
DefSet boolean_combine(const Space& s, SetOp op, const DefSet& a, const DefSet* b);

bool is_empty(const DefSet& a);
bool contains_generic(const Space& s, const DefSet& a);
bool subset_of(const Space& s, const DefSet& a, const DefSet& b);
bool member_point(const Space& s, const DefSet& a, const Point& p);

// -- Topology ----------------------------------------------------------------

/// Smallest Zariski-closed set containing a. On the poset backend this is the
/// upward closure; on one-dim backends a set containing the generic point
/// closes to all of Spec, otherwise to its topological closure inside Max.
DefSet closure_of(const Space& s, const DefSet& a);
bool is_closed(const Space& s, const DefSet& a);

/// Downward closure under specialization; any nonempty set gains the generic
/// point.
DefSet generizations_of(const Space& s, const DefSet& a);

/// Minimal points of a Zariski-closed set (ErrorKind::not_closed otherwise).
DefSet minimal_points(const Space& s, const DefSet& c);

/// Points of s that are isolated in the subspace topology of s.
DefSet isolated_points_in(const Space& s, const DefSet& set);
/// s minus its subspace-isolated points.
DefSet derived_set_in(const Space& s, const DefSet& set);

/// True iff closure(a n c) contains c; c must be Zariski-closed and must not
/// contain the generic point.
bool is_dense_in(const Space& s, const DefSet& a, const DefSet& c);

/// Least m with derived^m(s) empty, or nullopt when s is not scattered.
std::optional<int> cb_rank(const Space& s, const DefSet& set);

struct PerfectReport {
  bool is_scattered = false;
  bool is_perfect = false;
  std::optional<Point> witness_isolated;  // present iff nonempty and not perfect
};
PerfectReport perfect_report(const Space& s, const DefSet& set);

// -- Utilities ---------------------------------------------------------------

/// Deterministically picks a non-generic point of a, if one exists.
std::optional<Point> sample_point(const Space& s, const DefSet& a);

/// Splits Max into the atoms of the boolean algebra generated by the Max
/// parts of the given sets (generic flags ignored). Atoms are nonempty and
/// pairwise disjoint and cover Max.
std::vector<DefSet> algebra_atoms(const Space& s, const std::vector<DefSet>& generators);

/// Renders the canonical document literal for a set.
std::string render_set(const Space& s, const DefSet& a);

}  // namespace sslab
