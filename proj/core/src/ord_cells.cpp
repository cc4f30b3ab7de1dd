#include <algorithm>
#include <array>
#include <optional>

#include "backend_detail.hpp"
#include "sslab/ordinal.hpp"
#include "sslab/spaces.hpp"

// Canonical set algebra on the ordinal backend.
//
// A definable subset of Max = [0, max_top] is stored as a union of exact-nu
// segments: CellSeg{lo, hi, r} denotes {x in [lo, hi] : nu(x) == r}, where
// nu(x) is the least CNF exponent of x and nu(0) == kNuTop. Segments of a
// canonical set are pairwise disjoint (nu partitions Max into levels), sorted
// by lo, and maximal: two same-level segments are always separated by an
// exact-level point that lies outside the set. lo is a member; hi is the
// supremum of the members and is itself a member exactly when nu(hi) == r.
// This representation is closed under boolean operations, closure and derived
// sets, which plain interval unions are not.

namespace sslab::detail {

namespace {

using Run = std::pair<Ordinal, Ordinal>;  // [lo, hi] within one level

// Least y >= x with nu(y) == r (r <= K). Unbounded; callers clamp to max_top.
Ordinal ceil_exact(const Ordinal& x, int r) {
  Ordinal u = x.ceil_to(r);
  if (u.nu() == r) return u;
  // u is zero or a multiple of w^(r+1); the next exact-r point follows it.
  return u + Ordinal::omega_power(r);
}

// Sup of {y < x : nu(y) == r}, or nullopt when no such y exists. The result
// is a member exactly when its nu equals r; otherwise it is a limit bound.
std::optional<Ordinal> sup_exact_below(const Ordinal& x, int r) {
  if (x.is_zero()) return std::nullopt;
  Ordinal v = x.floor_to(r);
  if (v < x) {
    // x has a tail below w^r; the largest multiple of w^r below x is v.
    if (v.is_zero()) return std::nullopt;  // x < w^r
    return v;                              // member if nu(v) == r, limit bound otherwise
  }
  // x itself is a multiple of w^r.
  if (x.nu() == r) {
    const auto last = x.terms().back();
    Ordinal head = x.floor_to(r + 1);
    if (last.coeff >= 2) return head + Ordinal::omega_power(r, last.coeff - 1);
    if (head.is_zero()) return std::nullopt;  // x == w^r
    return head;                              // limit bound, nu(head) > r
  }
  // nu(x) > r: x is a limit of exact-r points from below.
  return x;
}

// Sup of {y <= x : nu(y) == r}.
std::optional<Ordinal> sup_exact_le(const Ordinal& x, int r) {
  if (x.nu() == r) return x;
  return sup_exact_below(x, r);
}

// The single run of all exact-r points in [0, max_top], if any.
std::optional<Run> level_full(const Space& s, int r) {
  Ordinal lo = ceil_exact(Ordinal(), r);
  if (lo > s.max_top()) return std::nullopt;
  auto hi = sup_exact_le(s.max_top(), r);
  return Run{lo, *hi};
}

std::vector<Run> level_of(const DefSet& a, int r) {
  std::vector<Run> runs;
  for (const auto& c : a.cells)
    if (c.nu == r) runs.push_back({c.lo, c.hi});
  return runs;
}

// Merges a sorted list of canonical runs; two runs merge when no exact-r
// point separates them.
std::vector<Run> merge_runs(int r, std::vector<Run> runs) {
  if (runs.empty()) return runs;
  std::sort(runs.begin(), runs.end());
  std::vector<Run> out;
  out.push_back(runs.front());
  for (std::size_t i = 1; i < runs.size(); ++i) {
    Run& cur = out.back();
    const Run& next = runs[i];
    bool joined;
    if (next.first <= cur.second) {
      joined = true;
    } else {
      Ordinal gap = ceil_exact(cur.second.successor(), r);
      joined = gap >= next.first;
    }
    if (joined) {
      if (next.second > cur.second) cur.second = next.second;
    } else {
      out.push_back(next);
    }
  }
  return out;
}

std::vector<Run> level_union(int r, const std::vector<Run>& a, const std::vector<Run>& b) {
  std::vector<Run> runs = a;
  runs.insert(runs.end(), b.begin(), b.end());
  return merge_runs(r, std::move(runs));
}

std::vector<Run> level_intersect(int r, const std::vector<Run>& a, const std::vector<Run>& b) {
  (void)r;
  std::vector<Run> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const Ordinal& lo = std::max(a[i].first, b[j].first);
    const Ordinal& hi = std::min(a[i].second, b[j].second);
    if (lo <= hi) out.push_back({lo, hi});
    if (a[i].second < b[j].second)
      ++i;
    else
      ++j;
  }
  return out;
}

// Complement within the full level range.
std::vector<Run> level_complement(const Space& s, int r, const std::vector<Run>& a) {
  auto full = level_full(s, r);
  if (!full) return {};
  std::vector<Run> out;
  std::optional<Ordinal> cursor = full->first;  // always a member when set
  for (const Run& seg : a) {
    if (!cursor) break;
    auto left = sup_exact_below(seg.first, r);
    if (left && *left >= *cursor) out.push_back({*cursor, std::min(*left, full->second)});
    Ordinal next = ceil_exact(seg.second.successor(), r);
    if (next > full->second) {
      cursor.reset();
    } else {
      cursor = next;
    }
  }
  if (cursor && *cursor <= full->second) out.push_back({*cursor, full->second});
  return out;
}

DefSet assemble(const Space& s, std::array<std::vector<Run>, kNuTop + 1>& levels, bool zero,
                bool generic) {
  DefSet d;
  d.backend = Backend::ordinal;
  d.generic = generic;
  if (zero) d.cells.push_back({Ordinal(), Ordinal(), kNuTop});
  for (int r = 0; r <= kMaxExponent; ++r)
    for (const Run& run : levels[r]) d.cells.push_back({run.first, run.second, r});
  std::sort(d.cells.begin(), d.cells.end(),
            [](const CellSeg& x, const CellSeg& y) { return x.lo < y.lo; });
  (void)s;
  return d;
}

bool has_zero(const DefSet& a) {
  return !a.cells.empty() && a.cells.front().nu == kNuTop;
}

}  // namespace

DefSet ord_full_max(const Space& s) {
  std::array<std::vector<Run>, kNuTop + 1> levels;
  for (int r = 0; r <= kMaxExponent; ++r)
    if (auto f = level_full(s, r)) levels[r].push_back(*f);
  return assemble(s, levels, /*zero=*/true, /*generic=*/false);
}

DefSet ord_make_cell(const Space& s, const Ordinal& lo, const Ordinal& hi, int r, bool exact) {
  if (r < 0 || r > kNuTop) fail(ErrorKind::bound, "nu level out of range");
  std::array<std::vector<Run>, kNuTop + 1> levels;
  Ordinal top = std::min(hi, s.max_top());
  bool zero = false;
  const int r_last = exact ? r : kNuTop;
  for (int rr = r; rr <= r_last; ++rr) {
    if (rr == kNuTop) {
      zero = lo.is_zero();  // 0 is in [lo, top] iff lo == 0
      continue;
    }
    Ordinal a = ceil_exact(lo, rr);
    if (a > top) continue;
    auto b = sup_exact_le(top, rr);
    if (!b || *b < a) continue;
    levels[rr].push_back({a, *b});
  }
  return assemble(s, levels, zero, false);
}

DefSet ord_union(const Space& s, const DefSet& a, const DefSet& b) {
  std::array<std::vector<Run>, kNuTop + 1> levels;
  for (int r = 0; r <= kMaxExponent; ++r) levels[r] = level_union(r, level_of(a, r), level_of(b, r));
  return assemble(s, levels, has_zero(a) || has_zero(b), a.generic || b.generic);
}

DefSet ord_intersect(const Space& s, const DefSet& a, const DefSet& b) {
  std::array<std::vector<Run>, kNuTop + 1> levels;
  for (int r = 0; r <= kMaxExponent; ++r)
    levels[r] = level_intersect(r, level_of(a, r), level_of(b, r));
  return assemble(s, levels, has_zero(a) && has_zero(b), a.generic && b.generic);
}

DefSet ord_complement_max(const Space& s, const DefSet& a) {
  std::array<std::vector<Run>, kNuTop + 1> levels;
  for (int r = 0; r <= kMaxExponent; ++r) levels[r] = level_complement(s, r, level_of(a, r));
  return assemble(s, levels, !has_zero(a), false);
}

bool ord_member(const Space& s, const DefSet& a, const Ordinal& x) {
  if (x > s.max_top()) return false;
  const int r = x.nu();
  for (const auto& c : a.cells)
    if (c.nu == r && c.lo <= x && x <= c.hi) return true;
  return false;
}

DefSet ord_closure_max(const Space& s, const DefSet& a) {
  // closure of one segment {x in [lo,hi] : nu == r} is {x in [lo,hi] : nu >= r}.
  DefSet acc = a;
  for (const auto& c : a.cells) {
    if (c.nu == kNuTop) continue;
    for (int r = c.nu + 1; r <= kMaxExponent; ++r) {
      Ordinal lo = ceil_exact(c.lo, r);
      if (lo > c.hi) continue;
      auto hi = sup_exact_le(c.hi, r);
      if (!hi || *hi < lo) continue;
      std::array<std::vector<Run>, kNuTop + 1> levels;
      levels[r].push_back({lo, *hi});
      acc = ord_union(s, acc, assemble(s, levels, false, false));
    }
  }
  return acc;
}

DefSet ord_limit_points(const Space& s, const DefSet& a) {
  // A point is a limit of a finite union iff it is a limit of some segment;
  // the limits of one segment at level r are its nu >= r+1 points in (lo, hi].
  DefSet acc = empty_set(s);
  for (const auto& c : a.cells) {
    if (c.nu == kNuTop) continue;
    for (int r = c.nu + 1; r <= kMaxExponent; ++r) {
      Ordinal lo = ceil_exact(c.lo, r);  // > c.lo since nu(c.lo) == c.nu != r
      if (lo > c.hi) continue;
      auto hi = sup_exact_le(c.hi, r);
      if (!hi || *hi < lo) continue;
      std::array<std::vector<Run>, kNuTop + 1> levels;
      levels[r].push_back({lo, *hi});
      acc = ord_union(s, acc, assemble(s, levels, false, false));
    }
  }
  return acc;
}

}  // namespace sslab::detail
