#include "sslab/spaces.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "backend_detail.hpp"

namespace sslab {

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::poset: return "poset";
    case Backend::ordinal: return "ordinal";
    case Backend::cantor: return "cantor";
  }
  return "?";
}

// -- PeriodicWord -------------------------------------------------------------

static bool is_binary(std::string_view w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

PeriodicWord PeriodicWord::make(std::string pre, std::string per) {
  if (per.empty() || !is_binary(per) || !is_binary(pre))
    fail(ErrorKind::parse, "periodic word needs a nonempty binary period");
  // Primitive period: if per = t^k, keep t.
  for (std::size_t len = 1; len <= per.size() / 2; ++len) {
    if (per.size() % len != 0) continue;
    bool rep = true;
    for (std::size_t i = len; i < per.size() && rep; ++i) rep = per[i] == per[i - len];
    if (rep) {
      per.resize(len);
      break;
    }
  }
  // Minimal preperiod: absorb trailing pre characters into a rotated period.
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    per = std::string(1, per.back()) + per.substr(0, per.size() - 1);
  }
  PeriodicWord w;
  w.pre_ = std::move(pre);
  w.per_ = std::move(per);
  return w;
}

PeriodicWord PeriodicWord::parse(std::string_view text) {
  auto open = text.find('(');
  auto close = text.find(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
      close + 1 != text.size())
    fail(ErrorKind::parse, "point literal must look like 01(10)");
  return make(std::string(text.substr(0, open)),
              std::string(text.substr(open + 1, close - open - 1)));
}

char PeriodicWord::at(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return per_[(i - pre_.size()) % per_.size()];
}

bool PeriodicWord::starts_with(std::string_view word) const {
  for (std::size_t i = 0; i < word.size(); ++i)
    if (at(i) != word[i]) return false;
  return true;
}

std::string PeriodicWord::str() const { return pre_ + "(" + per_ + ")"; }

// -- Space --------------------------------------------------------------------

SpacePtr Space::finite_poset(std::vector<std::string> points,
                             std::vector<std::pair<std::string, std::string>> less) {
  if (points.empty()) fail(ErrorKind::invalid_set, "poset needs at least one point");
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    fail(ErrorKind::parse, "duplicate point name in poset");
  const int n = static_cast<int>(points.size());
  if (n > 30) fail(ErrorKind::size_guard, "poset backend supports at most 30 points");

  auto sp = std::shared_ptr<Space>(new Space());
  sp->backend_ = Backend::poset;
  sp->names_ = std::move(points);
  sp->up_.assign(n, 0);
  for (int i = 0; i < n; ++i) sp->up_[i] |= 1u << i;
  for (const auto& [a, b] : less) {
    int ia = sp->point_index(a), ib = sp->point_index(b);
    if (ia < 0 || ib < 0) fail(ErrorKind::parse, "unknown point in order relation: " + a + " < " + b);
    sp->up_[ia] |= 1u << ib;
  }
  // Reflexive-transitive closure (Warshall on bitmasks).
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((sp->up_[i] >> k) & 1u) sp->up_[i] |= sp->up_[k];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && sp->leq_points(i, j) && sp->leq_points(j, i))
        fail(ErrorKind::parse, "order relation has a cycle through " + sp->names_[i]);

  sp->down_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sp->leq_points(j, i)) sp->down_[i] |= 1u << j;

  sp->generic_ = -1;
  for (int i = 0; i < n; ++i) {
    if (sp->up_[i] == sp->all_mask()) {
      sp->generic_ = i;
      break;
    }
  }
  if (sp->generic_ < 0) fail(ErrorKind::invalid_set, "poset has no unique minimum (generic point)");
  sp->maximal_ = 0;
  for (int i = 0; i < n; ++i)
    if (sp->up_[i] == (1u << i) && i != sp->generic_) sp->maximal_ |= 1u << i;
  return sp;
}

SpacePtr Space::ordinal_one_dim(Ordinal max_top) {
  auto sp = std::shared_ptr<Space>(new Space());
  sp->backend_ = Backend::ordinal;
  sp->max_top_ = std::move(max_top);
  return sp;
}

SpacePtr Space::cantor_one_dim() {
  auto sp = std::shared_ptr<Space>(new Space());
  sp->backend_ = Backend::cantor;
  return sp;
}

int Space::point_index(std::string_view name) const {
  for (int i = 0; i < point_count(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

std::uint32_t Space::all_mask() const {
  return point_count() >= 32 ? ~0u : ((1u << point_count()) - 1);
}

bool Space::operator==(const Space& other) const {
  if (backend_ != other.backend_) return false;
  switch (backend_) {
    case Backend::poset: return names_ == other.names_ && up_ == other.up_;
    case Backend::ordinal: return max_top_ == other.max_top_;
    case Backend::cantor: return true;
  }
  return false;
}

std::string Space::describe() const {
  switch (backend_) {
    case Backend::poset: {
      std::string s = "poset(";
      for (int i = 0; i < point_count(); ++i) {
        if (i) s += ",";
        s += names_[i];
      }
      return s + ")";
    }
    case Backend::ordinal: return "ordinal(max = " + max_top_.str() + ")";
    case Backend::cantor: return "cantor()";
  }
  return "?";
}

// -- Point --------------------------------------------------------------------

Point Point::generic_of(const Space& s) {
  Point p;
  p.backend = s.backend();
  p.generic = true;
  if (s.backend() == Backend::poset) p.index = s.generic_point();
  return p;
}

Point Point::poset(int index) {
  Point p;
  p.backend = Backend::poset;
  p.index = index;
  return p;
}

Point Point::ordinal(Ordinal o) {
  Point p;
  p.backend = Backend::ordinal;
  p.ord = std::move(o);
  return p;
}

Point Point::cantor(PeriodicWord w) {
  Point p;
  p.backend = Backend::cantor;
  p.word = std::move(w);
  return p;
}

std::string Point::str(const Space& s) const {
  if (generic && backend != Backend::poset) return "generic";
  switch (backend) {
    case Backend::poset: return s.point_names()[index];
    case Backend::ordinal: return ord.str();
    case Backend::cantor: return word ? word->str() : "?";
  }
  return "?";
}

// -- Constructors ---------------------------------------------------------------

static void check_backend(const Space& s, const DefSet& a, const char* what) {
  if (a.backend != s.backend())
    fail(ErrorKind::backend_mismatch, std::string("set does not belong to this backend in ") + what);
}

DefSet empty_set(const Space& s) {
  DefSet d;
  d.backend = s.backend();
  return d;
}

DefSet full_spec(const Space& s) {
  switch (s.backend()) {
    case Backend::poset: return poset_set(s, s.all_mask());
    case Backend::ordinal: {
      DefSet d = detail::ord_full_max(s);
      d.generic = true;
      return d;
    }
    case Backend::cantor: {
      DefSet d = detail::cantor_full_max();
      d.generic = true;
      return d;
    }
  }
  return {};
}

DefSet max_part(const Space& s) {
  switch (s.backend()) {
    case Backend::poset: return poset_set(s, s.maximal_mask());
    case Backend::ordinal: return detail::ord_full_max(s);
    case Backend::cantor: return detail::cantor_full_max();
  }
  return {};
}

DefSet poset_set(const Space& s, std::uint32_t mask) {
  if (s.backend() != Backend::poset)
    fail(ErrorKind::backend_mismatch, "points literal on a one-dimensional backend");
  DefSet d;
  d.backend = Backend::poset;
  d.bits = mask & s.all_mask();
  return d;
}

DefSet poset_set(const Space& s, const std::vector<std::string>& names) {
  std::uint32_t mask = 0;
  for (const auto& n : names) {
    int i = s.point_index(n);
    if (i < 0) fail(ErrorKind::parse, "unknown point '" + n + "'");
    mask |= 1u << i;
  }
  return poset_set(s, mask);
}

DefSet cell_set(const Space& s, const Ordinal& lo, const Ordinal& hi, int r, bool exact) {
  if (s.backend() != Backend::ordinal)
    fail(ErrorKind::backend_mismatch, "cells literal needs the ordinal backend");
  return detail::ord_make_cell(s, lo, hi, r, exact);
}

DefSet cylinder(const Space& s, std::string_view word) {
  if (s.backend() != Backend::cantor)
    fail(ErrorKind::backend_mismatch, "cyl literal needs the cantor backend");
  return detail::cantor_make_cylinder(word);
}

DefSet point_set(const Space& s, const Point& p) {
  if (p.backend != s.backend()) fail(ErrorKind::backend_mismatch, "point from another backend");
  if (p.generic && s.backend() != Backend::poset) {
    DefSet d = empty_set(s);
    d.generic = true;
    return d;
  }
  switch (s.backend()) {
    case Backend::poset: return poset_set(s, 1u << p.index);
    case Backend::ordinal: return detail::ord_make_cell(s, p.ord, p.ord, p.ord.nu(), true);
    case Backend::cantor: {
      DefSet d = empty_set(s);
      d.plus.push_back(*p.word);
      return d;
    }
  }
  return {};
}

DefSet with_generic(const Space& s, DefSet a, bool generic) {
  check_backend(s, a, "with_generic");
  if (s.backend() == Backend::poset) {
    if (generic)
      a.bits |= 1u << s.generic_point();
    else
      a.bits &= ~(1u << s.generic_point());
  } else {
    a.generic = generic;
  }
  return a;
}

// -- Boolean algebra ------------------------------------------------------------

DefSet set_union(const Space& s, const DefSet& a, const DefSet& b) {
  check_backend(s, a, "union");
  check_backend(s, b, "union");
  switch (s.backend()) {
    case Backend::poset: {
      DefSet d = a;
      d.bits |= b.bits;
      return d;
    }
    case Backend::ordinal: return detail::ord_union(s, a, b);
    case Backend::cantor: {
      DefSet d = detail::cantor_union(a, b);
      d.generic = a.generic || b.generic;
      return d;
    }
  }
  return {};
}

DefSet set_intersect(const Space& s, const DefSet& a, const DefSet& b) {
  check_backend(s, a, "intersect");
  check_backend(s, b, "intersect");
  switch (s.backend()) {
    case Backend::poset: {
      DefSet d = a;
      d.bits &= b.bits;
      return d;
    }
    case Backend::ordinal: return detail::ord_intersect(s, a, b);
    case Backend::cantor: {
      DefSet d = detail::cantor_intersect(a, b);
      d.generic = a.generic && b.generic;
      return d;
    }
  }
  return {};
}

DefSet set_complement(const Space& s, const DefSet& a) {
  check_backend(s, a, "complement");
  switch (s.backend()) {
    case Backend::poset: {
      DefSet d = a;
      d.bits = ~a.bits & s.all_mask();
      return d;
    }
    case Backend::ordinal: {
      DefSet d = detail::ord_complement_max(s, a);
      d.generic = !a.generic;
      return d;
    }
    case Backend::cantor: {
      DefSet d = detail::cantor_complement_max(a);
      d.generic = !a.generic;
      return d;
    }
  }
  return {};
}

DefSet set_difference(const Space& s, const DefSet& a, const DefSet& b) {
  return set_intersect(s, a, set_complement(s, b));
}

DefSet boolean_combine(const Space& s, SetOp op, const DefSet& a, const DefSet* b) {
  if (op != SetOp::complement && b == nullptr)
    fail(ErrorKind::invalid_set, "binary set operation needs two operands");
  switch (op) {
    case SetOp::unite: return set_union(s, a, *b);
    case SetOp::intersect: return set_intersect(s, a, *b);
    case SetOp::complement: return set_complement(s, a);
    case SetOp::difference: return set_difference(s, a, *b);
  }
  return {};
}

bool is_empty(const DefSet& a) {
  switch (a.backend) {
    case Backend::poset: return a.bits == 0;
    case Backend::ordinal: return a.cells.empty() && !a.generic;
    case Backend::cantor:
      return a.clopen.empty() && a.plus.empty() && !a.generic;
  }
  return true;
}

bool contains_generic(const Space& s, const DefSet& a) {
  if (s.backend() == Backend::poset) return (a.bits >> s.generic_point()) & 1u;
  return a.generic;
}

bool subset_of(const Space& s, const DefSet& a, const DefSet& b) {
  return is_empty(set_difference(s, a, b));
}

bool member_point(const Space& s, const DefSet& a, const Point& p) {
  check_backend(s, a, "member");
  if (p.backend != s.backend()) fail(ErrorKind::backend_mismatch, "point from another backend");
  if (p.generic) return contains_generic(s, a);
  switch (s.backend()) {
    case Backend::poset: return (a.bits >> p.index) & 1u;
    case Backend::ordinal: return detail::ord_member(s, a, p.ord);
    case Backend::cantor: return detail::cantor_member(a, *p.word);
  }
  return false;
}

// -- Topology --------------------------------------------------------------------

static std::uint32_t poset_up_closure(const Space& s, std::uint32_t bits) {
  std::uint32_t out = 0;
  for (int i = 0; i < s.point_count(); ++i)
    if ((bits >> i) & 1u) out |= s.up_mask(i);
  return out;
}

static std::uint32_t poset_down_closure(const Space& s, std::uint32_t bits) {
  std::uint32_t out = 0;
  for (int i = 0; i < s.point_count(); ++i)
    if ((bits >> i) & 1u) out |= s.down_mask(i);
  return out;
}

// Minimal elements of a poset subset.
static std::uint32_t poset_minimals(const Space& s, std::uint32_t bits) {
  std::uint32_t out = 0;
  for (int i = 0; i < s.point_count(); ++i)
    if ((bits >> i) & 1u && (s.down_mask(i) & bits) == (1u << i)) out |= 1u << i;
  return out;
}

DefSet closure_of(const Space& s, const DefSet& a) {
  check_backend(s, a, "closure");
  switch (s.backend()) {
    case Backend::poset: return poset_set(s, poset_up_closure(s, a.bits));
    case Backend::ordinal:
      if (a.generic) return full_spec(s);
      return detail::ord_closure_max(s, a);
    case Backend::cantor:
      if (a.generic) return full_spec(s);
      return detail::cantor_closure_max(a);
  }
  return {};
}

bool is_closed(const Space& s, const DefSet& a) { return closure_of(s, a) == a; }

DefSet generizations_of(const Space& s, const DefSet& a) {
  check_backend(s, a, "generizations");
  switch (s.backend()) {
    case Backend::poset: return poset_set(s, poset_down_closure(s, a.bits));
    default: {
      DefSet d = a;
      if (!is_empty(a)) d.generic = true;
      return d;
    }
  }
}

DefSet minimal_points(const Space& s, const DefSet& c) {
  check_backend(s, c, "minimal_points");
  if (!is_closed(s, c)) fail(ErrorKind::not_closed, "minimal_points needs a Zariski-closed set");
  if (s.backend() == Backend::poset) return poset_set(s, poset_minimals(s, c.bits));
  if (c.generic) {
    DefSet d = empty_set(s);
    d.generic = true;
    return d;
  }
  return c;
}

DefSet isolated_points_in(const Space& s, const DefSet& set) {
  check_backend(s, set, "isolated_points_in");
  switch (s.backend()) {
    case Backend::poset: return poset_set(s, poset_minimals(s, set.bits));
    case Backend::ordinal: {
      DefSet limits = detail::ord_limit_points(s, set);
      DefSet d = set_difference(s, set, limits);
      d.generic = set.generic;  // dimension one: the generic point is isolated
      return d;
    }
    case Backend::cantor: {
      DefSet d = detail::cantor_isolated(set);
      d.generic = set.generic;
      return d;
    }
  }
  return {};
}

DefSet derived_set_in(const Space& s, const DefSet& set) {
  return set_difference(s, set, isolated_points_in(s, set));
}

bool is_dense_in(const Space& s, const DefSet& a, const DefSet& c) {
  check_backend(s, a, "is_dense_in");
  check_backend(s, c, "is_dense_in");
  if (!is_closed(s, c)) fail(ErrorKind::not_closed, "density target must be Zariski-closed");
  if (contains_generic(s, c))
    fail(ErrorKind::invalid_set, "density target must not contain the generic point");
  return subset_of(s, c, closure_of(s, set_intersect(s, a, c)));
}

std::optional<int> cb_rank(const Space& s, const DefSet& set) {
  if (s.backend() == Backend::cantor && !set.clopen.empty()) return std::nullopt;
  DefSet cur = set;
  int rank = 0;
  // Rank is bounded by K+2 on the ordinal backend and by the point count on
  // posets; anything past that indicates a non-scattered set.
  const int limit = s.backend() == Backend::poset ? s.point_count() + 1 : kNuTop + 2;
  while (!is_empty(cur)) {
    cur = derived_set_in(s, cur);
    ++rank;
    if (rank > limit) return std::nullopt;
  }
  return rank;
}

PerfectReport perfect_report(const Space& s, const DefSet& set) {
  PerfectReport r;
  DefSet derived = derived_set_in(s, set);
  r.is_perfect = derived == set;
  r.is_scattered = cb_rank(s, set).has_value();
  if (!is_empty(set) && !r.is_perfect) {
    DefSet iso = isolated_points_in(s, set);
    r.witness_isolated = sample_point(s, iso);
    if (!r.witness_isolated && contains_generic(s, iso))
      r.witness_isolated = Point::generic_of(s);
  }
  return r;
}

// -- Utilities --------------------------------------------------------------------

std::optional<Point> sample_point(const Space& s, const DefSet& a) {
  switch (s.backend()) {
    case Backend::poset: {
      std::uint32_t nonGeneric = a.bits & ~(1u << s.generic_point());
      if (nonGeneric != 0) return Point::poset(std::countr_zero(nonGeneric));
      if (a.bits != 0) return Point::generic_of(s);
      return std::nullopt;
    }
    case Backend::ordinal:
      if (!a.cells.empty()) return Point::ordinal(a.cells.front().lo);
      if (a.generic) return Point::generic_of(s);
      return std::nullopt;
    case Backend::cantor: {
      if (!a.clopen.empty()) {
        const std::string& w = a.clopen.front();
        for (std::size_t k = 0; k <= a.minus.size(); ++k) {
          PeriodicWord cand = PeriodicWord::make(w + std::string(k, '1'), "0");
          if (std::find(a.minus.begin(), a.minus.end(), cand) == a.minus.end())
            return Point::cantor(cand);
        }
      }
      if (!a.plus.empty()) return Point::cantor(a.plus.front());
      if (a.generic) return Point::generic_of(s);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::vector<DefSet> algebra_atoms(const Space& s, const std::vector<DefSet>& generators) {
  std::vector<DefSet> atoms{max_part(s)};
  for (const DefSet& g : generators) {
    DefSet gm = with_generic(s, g, false);
    if (s.backend() == Backend::poset) gm.bits &= ~(1u << s.generic_point());
    std::vector<DefSet> next;
    for (const DefSet& a : atoms) {
      DefSet in = set_intersect(s, a, gm);
      DefSet out = set_difference(s, a, gm);
      if (!is_empty(in)) next.push_back(std::move(in));
      if (!is_empty(out)) next.push_back(std::move(out));
    }
    atoms = std::move(next);
  }
  return atoms;
}

std::string render_set(const Space& s, const DefSet& a) {
  switch (s.backend()) {
    case Backend::poset: {
      if (a.bits == 0) return "points {}";
      std::string out = "points {";
      bool first = true;
      for (int i = 0; i < s.point_count(); ++i) {
        if (!((a.bits >> i) & 1u)) continue;
        if (!first) out += ",";
        first = false;
        out += s.point_names()[i];
      }
      return out + "}";
    }
    case Backend::ordinal: {
      if (a.cells.empty()) return a.generic ? "generic" : "empty";
      std::string out = "cells[";
      bool first = true;
      for (const auto& c : a.cells) {
        if (!first) out += ", ";
        first = false;
        out += "[" + c.lo.str() + "," + c.hi.str() + "] nu=";
        out += c.nu == kNuTop ? "top" : std::to_string(c.nu);
      }
      out += "]";
      if (a.generic) out += " +generic";
      return out;
    }
    case Backend::cantor: {
      if (a.clopen.empty() && a.plus.empty()) return a.generic ? "generic" : "empty";
      std::string out;
      bool first = true;
      if (a.clopen.size() == 1 && a.clopen.front().empty()) {
        out += "max";
        first = false;
      } else {
        for (const auto& w : a.clopen) {
          if (!first) out += " | ";
          first = false;
          out += "cyl \"" + w + "\"";
        }
      }
      for (const auto& p : a.minus) out += " - pt \"" + p.str() + "\"";
      for (const auto& p : a.plus) {
        if (!first) out += " | ";
        first = false;
        out += "pt \"" + p.str() + "\"";
      }
      if (a.generic) out += " +generic";
      return out;
    }
  }
  return "?";
}

}  // namespace sslab
