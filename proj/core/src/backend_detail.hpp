#pragma once

// Internal per-backend entry points used by the dispatchers in spaces.cpp.

#include <optional>

#include "sslab/spaces.hpp"

namespace sslab::detail {

// ord_cells.cpp -- canonical divisibility-cell algebra on [0, max_top].
DefSet ord_make_cell(const Space& s, const Ordinal& lo, const Ordinal& hi, int r, bool exact);
DefSet ord_union(const Space& s, const DefSet& a, const DefSet& b);
DefSet ord_intersect(const Space& s, const DefSet& a, const DefSet& b);
DefSet ord_complement_max(const Space& s, const DefSet& a);  // within Max only
bool ord_member(const Space& s, const DefSet& a, const Ordinal& x);
DefSet ord_closure_max(const Space& s, const DefSet& a);     // closure inside Max
DefSet ord_limit_points(const Space& s, const DefSet& a);    // limits of a inside Max
DefSet ord_full_max(const Space& s);

// cantor.cpp -- clopen + finite corrections algebra on {0,1}^w.
DefSet cantor_make_cylinder(std::string_view word);
DefSet cantor_union(const DefSet& a, const DefSet& b);
DefSet cantor_intersect(const DefSet& a, const DefSet& b);
DefSet cantor_complement_max(const DefSet& a);
bool cantor_member(const DefSet& a, const PeriodicWord& p);
DefSet cantor_closure_max(const DefSet& a);
DefSet cantor_isolated(const DefSet& a);
DefSet cantor_full_max();

}  // namespace sslab::detail
