#include "sslab/radical.hpp"

#include <cstdlib>

namespace sslab {

namespace {

int g_cap_override = 0;

void same_space(const SpacePtr& a, const SpacePtr& b, const char* what) {
  if (!a || !b || !(*a == *b))
    fail(ErrorKind::backend_mismatch, std::string("operands live on different spaces in ") + what);
}

void check_closed_proper(const Space& s, const DefSet& c, const char* what) {
  if (!is_closed(s, c)) fail(ErrorKind::not_closed, std::string(what) + ": set is not closed");
  if (contains_generic(s, c))
    fail(ErrorKind::invalid_set, std::string(what) + ": set contains the generic point");
}

// One fixpoint step; contracts (T(c) is a closed subset of c) and is
// monotone in c.
DefSet fixpoint_step(const RadicalOp& op, const DefSet& c) {
  const Space& s = *op.space;
  switch (op.form) {
    case RadicalOp::Form::join: {
      DefSet acc = c;
      for (const SpectralOp& member : op.family)
        acc = set_intersect(s, acc, closure_of(s, set_intersect(s, member.delta_down, c)));
      return with_generic(s, acc, false);
    }
    case RadicalOp::Form::punctured: {
      if (s.backend() == Backend::poset) {
        // Finite puncture set: intersect over the members directly. An empty
        // puncture set denotes the unpunctured operation on M.
        DefSet acc = c;
        if (is_empty(op.punct_s)) {
          DefSet d = generizations_of(s, op.punct_m);
          return set_intersect(s, acc, closure_of(s, set_intersect(s, d, c)));
        }
        for (int p = 0; p < s.point_count(); ++p) {
          if (!((op.punct_s.bits >> p) & 1u)) continue;
          DefSet d = generizations_of(
              s, set_difference(s, op.punct_m, point_set(s, Point::poset(p))));
          acc = set_intersect(s, acc, closure_of(s, set_intersect(s, d, c)));
        }
        return acc;
      }
      // One-dimensional backends: the members' defining sets meet the proper
      // set c inside Max, so T(c) = intersection over P in S of
      // closure((M\{P}) n c); puncturing only matters where P is isolated in
      // M n c.
      DefSet b = set_intersect(s, op.punct_m, c);
      DefSet cl = closure_of(s, b);
      DefSet removed = set_intersect(s, op.punct_s, isolated_points_in(s, b));
      return with_generic(s, set_difference(s, cl, removed), false);
    }
    case RadicalOp::Form::meet: {
      DefSet acc = empty_set(s);
      for (const RadicalOp& arg : op.args)
        acc = set_union(s, acc, greatest_quasi_closed(arg, c));
      return with_generic(s, closure_of(s, acc), false);
    }
  }
  return c;
}

}  // namespace

RadicalOp radical_join_of(std::vector<SpectralOp> family) {
  if (family.empty()) fail(ErrorKind::invalid_set, "join of an empty family");
  RadicalOp op;
  op.form = RadicalOp::Form::join;
  op.space = family.front().space;
  for (const auto& m : family) same_space(op.space, m.space, "join");
  op.family = std::move(family);
  return op;
}

RadicalOp radical_punctured(SpacePtr space, DefSet m, DefSet s) {
  if (!space) fail(ErrorKind::invalid_set, "null space");
  if (contains_generic(*space, m))
    fail(ErrorKind::invalid_set, "punctured family: M must sit inside Max");
  if (space->backend() == Backend::poset &&
      !subset_of(*space, m, poset_set(*space, space->maximal_mask())))
    fail(ErrorKind::invalid_set, "punctured family: M must consist of maximal points");
  if (!subset_of(*space, s, m))
    fail(ErrorKind::invalid_set, "punctured family: S must sit inside M");
  RadicalOp op;
  op.form = RadicalOp::Form::punctured;
  op.space = std::move(space);
  op.punct_m = std::move(m);
  op.punct_s = std::move(s);
  return op;
}

RadicalOp radical_meet_of(std::vector<RadicalOp> args) {
  if (args.empty()) fail(ErrorKind::invalid_set, "meet of an empty family");
  RadicalOp op;
  op.form = RadicalOp::Form::meet;
  op.space = args.front().space;
  for (const auto& a : args) same_space(op.space, a.space, "meet");
  op.args = std::move(args);
  return op;
}

int fixpoint_cap() {
  if (g_cap_override > 0) return g_cap_override;
  static int env_cap = [] {
    if (const char* v = std::getenv("SSLAB_MAX_ATOMS")) {
      int n = std::atoi(v);
      if (n > 0) return n;
    }
    return 256;
  }();
  return env_cap;
}

void set_fixpoint_cap(int cap) { g_cap_override = cap; }

bool quasi_closed_test(const RadicalOp& op, const DefSet& c) {
  const Space& s = *op.space;
  check_closed_proper(s, c, "quasi_closed_test");
  if (is_empty(c)) fail(ErrorKind::invalid_set, "quasi_closed_test: set is empty");
  switch (op.form) {
    case RadicalOp::Form::join: {
      for (const SpectralOp& member : op.family)
        if (!is_dense_in(s, member.delta_down, c)) return false;
      return true;
    }
    case RadicalOp::Form::punctured: {
      if (s.backend() == Backend::poset) {
        if (is_empty(op.punct_s))
          return is_dense_in(s, generizations_of(s, op.punct_m), c);
        for (int p = 0; p < s.point_count(); ++p) {
          if (!((op.punct_s.bits >> p) & 1u)) continue;
          DefSet d = generizations_of(
              s, set_difference(s, op.punct_m, point_set(s, Point::poset(p))));
          if (!is_dense_in(s, d, c)) return false;
        }
        return true;
      }
      // (M\{P}) n c stays dense for every P in S iff M n c is dense and no
      // point of S is isolated in c.
      return is_dense_in(s, op.punct_m, c) &&
             is_empty(set_intersect(s, op.punct_s, isolated_points_in(s, c)));
    }
    case RadicalOp::Form::meet: {
      // Exact for finite meets: the meet fixes the ideal of c iff the union
      // of the members' largest quasi-closed subsets fills c.
      DefSet acc = empty_set(s);
      for (const RadicalOp& arg : op.args)
        acc = set_union(s, acc, greatest_quasi_closed(arg, c));
      return closure_of(s, acc) == c;
    }
  }
  return false;
}

DefSet greatest_quasi_closed(const RadicalOp& op, const DefSet& c0, int* iterations) {
  const Space& s = *op.space;
  check_closed_proper(s, c0, "greatest_quasi_closed");
  DefSet cur = c0;
  const int cap = fixpoint_cap();
  int steps = 0;
  while (true) {
    DefSet next = fixpoint_step(op, cur);
    ++steps;
    if (next == cur) break;
    cur = std::move(next);
    if (steps > cap)
      fail(ErrorKind::fixpoint_cap,
           "fixpoint did not stabilize within " + std::to_string(cap) + " steps");
  }
  if (iterations) *iterations = steps;
  return cur;
}

bool radical_member(const RadicalOp& op, const IdealDescriptor& ideal) {
  same_space(op.space, ideal.space, "radical_member");
  return is_empty(greatest_quasi_closed(op, ideal.C));
}

DefSet radical_qspec(const RadicalOp& op) {
  const Space& s = *op.space;
  if (s.backend() == Backend::poset) {
    std::uint32_t bits = 1u << s.generic_point();
    for (int p = 0; p < s.point_count(); ++p) {
      if (p == s.generic_point()) continue;
      DefSet vp = poset_set(s, s.up_mask(p));
      if (!is_empty(greatest_quasi_closed(op, vp))) bits |= 1u << p;
    }
    return poset_set(s, bits);
  }
  // One-dimensional backends: V(P) = {P} for maximal P, so the fixpoint from
  // a singleton survives exactly on the symbolic sets below.
  DefSet out = empty_set(s);
  switch (op.form) {
    case RadicalOp::Form::join: {
      out = max_part(s);
      for (const SpectralOp& member : op.family)
        out = set_intersect(s, out, member.delta_down);
      out = with_generic(s, out, false);
      break;
    }
    case RadicalOp::Form::punctured:
      out = set_difference(s, op.punct_m, op.punct_s);
      break;
    case RadicalOp::Form::meet:
      for (const RadicalOp& arg : op.args)
        out = set_union(s, out, radical_qspec(arg));
      break;
  }
  return with_generic(s, out, true);
}

namespace {

// Collects the defining sets of an operation (Max parts) for the generated
// algebra used by the Cantor spectrality scan.
void collect_generators(const RadicalOp& op, std::vector<DefSet>& out) {
  switch (op.form) {
    case RadicalOp::Form::join:
      for (const auto& m : op.family) out.push_back(m.delta_down);
      break;
    case RadicalOp::Form::punctured:
      out.push_back(op.punct_m);
      out.push_back(op.punct_s);
      break;
    case RadicalOp::Form::meet:
      for (const auto& a : op.args) collect_generators(a, out);
      break;
  }
}

}  // namespace

SpectralityReport radical_is_spectral(const RadicalOp& op) {
  const Space& s = *op.space;
  SpectralityReport report;
  DefSet qspec = radical_qspec(op);

  if (s.backend() == Backend::ordinal) {
    // Scattered maximal spaces: every radical operation is spectral.
    report.spectral = true;
    report.via = "min-scattered fast path";
    return report;
  }

  if (s.backend() == Backend::poset) {
    const std::uint32_t all = s.all_mask() & ~(1u << s.generic_point());
    for (std::uint32_t mask = 1; mask <= all; ++mask) {
      if ((mask & ~all) != 0) continue;
      bool up_closed = true;
      for (int i = 0; i < s.point_count() && up_closed; ++i)
        if ((mask >> i) & 1u) up_closed = (s.up_mask(i) & ~mask) == 0;
      if (!up_closed) continue;
      DefSet c = poset_set(s, mask);
      DefSet greatest = greatest_quasi_closed(op, c);
      DefSet expected = closure_of(s, set_intersect(s, qspec, c));
      if (greatest != expected) {
        report.spectral = false;
        report.witness = c;
        report.via = "exhaustive closed-set scan";
        return report;
      }
    }
    report.spectral = true;
    report.via = "exhaustive closed-set scan";
    return report;
  }

  // Cantor: scan the closed sets of the finite algebra generated by the
  // defining sets and their mentioned points.
  std::vector<DefSet> gens;
  collect_generators(op, gens);
  std::vector<DefSet> extra;
  for (const DefSet& g : gens) {
    for (const auto& p : g.plus) extra.push_back(point_set(s, Point::cantor(p)));
    for (const auto& p : g.minus) extra.push_back(point_set(s, Point::cantor(p)));
  }
  gens.insert(gens.end(), extra.begin(), extra.end());
  std::vector<DefSet> atoms = algebra_atoms(s, gens);
  if (atoms.size() > 12)
    fail(ErrorKind::size_guard, "generated algebra too large for the spectrality scan");
  const std::uint32_t subsets = 1u << atoms.size();
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    DefSet c = empty_set(s);
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if ((mask >> i) & 1u) c = set_union(s, c, atoms[i]);
    if (!is_closed(s, c)) continue;
    DefSet greatest = greatest_quasi_closed(op, c);
    DefSet expected = closure_of(s, set_intersect(s, qspec, c));
    if (greatest != expected) {
      report.spectral = false;
      report.witness = c;
      report.via = "generated-algebra scan (" + std::to_string(atoms.size()) + " atoms)";
      return report;
    }
  }
  report.spectral = true;
  report.via = "generated-algebra scan (" + std::to_string(atoms.size()) + " atoms)";
  return report;
}

std::optional<std::vector<Point>> finite_points(const Space& s, const DefSet& a) {
  std::vector<Point> pts;
  switch (s.backend()) {
    case Backend::poset:
      for (int i = 0; i < s.point_count(); ++i)
        if ((a.bits >> i) & 1u) pts.push_back(Point::poset(i));
      return pts;
    case Backend::ordinal:
      for (const auto& c : a.cells) {
        if (c.nu == kNuTop) {
          pts.push_back(Point::ordinal(Ordinal()));
          continue;
        }
        // A run is finite iff its sup is attained within the same w^(r+1)
        // block as lo; then members step by w^r.
        if (c.hi.nu() != c.nu || c.hi.floor_to(c.nu + 1) != c.lo.floor_to(c.nu + 1))
          return std::nullopt;
        Ordinal x = c.lo;
        while (true) {
          pts.push_back(Point::ordinal(x));
          if (x == c.hi) break;
          x = x + Ordinal::omega_power(c.nu);
        }
      }
      return pts;
    case Backend::cantor:
      if (!a.clopen.empty()) return std::nullopt;
      for (const auto& p : a.plus) pts.push_back(Point::cantor(p));
      return pts;
  }
  return std::nullopt;
}

RadicalOp radical_join(const RadicalOp& a, const RadicalOp& b) {
  same_space(a.space, b.space, "radical_join");
  if (a.form == RadicalOp::Form::meet || b.form == RadicalOp::Form::meet)
    fail(ErrorKind::unsupported_form, "join of Meet nodes is not supported");
  const Space& s = *a.space;

  if (a.form == RadicalOp::Form::punctured && b.form == RadicalOp::Form::punctured &&
      a.punct_m == b.punct_m) {
    return radical_punctured(a.space, a.punct_m, set_union(s, a.punct_s, b.punct_s));
  }

  auto as_family = [&](const RadicalOp& op) -> std::vector<SpectralOp> {
    if (op.form == RadicalOp::Form::join) return op.family;
    auto pts = finite_points(s, op.punct_s);
    if (!pts)
      fail(ErrorKind::unsupported_form,
           "join of punctured families with distinct supports needs finitely many punctures");
    std::vector<SpectralOp> fam;
    for (const Point& p : *pts)
      fam.push_back(canonicalize_delta(
          op.space, set_difference(s, op.punct_m, point_set(s, p))));
    if (fam.empty()) fam.push_back(canonicalize_delta(op.space, op.punct_m));
    return fam;
  };

  std::vector<SpectralOp> fam = as_family(a);
  std::vector<SpectralOp> fb = as_family(b);
  fam.insert(fam.end(), fb.begin(), fb.end());
  return radical_join_of(std::move(fam));
}

RadicalOp radical_meet(const RadicalOp& a, const RadicalOp& b) {
  same_space(a.space, b.space, "radical_meet");
  std::vector<RadicalOp> args;
  if (a.form == RadicalOp::Form::meet)
    args = a.args;
  else
    args.push_back(a);
  if (b.form == RadicalOp::Form::meet)
    args.insert(args.end(), b.args.begin(), b.args.end());
  else
    args.push_back(b);
  return radical_meet_of(std::move(args));
}

}  // namespace sslab
