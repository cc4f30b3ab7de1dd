#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sslab/spectral.hpp"

namespace sslab {

/// A radical operation, represented as a join of spectral operations.
///
///  - Join: an explicit finite family; the operation is the semistar
///    supremum of its members.
///  - Punctured: the family { s_{(M\{P})^down} : P in S } for definable
///    M inside Max and S inside M. This carries the puncture construction
///    that produces radical operations which are not spectral on perfect
///    maximal spaces.
///  - Meet: the pointwise infimum of finitely many radical operations.
///
/// Membership semantics. An ideal is trivialized by a join of spectral
/// operations exactly when its vanishing locus contains no nonempty
/// quasi-closed subset, where a closed set c is quasi-closed when every
/// member's defining set meets c densely. This reduction rests on two facts
/// about radical operations: the closure of an ideal under one is cut out by
/// a radical ideal again, and a radical ideal is fixed by s_Delta exactly
/// when Delta meets its vanishing locus densely. The largest quasi-closed
/// subset of c0 is therefore the greatest fixpoint of the monotone,
/// contracting step
///
///   T(c) = intersection over members of closure(member_delta n c),
///
/// computed by iterating T from c0. Every iterate lives in the finite
/// algebra generated by the defining sets, the query set and the mentioned
/// points, so the iteration stabilizes; a hard iteration cap guards that
/// argument and trips ErrorKind::fixpoint_cap if it ever fails to hold.
struct RadicalOp {
  enum class Form { join, punctured, meet };
  Form form = Form::join;
  SpacePtr space;
  std::vector<SpectralOp> family;  // join
  DefSet punct_m, punct_s;         // punctured: S inside M inside Max
  std::vector<RadicalOp> args;     // meet
};

RadicalOp radical_join_of(std::vector<SpectralOp> family);
RadicalOp radical_punctured(SpacePtr space, DefSet m, DefSet s);
RadicalOp radical_meet_of(std::vector<RadicalOp> args);

/// True iff c is quasi-closed for op: the radical ideal cutting out c is
/// fixed by the operation. c must be closed, nonempty and without the
/// generic point.
bool quasi_closed_test(const RadicalOp& op, const DefSet& c);

/// Greatest quasi-closed closed subset of c0 (possibly empty); c0 must be
/// closed and proper. `iterations`, when given, receives the number of
/// fixpoint steps for reporting.
DefSet greatest_quasi_closed(const RadicalOp& op, const DefSet& c0, int* iterations = nullptr);

/// 1 in I^op iff V(I) contains no nonempty quasi-closed subset. Radical by
/// construction: only ideal.C is consulted.
bool radical_member(const RadicalOp& op, const IdealDescriptor& ideal);

/// {generic} u {P : some nonempty quasi-closed set sits inside V(P)}.
DefSet radical_qspec(const RadicalOp& op);

struct SpectralityReport {
  bool spectral = false;
  std::optional<DefSet> witness;  // closed set violating the spectral identity
  std::string via;                // which decision path produced the answer
};

/// Decides whether op equals the spectral operation on its quasi-spectrum.
/// Finite posets are checked exhaustively over all proper closed sets; the
/// ordinal backend is min-scattered, where every radical operation is
/// spectral; the Cantor backend searches the finite algebra generated by the
/// defining sets, so a negative answer is witness-certified and a positive
/// one is relative to that algebra.
SpectralityReport radical_is_spectral(const RadicalOp& op);

/// Join and meet in the radical lattice. Join concatenates families
/// (punctured forms with equal M merge their puncture sets; a punctured form
/// with finitely many punctures expands into an explicit family); joining a
/// Meet node is not supported and raises ErrorKind::unsupported_form.
RadicalOp radical_join(const RadicalOp& a, const RadicalOp& b);
RadicalOp radical_meet(const RadicalOp& a, const RadicalOp& b);

/// Fixpoint iteration cap. Defaults to 256; the environment variable
/// SSLAB_MAX_ATOMS overrides it, and set_fixpoint_cap(0) restores the
/// default behaviour.
int fixpoint_cap();
void set_fixpoint_cap(int cap);

/// Points of a definable set when it is finite (poset sets, single-point
/// cells, plus-only Cantor sets); nullopt when infinite.
std::optional<std::vector<Point>> finite_points(const Space& s, const DefSet& a);

}  // namespace sslab
