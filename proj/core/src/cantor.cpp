#include <algorithm>
#include <string>
#include <vector>

#include "backend_detail.hpp"
#include "sslab/spaces.hpp"

// Set algebra on the Cantor backend. A definable subset of Max = {0,1}^w is
// clopen +/- finitely many eventually periodic points:
//
//   members(S) = (cyl(clopen) \ minus) u plus
//
// with clopen a prefix-free, sibling-merged set of cylinder words, plus
// disjoint from cyl(clopen) and minus inside it. Every nonempty cylinder is
// perfect, which drives the topology below: the clopen part has no isolated
// points and absorbs its punctures under closure.

namespace sslab::detail {

namespace {

using Words = std::vector<std::string>;

bool words_full(const Words& a) { return a.size() == 1 && a.front().empty(); }

Words prefixed(char bit, const Words& a) {
  Words out;
  out.reserve(a.size());
  for (const auto& w : a) out.push_back(std::string(1, bit) + w);
  return out;
}

void split(const Words& a, Words& zero, Words& one) {
  for (const auto& w : a) {
    if (w.empty()) {  // full space: both children full
      zero = {""};
      one = {""};
      return;
    }
    (w[0] == '0' ? zero : one).push_back(w.substr(1));
  }
}

Words concat(Words a, Words b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Canonicalizes: removes covered words, merges sibling pairs.
Words norm(const Words& a) {
  if (a.empty()) return {};
  for (const auto& w : a)
    if (w.empty()) return {""};
  Words zero, one;
  split(a, zero, one);
  Words n0 = norm(zero), n1 = norm(one);
  if (words_full(n0) && words_full(n1)) return {""};
  Words out = concat(prefixed('0', n0), prefixed('1', n1));
  std::sort(out.begin(), out.end());
  return out;
}

Words w_union(const Words& a, const Words& b) { return norm(concat(a, b)); }

Words w_intersect(const Words& a, const Words& b) {
  if (words_full(a)) return norm(b);
  if (words_full(b)) return norm(a);
  if (a.empty() || b.empty()) return {};
  Words a0, a1, b0, b1;
  split(a, a0, a1);
  split(b, b0, b1);
  Words out = concat(prefixed('0', w_intersect(a0, b0)), prefixed('1', w_intersect(a1, b1)));
  std::sort(out.begin(), out.end());
  return norm(out);
}

Words w_complement(const Words& a) {
  if (a.empty()) return {""};
  if (words_full(a)) return {};
  Words a0, a1;
  split(a, a0, a1);
  Words out = concat(prefixed('0', w_complement(a0)), prefixed('1', w_complement(a1)));
  std::sort(out.begin(), out.end());
  return norm(out);
}

bool in_words(const Words& a, const PeriodicWord& p) {
  return std::any_of(a.begin(), a.end(), [&](const std::string& w) { return p.starts_with(w); });
}

void sort_unique(std::vector<PeriodicWord>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Rebuilds the canonical (clopen, plus, minus) triple from raw parts.
DefSet make_simple(Words clopen, std::vector<PeriodicWord> plus, std::vector<PeriodicWord> minus) {
  DefSet d;
  d.backend = Backend::cantor;
  d.clopen = norm(clopen);
  for (auto& p : plus)
    if (!in_words(d.clopen, p)) d.plus.push_back(std::move(p));
  for (auto& m : minus)
    if (in_words(d.clopen, m)) d.minus.push_back(std::move(m));
  sort_unique(d.plus);
  sort_unique(d.minus);
  return d;
}

}  // namespace

DefSet cantor_full_max() {
  DefSet d;
  d.backend = Backend::cantor;
  d.clopen = {""};
  return d;
}

DefSet cantor_make_cylinder(std::string_view word) {
  for (char c : word)
    if (c != '0' && c != '1') fail(ErrorKind::parse, "cylinder word must be over {0,1}");
  DefSet d;
  d.backend = Backend::cantor;
  d.clopen = {std::string(word)};
  return d;
}

bool cantor_member(const DefSet& a, const PeriodicWord& p) {
  if (in_words(a.clopen, p))
    return std::find(a.minus.begin(), a.minus.end(), p) == a.minus.end();
  return std::find(a.plus.begin(), a.plus.end(), p) != a.plus.end();
}

DefSet cantor_union(const DefSet& a, const DefSet& b) {
  Words clopen = w_union(a.clopen, b.clopen);
  std::vector<PeriodicWord> plus = a.plus, minus;
  plus.insert(plus.end(), b.plus.begin(), b.plus.end());
  for (const auto& m : a.minus)
    if (!cantor_member(b, m)) minus.push_back(m);
  for (const auto& m : b.minus)
    if (!cantor_member(a, m)) minus.push_back(m);
  return make_simple(std::move(clopen), std::move(plus), std::move(minus));
}

DefSet cantor_intersect(const DefSet& a, const DefSet& b) {
  Words clopen = w_intersect(a.clopen, b.clopen);
  std::vector<PeriodicWord> minus = a.minus, plus;
  minus.insert(minus.end(), b.minus.begin(), b.minus.end());
  for (const auto& p : a.plus)
    if (cantor_member(b, p)) plus.push_back(p);
  for (const auto& p : b.plus)
    if (cantor_member(a, p)) plus.push_back(p);
  return make_simple(std::move(clopen), std::move(plus), std::move(minus));
}

DefSet cantor_complement_max(const DefSet& a) {
  // Punctures become isolated points of the complement and vice versa.
  return make_simple(w_complement(a.clopen), a.minus, a.plus);
}

DefSet cantor_closure_max(const DefSet& a) {
  // A cylinder minus finitely many points is dense in the cylinder.
  return make_simple(a.clopen, a.plus, {});
}

DefSet cantor_isolated(const DefSet& a) {
  DefSet d;
  d.backend = Backend::cantor;
  d.plus = a.plus;
  return d;
}

}  // namespace sslab::detail
