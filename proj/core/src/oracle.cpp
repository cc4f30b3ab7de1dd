#include "sslab/oracle.hpp"

#include <algorithm>
#include <array>

namespace sslab {

namespace {

void require_small_poset(const Space& s, const char* what) {
  if (s.backend() != Backend::poset)
    fail(ErrorKind::backend_mismatch, std::string(what) + " runs on finite posets only");
  if (s.point_count() > 12)
    fail(ErrorKind::size_guard, std::string(what) + " is guarded at 12 points");
}

bool up_closed(const Space& s, std::uint32_t mask) {
  for (int i = 0; i < s.point_count(); ++i)
    if ((mask >> i) & 1u && (s.up_mask(i) & ~mask) != 0) return false;
  return true;
}

bool down_closed(const Space& s, std::uint32_t mask) {
  for (int i = 0; i < s.point_count(); ++i)
    if ((mask >> i) & 1u && (s.down_mask(i) & ~mask) != 0) return false;
  return true;
}

std::uint32_t minimals_of(const Space& s, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (int i = 0; i < s.point_count(); ++i)
    if ((mask >> i) & 1u && (s.down_mask(i) & mask) == (1u << i)) out |= 1u << i;
  return out;
}

// Iterates over all submasks of `mask`, ascending.
template <typename F>
void for_submasks(std::uint32_t mask, F&& f) {
  std::uint32_t sub = 0;
  while (true) {
    f(sub);
    if (sub == mask) break;
    sub = (sub - mask) & mask;  // next submask in ascending order
  }
}

}  // namespace

std::shared_ptr<const DescriptorUniverse> DescriptorUniverse::build(PruferPtr descriptor) {
  const Space& s = *descriptor->space;
  require_small_poset(s, "descriptor universe");
  auto u = std::make_shared<DescriptorUniverse>();
  u->descriptor = descriptor;
  const std::uint32_t proper = s.all_mask() & ~(1u << s.generic_point());
  for_submasks(proper, [&](std::uint32_t c) {
    if (!up_closed(s, c)) return;
    std::uint32_t sharp_range = minimals_of(s, c) & descriptor->branched.bits;
    for_submasks(sharp_range, [&](std::uint32_t sharp) { u->rows.push_back({c, sharp}); });
  });
  std::sort(u->rows.begin(), u->rows.end(), [](const Row& a, const Row& b) {
    return a.C != b.C ? a.C < b.C : a.sharp < b.sharp;
  });
  return u;
}

IdealDescriptor DescriptorUniverse::ideal(std::size_t row) const {
  const Space& s = *descriptor->space;
  return make_ideal(descriptor->space, poset_set(s, rows[row].C), poset_set(s, rows[row].sharp));
}

bool FTable::subset_of(const FTable& other) const {
  if (zero && !other.zero) return false;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] && !other.bits[i]) return false;
  return true;
}

FTable f_table(const UniversePtr& universe, const StableOpPair& op) {
  FTable t;
  t.universe = universe;
  t.zero = stable_member_zero(op);
  t.bits.reserve(universe->rows.size());
  const std::uint32_t delta = op.delta.bits;
  const std::uint32_t pi = op.pi.bits;
  for (const auto& row : universe->rows)
    t.bits.push_back((row.C & delta) == 0 && (row.C & pi & row.sharp) == 0);
  return t;
}

bool localizing_axioms_check(const FTable& table) {
  const auto& rows = table.universe->rows;
  // The zero ideal sits below every ideal.
  if (table.zero && !std::all_of(table.bits.begin(), table.bits.end(), [](bool b) { return b; }))
    return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!table.bits[i]) continue;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      // Row j is a larger ideal than row i: smaller support, smaller sharp locus.
      bool larger = (rows[j].C & ~rows[i].C) == 0 && (rows[j].sharp & ~rows[i].sharp) == 0;
      if (larger && !table.bits[j]) return false;
    }
  }
  return true;
}

std::vector<StableOpPair> enumerate_pairs(const PruferPtr& descriptor) {
  const Space& s = *descriptor->space;
  require_small_poset(s, "enumerate_pairs");
  std::vector<StableOpPair> out;
  const std::uint32_t all = s.all_mask();
  const std::uint32_t pi_universe = descriptor->idempotent.bits & descriptor->branched.bits;
  for (std::uint32_t delta = 0; delta <= all; ++delta) {
    if ((delta & ~all) != 0 || !down_closed(s, delta)) continue;
    // Admissible pseudo-spectrum points: outside delta, flagged, and with all
    // strict generizations inside delta.
    std::uint32_t cands = 0;
    for (int p = 0; p < s.point_count(); ++p) {
      if (p == s.generic_point() || ((delta >> p) & 1u)) continue;
      if (!((pi_universe >> p) & 1u)) continue;
      std::uint32_t lower = s.down_mask(p) & ~(1u << p);
      if ((lower & ~delta) == 0) cands |= 1u << p;
    }
    for_submasks(cands, [&](std::uint32_t pi) {
      out.push_back(StableOpPair{descriptor, poset_set(s, delta), poset_set(s, pi)});
    });
  }
  return out;
}

LatticeBounds lattice_oracle(const std::vector<StableOpPair>& pairs,
                             const std::vector<FTable>& tables, const StableOpPair& a,
                             const StableOpPair& b) {
  if (pairs.size() != tables.size() || pairs.empty())
    fail(ErrorKind::invalid_set, "lattice_oracle needs the full enumeration with tables");
  const FTable ta = f_table(tables.front().universe, a);
  const FTable tb = f_table(tables.front().universe, b);

  auto scan = [&](bool lower) -> StableOpPair {
    auto is_bound = [&](std::size_t i) {
      return lower ? tables[i].subset_of(ta) && tables[i].subset_of(tb)
                   : ta.subset_of(tables[i]) && tb.subset_of(tables[i]);
    };
    // Keep the extremal bound seen so far, then verify it dominates all.
    int best = -1;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!is_bound(i)) continue;
      if (best < 0 ||
          (lower ? tables[best].subset_of(tables[i]) : tables[i].subset_of(tables[best])))
        best = static_cast<int>(i);
    }
    if (best < 0) fail(ErrorKind::invalid_set, "no lattice bound found (not a lattice)");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!is_bound(i)) continue;
      bool dominated =
          lower ? tables[i].subset_of(tables[best]) : tables[best].subset_of(tables[i]);
      if (!dominated) fail(ErrorKind::invalid_set, "lattice bound is not unique (not a lattice)");
    }
    return pairs[best];
  };

  return LatticeBounds{scan(/*lower=*/true), scan(/*lower=*/false)};
}

PosetOracle PosetOracle::build(const PruferPtr& descriptor) {
  PosetOracle o;
  o.universe = DescriptorUniverse::build(descriptor);
  o.pairs = enumerate_pairs(descriptor);
  o.tables.reserve(o.pairs.size());
  for (const auto& p : o.pairs) o.tables.push_back(f_table(o.universe, p));
  return o;
}

LatticeBounds PosetOracle::bounds(const StableOpPair& a, const StableOpPair& b) const {
  return lattice_oracle(pairs, tables, a, b);
}

std::vector<SpacePtr> poset_catalog(int max_points) {
  static const std::array<const char*, 4> kNames = {"p", "q", "r", "s"};
  std::vector<SpacePtr> out;
  for (int n = 0; n + 1 <= max_points && n <= 4; ++n) {
    // Orientations of each unordered pair: none, i<j, or j<i; keep the
    // transitive ones. Relations are encoded in an n*n bit matrix.
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> idx;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) idx.push_back({i, j});
    std::uint64_t total = 1;
    for (int k = 0; k < pairs; ++k) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::array<std::array<bool, 4>, 4> lt{};
      std::uint64_t c = code;
      for (int k = 0; k < pairs; ++k) {
        int mode = static_cast<int>(c % 3);
        c /= 3;
        if (mode == 1) lt[idx[k].first][idx[k].second] = true;
        if (mode == 2) lt[idx[k].second][idx[k].first] = true;
      }
      bool transitive = true;
      for (int i = 0; i < n && transitive; ++i)
        for (int j = 0; j < n && transitive; ++j)
          for (int k = 0; k < n && transitive; ++k)
            if (lt[i][j] && lt[j][k] && !lt[i][k]) transitive = false;
      if (!transitive) continue;
      std::vector<std::string> points = {"o"};
      std::vector<std::pair<std::string, std::string>> less;
      for (int i = 0; i < n; ++i) {
        points.push_back(kNames[i]);
        less.push_back({"o", kNames[i]});
      }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (lt[i][j]) less.push_back({kNames[i], kNames[j]});
      out.push_back(Space::finite_poset(points, less));
    }
  }
  return out;
}

std::vector<Homeomorphism> flag_preserving_automorphisms(const PruferPtr& descriptor) {
  const Space& s = *descriptor->space;
  require_small_poset(s, "automorphism enumeration");
  const int n = s.point_count();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<Homeomorphism> out;
  do {
    bool ok = perm[s.generic_point()] == s.generic_point();
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (s.leq_points(i, j) != s.leq_points(perm[i], perm[j])) ok = false;
    if (ok) {
      auto maps_flag = [&](const DefSet& flag) {
        std::uint32_t image = 0;
        for (int i = 0; i < n; ++i)
          if ((flag.bits >> i) & 1u) image |= 1u << perm[i];
        return image == flag.bits;
      };
      ok = maps_flag(descriptor->idempotent) && maps_flag(descriptor->branched);
    }
    if (ok) {
      Homeomorphism phi;
      phi.kind = Homeomorphism::Kind::poset;
      phi.src = descriptor->space;
      phi.dst = descriptor->space;
      phi.image = perm;
      out.push_back(std::move(phi));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace sslab
