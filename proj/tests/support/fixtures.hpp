#pragma once

// Desk-scale fixtures and deterministic generators shared by the unit and
// acceptance suites.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "tangles/core.hpp"
#include "tangles/forbidden.hpp"
#include "tangles/universe.hpp"

namespace tangles::testing {

inline std::vector<std::string> labels_upto(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

// Triangle on {0,1,2}, unit weights, S = singleton-left separations.
inline Universe fix_k3() {
  return Universe(GroundSet(labels_upto(3)),
                  WeightedGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}),
                  {0b001, 0b010, 0b100});
}

// Path 0-1-2, same separation system as the triangle.
inline Universe fix_p3() {
  return Universe(GroundSet(labels_upto(3)), WeightedGraph(3, {{0, 1, 1}, {1, 2, 1}}),
                  {0b001, 0b010, 0b100});
}

// Cycle 0-1-2-3, S = two crossing "diameter" bipartitions.
inline Universe fix_c4() {
  return Universe(GroundSet(labels_upto(4)),
                  WeightedGraph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}),
                  {0b0011, 0b0110});
}

// Path 0-1-2-3 with the nested chain {0} < {0,1} < {0,1,2}.
inline Universe fix_chain() {
  return Universe(GroundSet(labels_upto(4)),
                  WeightedGraph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}),
                  {0b0001, 0b0011, 0b0111});
}

// Single edge on {0,1}, S = the one separation {0}|{1}.
inline Universe fix_dual_edge() {
  return Universe(GroundSet(labels_upto(2)), WeightedGraph(2, {{0, 1, 1}}), {0b01});
}

// splitmix64; deterministic across platforms.
struct Rng {
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint32_t below(std::uint32_t n) { return n == 0 ? 0 : static_cast<std::uint32_t>(next() % n); }

  bool coin() { return (next() & 1) != 0; }
};

// A random universe: ground size in [ground_min, ground_max], every edge
// kept with probability 1/2 (weight 1..3), and up to max_seps distinct
// proper bipartition classes as S.
inline Universe random_universe(Rng& rng, int ground_min, int ground_max, int max_seps) {
  const int n = ground_min + static_cast<int>(rng.below(static_cast<std::uint32_t>(
                                 ground_max - ground_min + 1)));
  std::vector<WeightedEdge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng.coin()) edges.push_back({a, b, 1 + rng.below(3)});
    }
  }
  const Mask full = static_cast<Mask>((Mask{1} << n) - 1);
  std::vector<Mask> lefts;
  const int want = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_seps)));
  for (int attempts = 0; attempts < 64 && static_cast<int>(lefts.size()) < want; ++attempts) {
    const Mask left = static_cast<Mask>(rng.next()) & full;
    if (left == 0 || left == full) continue;
    bool dup = false;
    for (const Mask seen : lefts) {
      if (seen == left || seen == (full & ~left)) dup = true;
    }
    if (!dup) lefts.push_back(left);
  }
  if (lefts.empty()) lefts.push_back(1);
  return Universe(GroundSet(labels_upto(n)), WeightedGraph(n, std::move(edges)),
                  std::move(lefts));
}

// A random oriented separation of the universe's power-set lattice.
inline OrientedSep random_oriented(Rng& rng, const Universe& u) {
  return {static_cast<Mask>(rng.next()) & u.full_mask()};
}

// A crossing-rich universe on four elements: dense-ish random graph, 2..4
// separation classes sampled with a bias toward two-element sides (the only
// ones that can cross on this ground set).
inline Universe random_crossing_universe(Rng& rng) {
  const int n = 4;
  std::vector<WeightedEdge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng.below(4) != 0) edges.push_back({a, b, 1 + rng.below(2)});
    }
  }
  std::vector<Mask> pool;
  for (Mask m = 1; m < 0b1111u; ++m) {
    if ((m & 1u) == 0) continue;  // canonical classes contain element 0
    const int weight = std::popcount(m) == 2 ? 3 : 1;
    for (int i = 0; i < weight; ++i) pool.push_back(m);
  }
  const int want = 2 + static_cast<int>(rng.below(3));
  std::vector<Mask> lefts;
  for (int attempts = 0; attempts < 64 && static_cast<int>(lefts.size()) < want; ++attempts) {
    const Mask pick = pool[rng.below(static_cast<std::uint32_t>(pool.size()))];
    if (std::find(lefts.begin(), lefts.end(), pick) == lefts.end()) lefts.push_back(pick);
  }
  return Universe(GroundSet(labels_upto(n)), WeightedGraph(n, std::move(edges)),
                  std::move(lefts));
}

// A random star over the orientations of S with 1..max_size elements, by
// bounded rejection; returns an empty vector when none was found.
inline std::vector<OrientedSep> random_star(Rng& rng, const Universe& u, int max_size) {
  for (int attempt = 0; attempt < 40; ++attempt) {
    const int size = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_size)));
    std::vector<OrientedSep> elems;
    bool ok = true;
    for (int i = 0; i < size && ok; ++i) {
      const Separation s = u.system()[rng.below(static_cast<std::uint32_t>(u.system().size()))];
      const OrientedSep fwd = u.canonical_orientation(s);
      const OrientedSep x = rng.coin() ? fwd : u.inverse(fwd);
      for (const OrientedSep y : elems) {
        if (u.separation_of(y) == s || !u.leq(x, u.inverse(y)) || !u.leq(y, u.inverse(x))) {
          ok = false;
        }
      }
      if (ok) elems.push_back(x);
    }
    if (ok && !elems.empty()) return elems;
  }
  return {};
}

// An explicit star family over S with up to max_members members.
inline ExplicitForbidden random_star_family(Rng& rng, const Universe& u, int max_members) {
  std::vector<PartialOrientation> members;
  const int want = static_cast<int>(rng.below(static_cast<std::uint32_t>(max_members + 1)));
  for (int i = 0; i < want; ++i) {
    const auto star = random_star(rng, u, 3);
    if (star.empty()) continue;
    members.push_back(PartialOrientation::from(star, u));
  }
  return ExplicitForbidden(std::move(members));
}

}  // namespace tangles::testing
