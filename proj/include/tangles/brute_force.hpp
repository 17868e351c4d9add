#pragma once

#include <span>
#include <string>
#include <vector>

#include "tangles/core.hpp"
#include "tangles/duality.hpp"
#include "tangles/forbidden.hpp"
#include "tangles/universe.hpp"

namespace tangles {

// Independent enumeration oracles. These re-derive everything by exhaustive
// scans (all orientation vectors, all subsets) and are the reference the
// search engines are tested against. Caps fail loudly with CapExceeded.

inline constexpr int kBruteSeparationCap = 16;
inline constexpr int kBruteGroundCap = 5;

// Exact tangle layers of every prefix of S, by filtering all 2^i orientation
// vectors per layer. Layer order: orientation-code order (canonical
// orientation = bit 0).
std::vector<std::vector<PartialOrientation>> brute_layers(std::span<const Separation> S,
                                                          const ForbiddenOracle& F,
                                                          const Universe& u,
                                                          int cap = kBruteSeparationCap);

// Subset-maximal tangles across all layers (including the empty orientation
// when nothing else survives and the empty set avoids F).
std::vector<PartialOrientation> brute_maximal(std::span<const Separation> S,
                                              const ForbiddenOracle& F, const Universe& u,
                                              int cap = kBruteSeparationCap);

// All consistent F-avoiding orientations of every bipartition class of order
// at most p (the whole universe below p, including the degenerate class).
std::vector<PartialOrientation> brute_universe_tangles(const ForbiddenOracle& F,
                                                       const Universe& u, Weight p,
                                                       int ground_cap = kBruteGroundCap);

struct Verdict {
  bool ok = true;
  std::vector<std::string> details;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      details.push_back(what);
    }
  }
};

// Checks the duality contract on one instance: a tree implies zero brute
// F-tangles of S and passes validate_stree; a forced list is contained in
// every brute F-tangle of S.
Verdict verify_duality(const ExplicitForbidden& F, std::span<const Separation> S,
                       const Universe& u);

}  // namespace tangles
