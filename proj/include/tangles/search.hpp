#pragma once

#include <span>
#include <vector>

#include "tangles/core.hpp"
#include "tangles/forbidden.hpp"
#include "tangles/universe.hpp"

namespace tangles {

struct SearchOptions {
  // Stop materializing layers after the first empty one. The engine is a
  // depth-first search, so layers past an empty layer are empty either way;
  // the flag only short-circuits the scan.
  bool stop_on_empty_layer = true;
};

struct SearchResult {
  std::vector<Separation> enumeration;  // s_1..s_n as searched
  // layers[i] holds every F-tangle of {s_1..s_{i+1}} in discovery order.
  std::vector<std::vector<PartialOrientation>> layers;
};

// True iff x fits tau: consistent with every element and no subset of tau of
// size at most m-1 together with x lies in F. Throws AlreadyOriented if x's
// separation is oriented in tau.
bool can_add(const PartialOrientation& tau, OrientedSep x, const ForbiddenOracle& F,
             const Universe& u);

// All F-tangles of every prefix of S, by DFS over the binary orientation
// tree. Throws DuplicateSeparation.
SearchResult layered_search(std::span<const Separation> S, const ForbiddenOracle& F,
                            const Universe& u, const SearchOptions& opts = {});

// The subset-maximal tangles across all prefixes, in discovery order. For an
// empty S (or when no separation can be oriented) this is the empty
// orientation alone, provided it avoids F.
std::vector<PartialOrientation> maximal_tangles(std::span<const Separation> S,
                                                const ForbiddenOracle& F, const Universe& u);

// layered_search restricted to tangles containing the seed, realized by
// re-enumerating S with the seed's separations first (in seed order) and
// fixing their orientations. Throws InvalidSeed.
SearchResult seeded_search(std::span<const Separation> S, const ForbiddenOracle& F,
                           const Universe& u, std::span<const OrientedSep> seed,
                           const SearchOptions& opts = {});

std::vector<PartialOrientation> seeded_maximal_tangles(std::span<const Separation> S,
                                                       const ForbiddenOracle& F,
                                                       const Universe& u,
                                                       std::span<const OrientedSep> seed);

}  // namespace tangles
