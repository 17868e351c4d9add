#include "tangles/brute_force.hpp"

#include <algorithm>

namespace tangles {

namespace {

bool is_valid_tangle(const PartialOrientation& p, const ForbiddenOracle& F, const Universe& u) {
  return is_consistent(p, u) && !F.has_forbidden_subset(p, u);
}

}  // namespace

std::vector<std::vector<PartialOrientation>> brute_layers(std::span<const Separation> S,
                                                          const ForbiddenOracle& F,
                                                          const Universe& u, int cap) {
  if (static_cast<int>(S.size()) > cap) {
    fail(ErrorKind::CapExceeded, "brute-force layer enumeration capped at " + std::to_string(cap) +
                                     " separations");
  }
  std::vector<std::vector<PartialOrientation>> layers(S.size());
  for (std::size_t i = 1; i <= S.size(); ++i) {
    for (std::uint32_t code = 0; code < (std::uint32_t{1} << i); ++code) {
      std::vector<OrientedSep> elems;
      elems.reserve(i);
      for (std::size_t j = 0; j < i; ++j) {
        const OrientedSep fwd = u.canonical_orientation(S[j]);
        elems.push_back(((code >> j) & 1u) ? u.inverse(fwd) : fwd);
      }
      std::sort(elems.begin(), elems.end(), LexLess{});
      const PartialOrientation candidate = PartialOrientation::unchecked(std::move(elems));
      if (is_valid_tangle(candidate, F, u)) layers[i - 1].push_back(candidate);
    }
  }
  return layers;
}

std::vector<PartialOrientation> brute_maximal(std::span<const Separation> S,
                                              const ForbiddenOracle& F, const Universe& u,
                                              int cap) {
  const auto layers = brute_layers(S, F, u, cap);
  std::vector<PartialOrientation> result;

  const PartialOrientation empty;
  if (!F.has_forbidden_subset(empty, u)) {
    if (layers.empty() || layers[0].empty()) {
      result.push_back(empty);
      return result;
    }
  } else {
    return result;  // even the empty orientation is not F-avoiding
  }

  for (std::size_t i = 0; i < layers.size(); ++i) {
    for (const PartialOrientation& tau : layers[i]) {
      bool extendable = false;
      if (i + 1 < layers.size()) {
        for (const PartialOrientation& longer : layers[i + 1]) {
          if (tau.subset_of(longer)) {
            extendable = true;
            break;
          }
        }
      }
      if (!extendable) result.push_back(tau);
    }
  }
  return result;
}

std::vector<PartialOrientation> brute_universe_tangles(const ForbiddenOracle& F, const Universe& u,
                                                       Weight p, int ground_cap) {
  if (u.ground_size() > ground_cap) {
    fail(ErrorKind::CapExceeded, "universe enumeration capped at ground size " +
                                     std::to_string(ground_cap));
  }
  std::vector<Separation> classes;
  for (Mask m = 0; m <= u.full_mask(); ++m) {
    const Separation s = u.separation_of(OrientedSep{m});
    if (s.canon != m) continue;  // visit each class at its canonical mask
    if (u.order(s) <= p) classes.push_back(s);
  }
  std::sort(classes.begin(), classes.end(), LexLess{});

  std::vector<PartialOrientation> result;
  const std::size_t k = classes.size();
  for (std::uint32_t code = 0; code < (std::uint32_t{1} << k); ++code) {
    std::vector<OrientedSep> elems;
    elems.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
      const OrientedSep fwd = u.canonical_orientation(classes[j]);
      elems.push_back(((code >> j) & 1u) ? u.inverse(fwd) : fwd);
    }
    std::sort(elems.begin(), elems.end(), LexLess{});
    const PartialOrientation candidate = PartialOrientation::unchecked(std::move(elems));
    if (is_valid_tangle(candidate, F, u)) result.push_back(candidate);
  }
  return result;
}

Verdict verify_duality(const ExplicitForbidden& F, std::span<const Separation> S,
                       const Universe& u) {
  Verdict verdict;
  const DualityResult duality = run_duality(F, S, u);
  const auto layers = brute_layers(S, F, u);
  std::vector<PartialOrientation> full_tangles;
  if (S.empty()) {
    if (!F.has_forbidden_subset(PartialOrientation{}, u)) full_tangles.push_back({});
  } else {
    full_tangles = layers.back();
  }

  if (duality.has_tree()) {
    verdict.require(validate_stree(*duality.tree, F, S, u), "emitted tree fails validation");
    verdict.require(full_tangles.empty(),
                    "tree emitted although " + std::to_string(full_tangles.size()) +
                        " F-tangles of S exist");
  } else {
    std::vector<OrientedSep> elems = duality.forced->list;
    const PartialOrientation forced_set = PartialOrientation::from(std::move(elems), u);
    for (const PartialOrientation& tangle : full_tangles) {
      verdict.require(forced_set.subset_of(tangle), "forced list not contained in an F-tangle");
    }
  }
  return verdict;
}

}  // namespace tangles
