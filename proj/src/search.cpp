#include "tangles/search.hpp"

#include <algorithm>
#include <set>

namespace tangles {

namespace {

struct Engine {
  std::span<const Separation> enumeration;
  std::size_t fixed_prefix;  // first fixed_prefix levels take fixed_orient[depth] only
  std::span<const OrientedSep> fixed_orient;
  const ForbiddenOracle& F;
  const Universe& u;

  std::vector<std::vector<PartialOrientation>> layers;
  std::vector<PartialOrientation> maximal;

  void run() {
    layers.assign(enumeration.size(), {});
    const PartialOrientation root;
    if (F.has_forbidden_subset(root, u)) return;  // F contains the empty set
    dfs(root, 0);
  }

  void dfs(const PartialOrientation& tau, std::size_t depth) {
    if (depth == enumeration.size()) {
      maximal.push_back(tau);
      return;
    }
    bool extended = false;
    if (depth < fixed_prefix) {
      const OrientedSep x = fixed_orient[depth];
      if (!can_add(tau, x, F, u)) {
        fail(ErrorKind::Internal, "fixed seed prefix stopped being addable");
      }
      record(tau.with(x, u), depth);
      extended = true;
    } else {
      const OrientedSep fwd = u.canonical_orientation(enumeration[depth]);
      for (const OrientedSep x : {fwd, u.inverse(fwd)}) {
        if (can_add(tau, x, F, u)) {
          record(tau.with(x, u), depth);
          extended = true;
        }
      }
    }
    if (!extended) maximal.push_back(tau);
  }

  void record(PartialOrientation tau, std::size_t depth) {
    layers[depth].push_back(tau);
    dfs(layers[depth].back(), depth + 1);
  }
};

void check_duplicate_free(std::span<const Separation> S, const Universe& u) {
  std::set<Mask> seen;
  for (const Separation s : S) {
    if (!seen.insert(s.canon).second) {
      fail(ErrorKind::DuplicateSeparation, "duplicate separation " + u.show(s));
    }
  }
}

std::vector<std::vector<PartialOrientation>> trim_after_empty(
    std::vector<std::vector<PartialOrientation>> layers) {
  // Layers after an empty layer are provably empty; report them as such
  // without scanning.
  bool dead = false;
  for (auto& layer : layers) {
    if (dead) layer.clear();
    if (layer.empty()) dead = true;
  }
  return layers;
}

}  // namespace

bool can_add(const PartialOrientation& tau, OrientedSep x, const ForbiddenOracle& F,
             const Universe& u) {
  const Separation s = u.separation_of(x);
  if (tau.orients(s, u)) {
    fail(ErrorKind::AlreadyOriented, u.show(s) + " is already oriented in the tangle");
  }
  for (const OrientedSep y : tau) {
    if (!is_consistent_pair(y, x, u)) return false;
  }
  return !F.blocks_addition(tau, x, u);
}

SearchResult layered_search(std::span<const Separation> S, const ForbiddenOracle& F,
                            const Universe& u, const SearchOptions& opts) {
  check_duplicate_free(S, u);
  Engine engine{S, 0, {}, F, u, {}, {}};
  engine.run();
  SearchResult result;
  result.enumeration.assign(S.begin(), S.end());
  result.layers = opts.stop_on_empty_layer ? trim_after_empty(std::move(engine.layers))
                                           : std::move(engine.layers);
  return result;
}

std::vector<PartialOrientation> maximal_tangles(std::span<const Separation> S,
                                                const ForbiddenOracle& F, const Universe& u) {
  check_duplicate_free(S, u);
  Engine engine{S, 0, {}, F, u, {}, {}};
  engine.run();
  return engine.maximal;
}

namespace {

struct SeedPlan {
  std::vector<Separation> enumeration;
  std::vector<OrientedSep> fixed;
};

SeedPlan plan_seed(std::span<const Separation> S, const ForbiddenOracle& F, const Universe& u,
                   std::span<const OrientedSep> seed) {
  check_duplicate_free(S, u);
  std::set<Mask> in_s;
  for (const Separation s : S) in_s.insert(s.canon);

  SeedPlan plan;
  std::set<Mask> seeded;
  std::vector<OrientedSep> seed_elems;
  for (const OrientedSep x : seed) {
    const Separation s = u.separation_of(x);
    if (!in_s.count(s.canon)) {
      fail(ErrorKind::InvalidSeed, "seed orients " + u.show(s) + " outside S");
    }
    if (!seeded.insert(s.canon).second) {
      fail(ErrorKind::InvalidSeed, "seed orients " + u.show(s) + " twice");
    }
    plan.enumeration.push_back(s);
    plan.fixed.push_back(x);
    seed_elems.push_back(x);
  }
  PartialOrientation seed_set;
  try {
    seed_set = PartialOrientation::from(seed_elems, u);
  } catch (const Error&) {
    fail(ErrorKind::InvalidSeed, "seed is not antisymmetric");
  }
  if (!is_consistent(seed_set, u)) fail(ErrorKind::InvalidSeed, "seed is inconsistent");
  if (F.has_forbidden_subset(seed_set, u)) fail(ErrorKind::InvalidSeed, "seed violates F");

  for (const Separation s : S) {
    if (!seeded.count(s.canon)) plan.enumeration.push_back(s);
  }
  return plan;
}

}  // namespace

SearchResult seeded_search(std::span<const Separation> S, const ForbiddenOracle& F,
                           const Universe& u, std::span<const OrientedSep> seed,
                           const SearchOptions& opts) {
  const SeedPlan plan = plan_seed(S, F, u, seed);
  Engine engine{plan.enumeration, plan.fixed.size(), plan.fixed, F, u, {}, {}};
  engine.run();
  SearchResult result;
  result.enumeration = plan.enumeration;
  result.layers = opts.stop_on_empty_layer ? trim_after_empty(std::move(engine.layers))
                                           : std::move(engine.layers);
  return result;
}

std::vector<PartialOrientation> seeded_maximal_tangles(std::span<const Separation> S,
                                                       const ForbiddenOracle& F, const Universe& u,
                                                       std::span<const OrientedSep> seed) {
  const SeedPlan plan = plan_seed(S, F, u, seed);
  Engine engine{plan.enumeration, plan.fixed.size(), plan.fixed, F, u, {}, {}};
  engine.run();
  return engine.maximal;
}

}  // namespace tangles
