#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tangles/core.hpp"
#include "tangles/forbidden.hpp"
#include "tangles/universe.hpp"

namespace tangles {

// The forcing state: L is the list of oriented separations every F-tangle
// must contain, in forcing order; trace is the parallel list M of
// (forced orientation, star that forced it).
struct ForcedList {
  std::vector<OrientedSep> list;
  std::vector<std::pair<OrientedSep, PartialOrientation>> trace;

  bool contains(OrientedSep x) const;
  std::optional<std::size_t> position(OrientedSep x) const;
};

struct STreeNode {
  PartialOrientation star;
};

// Tree edges carry the separation via one stored orientation: the edge a--b
// is labelled separation_of(toward_b), oriented as toward_b when read from a
// to b and as its inverse when read from b to a.
struct STreeEdge {
  int a = 0;
  int b = 0;
  OrientedSep toward_b;
};

struct STree {
  std::vector<STreeNode> nodes;
  std::vector<STreeEdge> edges;
};

struct ForcingOutcome {
  std::vector<OrientedSep> added;
  std::optional<Separation> clash;
};

// One full pass over F in list order, elements of each star in canonical
// order; each applicable forcing is applied immediately, and the pass stops
// the moment both orientations of some separation lie in L.
ForcingOutcome forcing_pass(ForcedList& state, const ExplicitForbidden& F, const Universe& u);

// Unfolds the trace into an S-tree once L holds both orientations of clash.
// Throws MissingTraceEntry on a corrupt trace.
STree build_stree(const ForcedList& state, Separation clash, const Universe& u);

struct DualityResult {
  std::optional<STree> tree;
  std::optional<ForcedList> forced;
  std::vector<std::string> warnings;

  bool has_tree() const { return tree.has_value(); }
};

// Iterated forcing: returns an S-tree over F when a clash occurs, otherwise
// the fixpoint list L. Validates that F consists of stars over S
// (NotAStarSystem). A returned list that is inconsistent or F-violating
// carries a warning: the duality theorem's hypotheses were not met.
DualityResult run_duality(const ExplicitForbidden& F, std::span<const Separation> S,
                          const Universe& u);

// Checks tree shape, the node law (incoming labels of every node equal its
// star, which must be a member of F), and that edge labels lie in S.
bool validate_stree(const STree& tree, const ExplicitForbidden& F, std::span<const Separation> S,
                    const Universe& u);

}  // namespace tangles
