#include "tangles/duality.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace tangles {

bool ForcedList::contains(OrientedSep x) const {
  return std::find(list.begin(), list.end(), x) != list.end();
}

std::optional<std::size_t> ForcedList::position(OrientedSep x) const {
  const auto it = std::find(list.begin(), list.end(), x);
  if (it == list.end()) return std::nullopt;
  return static_cast<std::size_t>(it - list.begin());
}

ForcingOutcome forcing_pass(ForcedList& state, const ExplicitForbidden& F, const Universe& u) {
  ForcingOutcome outcome;
  for (const PartialOrientation& sigma : F.members()) {
    // Find an element whose companions are all forced already; forcing adds
    // the element's inverse.
    for (const OrientedSep e : sigma) {
      const OrientedSep forced = u.inverse(e);
      if (state.contains(forced)) continue;
      bool rest_forced = true;
      for (const OrientedSep other : sigma) {
        if (other != e && !state.contains(other)) {
          rest_forced = false;
          break;
        }
      }
      if (!rest_forced) continue;

      state.list.push_back(forced);
      state.trace.emplace_back(forced, sigma);
      outcome.added.push_back(forced);
      if (state.contains(e)) {
        outcome.clash = u.separation_of(e);
        return outcome;
      }
      break;  // one forcing per star per pass
    }
  }
  return outcome;
}

STree build_stree(const ForcedList& state, Separation clash, const Universe& u) {
  std::map<OrientedSep, std::size_t> entry;
  for (std::size_t i = 0; i < state.trace.size(); ++i) {
    entry.emplace(state.trace[i].first, i);
  }

  STree tree;
  // Attaches the star that forced `key` as a node; children are the stars of
  // the other elements of that star, which were forced strictly earlier.
  std::function<int(OrientedSep)> attach = [&](OrientedSep key) -> int {
    const auto it = entry.find(key);
    if (it == entry.end()) {
      fail(ErrorKind::MissingTraceEntry, "no trace entry for " + u.show(key));
    }
    const std::size_t pos = it->second;
    const PartialOrientation& star = state.trace[pos].second;
    const int id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({star});
    const OrientedSep skip = u.inverse(key);
    for (const OrientedSep e : star) {
      if (e == skip) continue;
      const auto child_entry = entry.find(e);
      if (child_entry == entry.end()) {
        fail(ErrorKind::MissingTraceEntry, "no trace entry for " + u.show(e));
      }
      if (child_entry->second >= pos) {
        fail(ErrorKind::MissingTraceEntry, "trace order violated at " + u.show(e));
      }
      const int child = attach(e);
      tree.edges.push_back({child, id, e});
    }
    return id;
  };

  const OrientedSep fwd = u.canonical_orientation(clash);
  const OrientedSep bwd = u.inverse(fwd);
  if (!state.contains(fwd) || !state.contains(bwd)) {
    fail(ErrorKind::MissingTraceEntry, "clash separation not doubly forced");
  }
  const int node_fwd = attach(fwd);
  const int node_bwd = attach(bwd);
  tree.edges.push_back({node_fwd, node_bwd, fwd});
  return tree;
}

DualityResult run_duality(const ExplicitForbidden& F, std::span<const Separation> S,
                          const Universe& u) {
  std::set<Mask> system;
  for (const Separation s : S) system.insert(s.canon);
  for (const PartialOrientation& f : F.members()) {
    for (const OrientedSep e : f) {
      if (!system.count(u.separation_of(e).canon)) {
        fail(ErrorKind::NotAStarSystem,
             "member element " + u.show(e) + " lies outside the separation system");
      }
    }
    if (!is_star(f, u)) {
      fail(ErrorKind::NotAStarSystem, "F contains a non-star member");
    }
  }

  DualityResult result;
  ForcedList state;
  for (;;) {
    const ForcingOutcome outcome = forcing_pass(state, F, u);
    if (outcome.clash) {
      result.tree = build_stree(state, *outcome.clash, u);
      return result;
    }
    if (outcome.added.empty()) break;
  }

  std::vector<OrientedSep> elems = state.list;
  const PartialOrientation as_set = PartialOrientation::from(std::move(elems), u);
  if (!is_consistent(as_set, u)) {
    result.warnings.push_back("forced list is inconsistent; duality hypotheses unmet");
  }
  if (F.has_forbidden_subset(as_set, u)) {
    result.warnings.push_back("forced list contains a member of F; duality hypotheses unmet");
  }
  result.forced = std::move(state);
  return result;
}

bool validate_stree(const STree& tree, const ExplicitForbidden& F, std::span<const Separation> S,
                    const Universe& u) {
  const std::size_t n = tree.nodes.size();
  if (n == 0) return false;
  if (tree.edges.size() != n - 1) return false;

  std::set<Mask> system;
  for (const Separation s : S) system.insert(s.canon);

  // Connectivity by union-find; |E| = |V|-1 + connected implies a tree.
  std::vector<int> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int v) -> int {
    while (parent[static_cast<std::size_t>(v)] != v) {
      v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    }
    return v;
  };

  std::vector<std::vector<OrientedSep>> incoming(n);
  for (const STreeEdge& e : tree.edges) {
    if (e.a < 0 || e.b < 0 || static_cast<std::size_t>(e.a) >= n ||
        static_cast<std::size_t>(e.b) >= n || e.a == e.b) {
      return false;
    }
    if (!system.count(u.separation_of(e.toward_b).canon)) return false;
    incoming[static_cast<std::size_t>(e.b)].push_back(e.toward_b);
    incoming[static_cast<std::size_t>(e.a)].push_back(u.inverse(e.toward_b));
    parent[static_cast<std::size_t>(find(e.a))] = find(e.b);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (find(static_cast<int>(i)) != find(0)) return false;
  }

  for (std::size_t v = 0; v < n; ++v) {
    std::sort(incoming[v].begin(), incoming[v].end(), LexLess{});
    incoming[v].erase(std::unique(incoming[v].begin(), incoming[v].end()), incoming[v].end());
    if (incoming[v] != tree.nodes[v].star.elements()) return false;
    if (!F.is_forbidden(tree.nodes[v].star)) return false;
  }
  return true;
}

}  // namespace tangles
