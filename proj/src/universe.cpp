#include "tangles/universe.hpp"

#include <algorithm>
#include <bit>

namespace tangles {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) fail(ErrorKind::MalformedInstance, "ground set must be nonempty");
  if (labels_.size() > 32) fail(ErrorKind::MalformedInstance, "ground set larger than 32 elements");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) fail(ErrorKind::MalformedInstance, "empty ground-set label");
    if (!index_.emplace(labels_[i], static_cast<int>(i)).second) {
      fail(ErrorKind::MalformedInstance, "duplicate ground-set label '" + labels_[i] + "'");
    }
  }
}

std::optional<int> GroundSet::index_of(std::string_view label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

WeightedGraph::WeightedGraph(int vertex_count, std::vector<WeightedEdge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  for (const WeightedEdge& e : edges_) {
    if (e.a < 0 || e.a >= n_ || e.b < 0 || e.b >= n_) {
      fail(ErrorKind::MalformedInstance, "edge endpoint out of range");
    }
    if (e.a == e.b) fail(ErrorKind::MalformedInstance, "self-loops are not allowed");
    if (e.w < 0) fail(ErrorKind::MalformedInstance, "negative edge weight");
  }
}

Universe::Universe(GroundSet ground, WeightedGraph graph, std::vector<Mask> system_lefts)
    : ground_(std::move(ground)), graph_(std::move(graph)) {
  if (graph_.vertex_count() != ground_.size()) {
    fail(ErrorKind::MalformedInstance, "graph vertex count does not match ground set");
  }
  full_ = ground_.size() == 32 ? ~Mask{0} : static_cast<Mask>((Mask{1} << ground_.size()) - 1);
  for (const WeightedEdge& e : graph_.edges()) {
    edge_masks_.push_back(static_cast<Mask>((Mask{1} << e.a) | (Mask{1} << e.b)));
    edge_weights_.push_back(e.w);
  }
  system_.reserve(system_lefts.size());
  for (const Mask left : system_lefts) {
    if ((left & ~full_) != 0) fail(ErrorKind::UnknownLabel, "separation references unknown elements");
    const Separation s = separation_of(OrientedSep{left});
    if (!system_index_.emplace(s.canon, static_cast<int>(system_.size())).second) {
      fail(ErrorKind::DuplicateSeparation, "duplicate separation " + show(s));
    }
    system_.push_back(s);
  }
}

Weight Universe::order(OrientedSep x) const {
  Weight total = 0;
  for (std::size_t i = 0; i < edge_masks_.size(); ++i) {
    if (std::popcount(x.left & edge_masks_[i]) == 1) total += edge_weights_[i];
  }
  return total;
}

Separation Universe::separation_of(OrientedSep x) const {
  const Mask other = full_ & ~x.left;
  return {lex_less(x.left, other) ? x.left : other};
}

std::optional<int> Universe::system_index(Separation s) const {
  const auto it = system_index_.find(s.canon);
  if (it == system_index_.end()) return std::nullopt;
  return it->second;
}

std::string Universe::show_side(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < ground_.size(); ++i) {
    if ((m >> i) & 1u) {
      if (!first) out += ",";
      out += ground_.label(i);
      first = false;
    }
  }
  out += "}";
  return out;
}

std::string Universe::show(OrientedSep x) const {
  return "(" + show_side(x.left) + "," + show_side(full_ & ~x.left) + ")";
}

std::string Universe::show(Separation s) const {
  return show_side(s.canon) + "|" + show_side(full_ & ~s.canon);
}

}  // namespace tangles
