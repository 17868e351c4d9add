#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tangles/core.hpp"

namespace tangles {

class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  std::optional<int> index_of(std::string_view label) const;
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int, std::less<>> index_;
};

struct WeightedEdge {
  int a = 0;
  int b = 0;
  Weight w = 0;
};

class WeightedGraph {
 public:
  WeightedGraph(int vertex_count, std::vector<WeightedEdge> edges);

  int vertex_count() const { return n_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

 private:
  int n_ = 0;
  std::vector<WeightedEdge> edges_;
};

// The concrete universe: all oriented bipartitions (A, V\A) of a finite
// ground set, ordered by left-side inclusion, with join/meet = union and
// intersection of left sides and order = weighted edge cut of a graph on V.
// A distinguished enumerated subsystem S is carried along.
class Universe {
 public:
  Universe(GroundSet ground, WeightedGraph graph, std::vector<Mask> system_lefts);

  const GroundSet& ground() const { return ground_; }
  const WeightedGraph& graph() const { return graph_; }
  int ground_size() const { return ground_.size(); }
  Mask full_mask() const { return full_; }

  OrientedSep inverse(OrientedSep x) const { return {static_cast<Mask>(full_ & ~x.left)}; }
  bool leq(OrientedSep x, OrientedSep y) const { return (x.left & ~y.left) == 0; }
  OrientedSep join(OrientedSep x, OrientedSep y) const { return {static_cast<Mask>(x.left | y.left)}; }
  OrientedSep meet(OrientedSep x, OrientedSep y) const { return {static_cast<Mask>(x.left & y.left)}; }
  Weight order(OrientedSep x) const;
  Weight order(Separation s) const { return order(OrientedSep{s.canon}); }

  Separation separation_of(OrientedSep x) const;
  OrientedSep canonical_orientation(Separation s) const { return {s.canon}; }

  // The designated system S in enumeration order s_1..s_n.
  const std::vector<Separation>& system() const { return system_; }
  int system_size() const { return static_cast<int>(system_.size()); }
  bool in_system(Separation s) const { return system_index_.count(s.canon) > 0; }
  bool in_system(OrientedSep x) const { return in_system(separation_of(x)); }
  std::optional<int> system_index(Separation s) const;

  std::string show_side(Mask m) const;
  std::string show(OrientedSep x) const;
  std::string show(Separation s) const;

 private:
  GroundSet ground_;
  WeightedGraph graph_;
  Mask full_ = 0;
  std::vector<Separation> system_;
  std::map<Mask, int> system_index_;
  std::vector<Mask> edge_masks_;
  std::vector<Weight> edge_weights_;
};

}  // namespace tangles
