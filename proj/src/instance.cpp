#include "tangles/instance.hpp"

#include <fstream>

namespace tangles {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) { fail(ErrorKind::MalformedInstance, what); }

const json& field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    malformed(std::string("missing field '") + name + "'");
  }
  return doc.at(name);
}

Mask parse_side(const json& labels, const GroundSet& ground) {
  if (!labels.is_array()) malformed("left side must be an array of labels");
  Mask side = 0;
  for (const json& l : labels) {
    if (!l.is_string()) malformed("ground-set labels are strings");
    const auto idx = ground.index_of(l.get<std::string>());
    if (!idx) fail(ErrorKind::UnknownLabel, "unknown label '" + l.get<std::string>() + "'");
    side |= Mask{1} << *idx;
  }
  return side;
}

}  // namespace

Instance Instance::parse_file(const std::string& path, bool allow_trivial_sides) {
  std::ifstream in(path);
  if (!in) malformed("cannot open instance file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  return parse_json(doc, allow_trivial_sides);
}

Instance Instance::parse_json(const json& doc, bool allow_trivial_sides) {
  if (!doc.is_object()) malformed("instance must be a JSON object");
  const json& version = field(doc, "version");
  if (!version.is_number_integer() || version.get<int>() != 1) {
    malformed("unsupported instance version");
  }

  std::vector<std::string> labels;
  for (const json& l : field(doc, "ground_set")) {
    if (!l.is_string()) malformed("ground-set labels are strings");
    labels.push_back(l.get<std::string>());
  }
  GroundSet ground(std::move(labels));

  std::vector<WeightedEdge> edges;
  for (const json& e : field(field(doc, "graph"), "edges")) {
    if (!e.is_array() || e.size() != 3) malformed("edges are [label, label, weight] triples");
    const auto a = ground.index_of(e.at(0).get<std::string>());
    const auto b = ground.index_of(e.at(1).get<std::string>());
    if (!a || !b) fail(ErrorKind::UnknownLabel, "edge endpoint label unknown");
    if (!e.at(2).is_number_integer() || e.at(2).get<Weight>() < 0) {
      malformed("edge weights are nonnegative integers");
    }
    edges.push_back({*a, *b, e.at(2).get<Weight>()});
  }
  WeightedGraph graph(ground.size(), std::move(edges));

  const Mask full = ground.size() == 32 ? ~Mask{0} : static_cast<Mask>((Mask{1} << ground.size()) - 1);
  std::vector<Mask> system_lefts;
  for (const json& s : field(doc, "separations")) {
    const Mask left = parse_side(field(s, "left"), ground);
    if (!allow_trivial_sides && (left == 0 || left == full)) {
      malformed("separation sides must be nonempty proper subsets (pass the allow flag to lift)");
    }
    system_lefts.push_back(left);
  }

  Instance inst;
  inst.universe_ = std::make_unique<Universe>(std::move(ground), std::move(graph),
                                              std::move(system_lefts));

  const json& forbidden = field(doc, "forbidden");
  const std::string kind = field(forbidden, "kind").get<std::string>();
  if (kind == "cover") {
    int max_size = 3;
    if (forbidden.contains("max_size")) {
      max_size = field(forbidden, "max_size").get<int>();
      if (max_size < 1) malformed("forbidden.max_size must be positive");
    }
    inst.forbidden_ = std::make_unique<CoverOracle>(*inst.universe_, max_size);
  } else if (kind == "explicit") {
    std::vector<PartialOrientation> members;
    for (const json& member : field(forbidden, "members")) {
      if (!member.is_array()) malformed("explicit members are arrays of oriented separations");
      std::vector<OrientedSep> elems;
      for (const json& os : member) {
        elems.push_back({parse_side(field(os, "left"), inst.universe_->ground())});
      }
      try {
        members.push_back(PartialOrientation::from(std::move(elems), *inst.universe_));
      } catch (const Error&) {
        malformed("explicit member is not antisymmetric");
      }
    }
    auto oracle = std::make_unique<ExplicitForbidden>(std::move(members));
    inst.explicit_ = oracle.get();
    inst.forbidden_ = std::move(oracle);
  } else {
    malformed("forbidden.kind must be 'cover' or 'explicit'");
  }
  return inst;
}

}  // namespace tangles
