#include "tangles/emit.hpp"

namespace tangles {

Doc side_doc(Mask side, const Universe& u) {
  Doc labels = Doc::array();
  for (int i = 0; i < u.ground_size(); ++i) {
    if ((side >> i) & 1u) labels.push_back(u.ground().label(i));
  }
  return labels;
}

Doc oriented_doc(OrientedSep x, const Universe& u) {
  Doc doc;
  doc["left"] = side_doc(x.left, u);
  return doc;
}

Doc separation_doc(Separation s, const Universe& u) {
  Doc doc;
  doc["left"] = side_doc(s.canon, u);
  return doc;
}

Doc tangle_doc(const PartialOrientation& p, const Universe& u) {
  Doc doc = Doc::array();
  for (const OrientedSep x : p) doc.push_back(oriented_doc(x, u));
  return doc;
}

Doc layers_doc(const SearchResult& result, const Universe& u) {
  Doc doc;
  doc["kind"] = "layers";
  doc["separations"] = Doc::array();
  for (const Separation s : result.enumeration) doc["separations"].push_back(separation_doc(s, u));
  doc["layers"] = Doc::array();
  for (const auto& layer : result.layers) {
    Doc layer_doc = Doc::array();
    for (const PartialOrientation& tangle : layer) layer_doc.push_back(tangle_doc(tangle, u));
    doc["layers"].push_back(layer_doc);
  }
  return doc;
}

Doc maximal_doc(const std::vector<PartialOrientation>& tangles,
                const std::vector<Separation>& enumeration, const Universe& u) {
  Doc doc;
  doc["kind"] = "maximal";
  doc["separations"] = Doc::array();
  for (const Separation s : enumeration) doc["separations"].push_back(separation_doc(s, u));
  doc["tangles"] = Doc::array();
  for (const PartialOrientation& tangle : tangles) doc["tangles"].push_back(tangle_doc(tangle, u));
  return doc;
}

Doc forced_doc(const ForcedList& forced, const std::vector<std::string>& warnings,
               const Universe& u) {
  Doc doc;
  doc["kind"] = "forced";
  doc["list"] = Doc::array();
  for (const OrientedSep x : forced.list) doc["list"].push_back(oriented_doc(x, u));
  doc["trace"] = Doc::array();
  for (const auto& [orient, star] : forced.trace) {
    Doc entry;
    entry["forced"] = oriented_doc(orient, u);
    entry["star"] = tangle_doc(star, u);
    doc["trace"].push_back(entry);
  }
  doc["warnings"] = warnings;
  return doc;
}

Doc stree_doc(const STree& tree, const Universe& u) {
  Doc doc;
  doc["kind"] = "stree";
  doc["nodes"] = Doc::array();
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    Doc node;
    node["id"] = i;
    node["star"] = tangle_doc(tree.nodes[i].star, u);
    doc["nodes"].push_back(node);
  }
  doc["edges"] = Doc::array();
  for (const STreeEdge& e : tree.edges) {
    Doc edge;
    edge["a"] = e.a;
    edge["b"] = e.b;
    edge["sep"] = separation_doc(u.separation_of(e.toward_b), u);
    edge["toward_b"] = oriented_doc(e.toward_b, u);
    doc["edges"].push_back(edge);
  }
  return doc;
}

Doc tot_doc(const ToTRunResult& result, const Universe& u) {
  const ToTState& state = result.state;
  Doc doc;
  doc["kind"] = "tot";
  doc["tangles"] = Doc::array();
  for (const auto& [id, tangle] : state.tangles) {
    Doc entry;
    entry["id"] = id;
    entry["base"] = tangle_doc(tangle.base(u), u);
    entry["extension"] = tangle_doc(tangle.extension(u), u);
    doc["tangles"].push_back(entry);
  }
  doc["pairs"] = Doc::array();
  for (const TanglePair& p : state.pairs) {
    Doc entry;
    entry["a"] = p.a;
    entry["b"] = p.b;
    entry["sep"] = separation_doc(p.dist, u);
    doc["pairs"].push_back(entry);
  }
  doc["nested"] = Doc::array();
  for (const Separation s : result.nested) doc["nested"].push_back(separation_doc(s, u));
  doc["steps"] = result.steps;
  doc["splits"] = result.split_count;
  doc["events"] = Doc::array();
  for (const ToTEvent& e : state.events) {
    Doc entry;
    if (e.kind == ToTEvent::Kind::Replacement) {
      entry["type"] = "replacement";
      entry["step"] = e.replacement.step;
      entry["pair"] = e.replacement.pair_serial;
      entry["replaced"] = separation_doc(e.replacement.replaced, u);
      entry["crossing"] = separation_doc(e.replacement.crossing, u);
      entry["with"] = separation_doc(e.replacement.replacement, u);
      entry["split"] = e.replacement.split;
    } else {
      entry["type"] = "fake";
      entry["step"] = e.fake.step;
      entry["tangle"] = e.fake.tangle_id;
    }
    doc["events"].push_back(entry);
  }
  return doc;
}

namespace {

// Escapes one piece of label text; layout escapes like \n are added after.
std::string dot_escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string star_label(const PartialOrientation& star, const Universe& u) {
  std::string out = "{";
  bool first = true;
  for (const OrientedSep x : star) {
    if (!first) out += ", ";
    out += u.show(x);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string stree_dot(const STree& tree, const Universe& u) {
  std::string out = "digraph stree {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" +
           dot_escape(star_label(tree.nodes[i].star, u)) + "\"];\n";
  }
  for (const STreeEdge& e : tree.edges) {
    // Arrow drawn in the stored orientation: toward_b points at node b.
    out += "  n" + std::to_string(e.a) + " -> n" + std::to_string(e.b) + " [label=\"" +
           dot_escape(u.show(u.separation_of(e.toward_b)) + "  as  " + u.show(e.toward_b)) +
           "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string tot_dot(const ToTRunResult& result, const Universe& u) {
  const ToTState& state = result.state;
  std::string out = "graph tot {\n  node [shape=box];\n";
  for (const auto& [id, tangle] : state.tangles) {
    std::string label = "T" + std::to_string(id);
    for (const OrientedSep x : tangle.elements()) label += "\\n" + dot_escape(u.show(x));
    out += "  t" + std::to_string(id) + " [label=\"" + label + "\"];\n";
  }
  for (const TanglePair& p : state.pairs) {
    out += "  t" + std::to_string(p.a) + " -- t" + std::to_string(p.b) + " [label=\"" +
           dot_escape(u.show(p.dist)) + "\"];\n";
  }
  out += "}\n";
  return out;
}

OrientedSep oriented_from_doc(const Doc& doc, const Universe& u) {
  Mask left = 0;
  for (const auto& l : doc.at("left")) {
    const auto idx = u.ground().index_of(l.template get<std::string>());
    if (!idx) fail(ErrorKind::UnknownLabel, "unknown label in document");
    left |= Mask{1} << *idx;
  }
  return {left};
}

STree stree_from_doc(const Doc& doc, const Universe& u) {
  if (doc.at("kind") != "stree") fail(ErrorKind::MalformedInstance, "not an stree document");
  STree tree;
  for (const auto& node : doc.at("nodes")) {
    std::vector<OrientedSep> star;
    for (const auto& os : node.at("star")) star.push_back(oriented_from_doc(os, u));
    tree.nodes.push_back({PartialOrientation::from(std::move(star), u)});
  }
  for (const auto& edge : doc.at("edges")) {
    tree.edges.push_back({edge.at("a").template get<int>(), edge.at("b").template get<int>(),
                          oriented_from_doc(edge.at("toward_b"), u)});
  }
  return tree;
}

}  // namespace tangles
