#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tangles/duality.hpp"
#include "tangles/search.hpp"
#include "tangles/tree_of_tangles.hpp"
#include "tangles/universe.hpp"

namespace tangles {

using Doc = nlohmann::ordered_json;

Doc side_doc(Mask side, const Universe& u);               // sorted label list
Doc oriented_doc(OrientedSep x, const Universe& u);       // {"left": [...]}
Doc separation_doc(Separation s, const Universe& u);      // canonical orientation's left
Doc tangle_doc(const PartialOrientation& p, const Universe& u);

Doc layers_doc(const SearchResult& result, const Universe& u);
Doc maximal_doc(const std::vector<PartialOrientation>& tangles,
                const std::vector<Separation>& enumeration, const Universe& u);
Doc forced_doc(const ForcedList& forced, const std::vector<std::string>& warnings,
               const Universe& u);
Doc stree_doc(const STree& tree, const Universe& u);
Doc tot_doc(const ToTRunResult& result, const Universe& u);

std::string stree_dot(const STree& tree, const Universe& u);
std::string tot_dot(const ToTRunResult& result, const Universe& u);

// Round-trip support: rebuild structures from emitted documents.
OrientedSep oriented_from_doc(const Doc& doc, const Universe& u);
STree stree_from_doc(const Doc& doc, const Universe& u);

}  // namespace tangles
