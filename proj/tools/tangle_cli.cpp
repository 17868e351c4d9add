// Command-line front end: instance ingestion, the three algorithms, and a
// verify mode that replays everything against the brute-force oracles.
//
// Exit codes: 0 ok, 2 malformed instance, 3 precondition or contract
// violation, 4 verification mismatch.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tangles/brute_force.hpp"
#include "tangles/duality.hpp"
#include "tangles/emit.hpp"
#include "tangles/instance.hpp"
#include "tangles/search.hpp"
#include "tangles/tree_of_tangles.hpp"

namespace {

using namespace tangles;

constexpr int kExitMalformed = 2;
constexpr int kExitContract = 3;
constexpr int kExitMismatch = 4;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::MalformedInstance:
    case ErrorKind::DuplicateSeparation:
    case ErrorKind::UnknownLabel:
      return kExitMalformed;
    default:
      return kExitContract;
  }
}

void print_doc(const Doc& doc) { std::cout << doc.dump(2) << "\n"; }

// Separations of the instance ordered by increasing cut order, ties broken
// by canonical lexicographic order. The tree-of-tangles pipeline wants its
// maximal tangles computed over this enumeration.
std::vector<Separation> order_sorted_system(const Universe& u) {
  std::vector<Separation> sorted = u.system();
  std::stable_sort(sorted.begin(), sorted.end(), [&](Separation a, Separation b) {
    const Weight wa = u.order(a);
    const Weight wb = u.order(b);
    if (wa != wb) return wa < wb;
    return lex_less(a.canon, b.canon);
  });
  return sorted;
}

struct ToTPipeline {
  std::vector<Separation> enumeration;
  std::vector<PartialOrientation> maximal;
  ToTRunResult result;
};

ToTPipeline run_tot_pipeline(const Instance& inst) {
  const Universe& u = inst.universe();
  ToTPipeline pipe;
  pipe.enumeration = order_sorted_system(u);
  pipe.maximal = maximal_tangles(pipe.enumeration, inst.forbidden(), u);
  std::vector<ExtendedTangle> tangles;
  for (const PartialOrientation& tau : pipe.maximal) {
    tangles.push_back(ExtendedTangle::from_base(tau, inst.forbidden(), u));
  }
  pipe.result = run_tot(make_initial_state(tangles, u), inst.forbidden(), u);
  return pipe;
}

int cmd_search(const std::string& file, bool allow_trivial, bool maximal, int prefix,
               bool seed_duality) {
  const Instance inst = Instance::parse_file(file, allow_trivial);
  const Universe& u = inst.universe();
  std::vector<Separation> S = u.system();
  if (prefix >= 0) {
    if (static_cast<std::size_t>(prefix) > S.size()) {
      fail(ErrorKind::MalformedInstance, "--prefix exceeds the number of separations");
    }
    S.resize(static_cast<std::size_t>(prefix));
  }

  std::vector<OrientedSep> seed;
  if (seed_duality) {
    const ExplicitForbidden* F = inst.explicit_forbidden();
    if (F == nullptr) {
      fail(ErrorKind::NotAStarSystem, "--seed-duality needs an explicit star family");
    }
    const DualityResult duality = run_duality(*F, S, u);
    if (duality.has_tree()) {
      // No F-tangle of S exists; the tree is the complete answer.
      print_doc(stree_doc(*duality.tree, u));
      return 0;
    }
    seed = duality.forced->list;
  }

  if (maximal) {
    const auto tangles = seed_duality ? seeded_maximal_tangles(S, inst.forbidden(), u, seed)
                                      : maximal_tangles(S, inst.forbidden(), u);
    print_doc(maximal_doc(tangles, S, u));
  } else {
    const SearchResult result = seed_duality ? seeded_search(S, inst.forbidden(), u, seed)
                                             : layered_search(S, inst.forbidden(), u);
    print_doc(layers_doc(result, u));
  }
  return 0;
}

int cmd_duality(const std::string& file, bool allow_trivial, const std::string& emit) {
  const Instance inst = Instance::parse_file(file, allow_trivial);
  const Universe& u = inst.universe();
  const ExplicitForbidden* F = inst.explicit_forbidden();
  if (F == nullptr) {
    fail(ErrorKind::NotAStarSystem, "duality needs forbidden.kind = \"explicit\" with stars");
  }
  const DualityResult result = run_duality(*F, u.system(), u);
  if (result.has_tree()) {
    if (emit == "dot") {
      std::cout << stree_dot(*result.tree, u);
    } else {
      print_doc(stree_doc(*result.tree, u));
    }
  } else {
    if (emit == "dot") {
      fail(ErrorKind::MalformedInstance, "only S-trees have a DOT rendering");
    }
    print_doc(forced_doc(*result.forced, result.warnings, u));
  }
  return 0;
}

int cmd_tot(const std::string& file, bool allow_trivial, const std::string& emit) {
  const Instance inst = Instance::parse_file(file, allow_trivial);
  const Universe& u = inst.universe();
  const ToTPipeline pipe = run_tot_pipeline(inst);
  if (emit == "dot") {
    std::cout << tot_dot(pipe.result, u);
  } else {
    print_doc(tot_doc(pipe.result, u));
  }
  return 0;
}

int cmd_verify(const std::string& file, bool allow_trivial, const std::string& mode,
               const std::string& document) {
  const Instance inst = Instance::parse_file(file, allow_trivial);
  const Universe& u = inst.universe();
  Verdict verdict;

  if (mode == "search") {
    const SearchResult fast = layered_search(u.system(), inst.forbidden(), u);
    const auto slow = brute_layers(u.system(), inst.forbidden(), u);
    verdict.require(fast.layers.size() == slow.size(), "layer counts differ");
    for (std::size_t i = 0; i < slow.size() && i < fast.layers.size(); ++i) {
      auto a = fast.layers[i];
      auto b = slow[i];
      std::sort(a.begin(), a.end(), canonical_less);
      std::sort(b.begin(), b.end(), canonical_less);
      verdict.require(a == b, "layer " + std::to_string(i + 1) + " differs from brute force");
    }
  } else if (mode == "duality") {
    const ExplicitForbidden* F = inst.explicit_forbidden();
    if (F == nullptr) {
      fail(ErrorKind::NotAStarSystem, "duality verification needs an explicit star family");
    }
    verdict = verify_duality(*F, u.system(), u);
    // Round-trip: an emitted tree must re-parse and re-validate.
    const DualityResult result = run_duality(*F, u.system(), u);
    if (result.has_tree()) {
      const STree reparsed = stree_from_doc(stree_doc(*result.tree, u), u);
      verdict.require(validate_stree(reparsed, *F, u.system(), u),
                      "re-parsed tree fails validation");
    }
    if (!document.empty()) {
      // Re-check a previously emitted certificate against this instance.
      std::ifstream in(document);
      if (!in) fail(ErrorKind::MalformedInstance, "cannot open document '" + document + "'");
      Doc doc;
      try {
        in >> doc;
      } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::MalformedInstance, std::string("invalid document JSON: ") + e.what());
      }
      const std::string kind = doc.value("kind", "");
      if (kind == "stree") {
        const STree supplied = stree_from_doc(doc, u);
        verdict.require(validate_stree(supplied, *F, u.system(), u),
                        "supplied tree fails validation");
      } else if (kind == "forced") {
        std::vector<OrientedSep> list;
        for (const auto& os_doc : doc.at("list")) list.push_back(oriented_from_doc(os_doc, u));
        const PartialOrientation forced = PartialOrientation::from(list, u);
        const auto layers = brute_layers(u.system(), *F, u);
        for (const PartialOrientation& tangle :
             layers.empty() ? std::vector<PartialOrientation>{{}} : layers.back()) {
          verdict.require(forced.subset_of(tangle),
                          "supplied forced list not inside an F-tangle");
        }
      } else {
        fail(ErrorKind::MalformedInstance, "document kind must be stree or forced");
      }
    }
  } else if (mode == "tot") {
    const ToTPipeline pipe = run_tot_pipeline(inst);
    ToTValidateOptions opts;
    opts.maximal_in_s = brute_maximal(pipe.enumeration, inst.forbidden(), u);
    const ToTValidation validation =
        validate_tot_output(pipe.result, inst.forbidden(), u, opts);
    for (const std::string& v : validation.violations) verdict.require(false, v);
    // The search-side input must agree with brute force as well.
    auto a = pipe.maximal;
    auto b = opts.maximal_in_s;
    std::sort(a.begin(), a.end(), canonical_less);
    std::sort(b.begin(), b.end(), canonical_less);
    verdict.require(a == b, "maximal tangles differ from brute force");
  } else {
    fail(ErrorKind::MalformedInstance, "--mode must be search, duality or tot");
  }

  Doc doc;
  doc["kind"] = "verify";
  doc["mode"] = mode;
  doc["ok"] = verdict.ok;
  print_doc(doc);
  if (!verdict.ok) {
    for (const std::string& d : verdict.details) std::cerr << "mismatch: " << d << "\n";
    return kExitMismatch;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tangles: tangle search, tangle-tree duality, and trees of tangles"};
  app.require_subcommand(1);

  std::string file;
  bool allow_trivial = false;
  bool maximal = false;
  int prefix = -1;
  bool seed_duality = false;
  std::string emit = "json";
  std::string mode = "search";
  std::string document;

  CLI::App* search = app.add_subcommand("search", "enumerate F-tangles layer by layer");
  search->add_option("file", file)->required();
  search->add_flag("--maximal", maximal, "emit only subset-maximal tangles");
  search->add_option("--prefix", prefix, "restrict to the first N separations");
  search->add_flag("--seed-duality", seed_duality, "run duality first and seed the search");
  search->add_option("--emit", emit)->check(CLI::IsMember({"json"}));
  search->add_flag("--allow-trivial-sides", allow_trivial);

  CLI::App* duality = app.add_subcommand("duality", "emit an S-tree over F or a forced list");
  duality->add_option("file", file)->required();
  duality->add_option("--emit", emit)->check(CLI::IsMember({"json", "dot"}));
  duality->add_flag("--allow-trivial-sides", allow_trivial);

  CLI::App* tot = app.add_subcommand("tot", "build a nested distinguisher set for all tangles");
  tot->add_option("file", file)->required();
  tot->add_option("--emit", emit)->check(CLI::IsMember({"json", "dot"}));
  tot->add_flag("--allow-trivial-sides", allow_trivial);

  CLI::App* verify = app.add_subcommand("verify", "replay against the brute-force oracles");
  verify->add_option("file", file)->required();
  verify->add_option("--mode", mode)->required()->check(CLI::IsMember({"search", "duality", "tot"}));
  verify->add_option("--document", document, "re-check a previously emitted duality certificate");
  verify->add_flag("--allow-trivial-sides", allow_trivial);

  CLI11_PARSE(app, argc, argv);

  try {
    if (search->parsed()) return cmd_search(file, allow_trivial, maximal, prefix, seed_duality);
    if (duality->parsed()) return cmd_duality(file, allow_trivial, emit);
    if (tot->parsed()) return cmd_tot(file, allow_trivial, emit);
    if (verify->parsed()) return cmd_verify(file, allow_trivial, mode, document);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContract;
  }
  return 0;
}
