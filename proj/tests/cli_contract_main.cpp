// Exercises the CLI binary end to end: exit codes, document shapes, and the
// error paths of every subcommand. Invoked by ctest with --cli and
// --fixtures.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

using nlohmann::json;

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

CommandResult run(const std::string& cli, const std::string& args) {
  CommandResult result;
  const std::string command = "'" + cli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

int failures = 0;

void expect(bool cond, const std::string& what) {
  if (!cond) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

json parse(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (...) {
    expect(false, what + ": output is not JSON");
    return json::object();
  }
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/tangle_cli_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  std::string fixtures = "tests/fixtures";
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--cli") cli = argv[i + 1];
    if (flag == "--fixtures") fixtures = argv[i + 1];
  }
  if (cli.empty()) {
    std::cerr << "FAIL: no --cli given\n";
    return 1;
  }
  const std::string k3 = fixtures + "/fix_k3.json";
  const std::string c4 = fixtures + "/fix_c4.json";
  const std::string dual1 = fixtures + "/fix_dual1.json";
  const std::string dual2 = fixtures + "/fix_dual2.json";
  const std::string chain = fixtures + "/fix_chain.json";

  {
    const CommandResult r = run(cli, "search --maximal '" + k3 + "'");
    expect(r.exit_code == 0, "search --maximal exit code");
    const json doc = parse(r.out, "search --maximal");
    expect(doc.value("kind", "") == "maximal", "maximal doc kind");
    expect(doc.at("tangles").size() == 3, "triangle has 3 maximal tangles");
  }
  {
    const CommandResult r = run(cli, "search --prefix 1 '" + k3 + "'");
    const json doc = parse(r.out, "search --prefix");
    expect(doc.at("layers").size() == 1, "prefix 1 keeps one layer");
    expect(doc.at("layers").at(0).size() == 2, "two tangles of the first separation");
  }
  {
    const CommandResult r = run(cli, "search '" + k3 + "'");
    const json doc = parse(r.out, "search");
    expect(doc.at("layers").size() == 3, "three layers");
    expect(doc.at("layers").at(2).size() == 3, "three full tangles");
  }
  {
    const CommandResult r = run(cli, "duality '" + dual1 + "'");
    expect(r.exit_code == 0, "duality exit code");
    const json doc = parse(r.out, "duality dual1");
    expect(doc.value("kind", "") == "stree", "dual1 yields a tree");
    expect(doc.at("nodes").size() == 2 && doc.at("edges").size() == 1, "two nodes, one edge");
  }
  {
    const CommandResult r = run(cli, "duality '" + dual2 + "'");
    const json doc = parse(r.out, "duality dual2");
    expect(doc.value("kind", "") == "forced", "dual2 yields a forced list");
    expect(doc.at("list").size() == 1, "one forced orientation");
    expect(doc.at("warnings").empty(), "no warnings on dual2");
  }
  {
    const CommandResult r = run(cli, "duality '" + chain + "' --emit dot");
    expect(r.exit_code == 0, "duality dot exit code");
    expect(r.out.find("digraph stree") == 0, "dot output starts with the graph header");
  }
  {
    // cover-kind forbidden families have no star list to force over
    const CommandResult r = run(cli, "duality '" + k3 + "'");
    expect(r.exit_code == 3, "duality on a cover instance exits 3");
  }
  {
    const CommandResult r = run(cli, "tot '" + k3 + "'");
    expect(r.exit_code == 0, "tot exit code");
    const json doc = parse(r.out, "tot k3");
    expect(doc.value("kind", "") == "tot", "tot doc kind");
    expect(doc.at("nested").size() <= 3, "at most three nested separations");
    expect(doc.at("splits").get<int>() == 0, "no splits on the triangle");
    expect(doc.at("tangles").size() == 3, "three tangles survive");
  }
  {
    // single surviving tangle: no pairs, empty nested set
    const CommandResult r = run(cli, "tot '" + dual2 + "'");
    const json doc = parse(r.out, "tot dual2");
    expect(doc.at("tangles").size() == 1, "single tangle");
    expect(doc.at("nested").empty(), "empty nested set");
  }
  {
    const CommandResult r = run(cli, "tot '" + c4 + "' --emit dot");
    expect(r.exit_code == 0, "tot dot exit code");
    expect(r.out.find("graph tot") == 0, "tot dot header");
  }
  for (const std::string mode : {"search", "duality", "tot"}) {
    const std::string file = mode == "search" ? k3 : (mode == "duality" ? dual1 : c4);
    const CommandResult r = run(cli, "verify --mode " + mode + " '" + file + "'");
    expect(r.exit_code == 0, "verify --mode " + mode);
    const json doc = parse(r.out, "verify " + mode);
    expect(doc.value("ok", false), "verify " + mode + " reports ok");
  }
  {
    const CommandResult r = run(cli, "search --seed-duality '" + dual1 + "'");
    expect(r.exit_code == 0, "seed-duality on a tree instance succeeds");
    const json doc = parse(r.out, "seed-duality dual1");
    expect(doc.value("kind", "") == "stree", "tree emitted when no tangle exists");
  }
  {
    const CommandResult r = run(cli, "search --seed-duality --maximal '" + dual2 + "'");
    const json doc = parse(r.out, "seed-duality dual2");
    expect(doc.value("kind", "") == "maximal", "seeded search emits maximal tangles");
    expect(doc.at("tangles").size() == 1, "one seeded tangle");
  }

  {
    // seeding needs an explicit star family
    expect(run(cli, "search --seed-duality '" + k3 + "'").exit_code == 3,
           "seed-duality on a cover instance exits 3");
  }
  {
    // a supplied certificate is re-checked; corruption is a mismatch
    const CommandResult emitted = run(cli, "duality '" + dual1 + "'");
    const std::string good = write_temp("tree_good.json", emitted.out);
    const CommandResult ok =
        run(cli, "verify --mode duality --document '" + good + "' '" + dual1 + "'");
    expect(ok.exit_code == 0, "emitted tree re-checks cleanly");

    json doc = parse(emitted.out, "emitted tree");
    doc["nodes"][0]["star"] = json::array();  // break the node law
    const std::string bad = write_temp("tree_bad.json", doc.dump());
    const CommandResult mismatch =
        run(cli, "verify --mode duality --document '" + bad + "' '" + dual1 + "'");
    expect(mismatch.exit_code == 4, "corrupted tree exits 4");
  }

  // malformed instances exit 2
  {
    const std::string dup = write_temp("dup.json", R"({
      "version": 1, "ground_set": ["0","1","2"],
      "graph": {"edges": [["0","1",1]]},
      "separations": [{"left":["0"]}, {"left":["1","2"]}],
      "forbidden": {"kind":"cover"}
    })");
    expect(run(cli, "search '" + dup + "'").exit_code == 2, "duplicate separation exits 2");
  }
  {
    const std::string unknown = write_temp("unknown.json", R"({
      "version": 1, "ground_set": ["0","1"],
      "graph": {"edges": []},
      "separations": [{"left":["9"]}],
      "forbidden": {"kind":"cover"}
    })");
    expect(run(cli, "search '" + unknown + "'").exit_code == 2, "unknown label exits 2");
  }
  {
    const std::string garbage = write_temp("garbage.json", "{ not json");
    expect(run(cli, "search '" + garbage + "'").exit_code == 2, "broken JSON exits 2");
    expect(run(cli, "search /nonexistent.json").exit_code == 2, "missing file exits 2");
  }

  if (failures == 0) std::puts("cli contract: all checks passed");
  return failures == 0 ? 0 : 1;
}
