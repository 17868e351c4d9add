#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tangles/core.hpp"
#include "tangles/forbidden.hpp"
#include "tangles/universe.hpp"

namespace tangles {

// A tangle in S together with extra separations from the surrounding
// universe, each capped in order by the largest order occurring in the
// S-part.
class ExtendedTangle {
 public:
  ExtendedTangle() = default;

  // Validates consistency and F-avoidance of the base.
  static ExtendedTangle from_base(const PartialOrientation& base, const ForbiddenOracle& F,
                                  const Universe& u);

  const PartialOrientation& elements() const { return elems_; }
  Weight max_base_order() const { return max_base_order_; }

  PartialOrientation base(const Universe& u) const;       // elements with separation in S
  PartialOrientation extension(const Universe& u) const;  // the rest

  // Union with x, no checks beyond antisymmetry; callers guard with
  // can_extend. A no-op when x is already present.
  ExtendedTangle with(OrientedSep x, const Universe& u) const;

  friend bool operator==(const ExtendedTangle&, const ExtendedTangle&) = default;

 private:
  PartialOrientation elems_;
  Weight max_base_order_ = 0;
};

// True iff tau + {x} is again an extended tangle: x already present counts as
// yes, the inverse present as no; otherwise the order cap, pairwise
// consistency, and the forbidden-subset scan all have to pass.
bool can_extend(const ExtendedTangle& tau, OrientedSep x, const ForbiddenOracle& F,
                const Universe& u);

// Among separations oriented oppositely by tau and rho, the one of minimum
// order, ties broken by canonical lexicographic order. Throws NoDistinguisher.
Separation find_distinguisher(const ExtendedTangle& tau, const ExtendedTangle& rho,
                              const Universe& u);

struct TanglePair {
  int a = 0;  // tangle ids, a < b
  int b = 0;
  Separation dist;
  int serial = 0;  // stable identity, never recycled
};

struct ReplacementEvent {
  int step = 0;
  int pair_serial = 0;
  Separation replaced;            // the distinguisher that went away
  Separation crossing;            // the t it crossed
  Separation replacement;         // the new distinguisher
  bool split = false;
  std::vector<int> split_ids;     // ids of tangles created by the split
  std::vector<Separation> n_before;  // distinct members of N before the event
};

struct FakeEvent {
  int step = 0;
  int tangle_id = 0;
  std::vector<OrientedSep> elements;  // snapshot for later confirmation
};

struct ToTEvent {
  enum class Kind { Replacement, Fake } kind = Kind::Replacement;
  ReplacementEvent replacement;
  FakeEvent fake;
};

// The evolving algorithm state: extended tangles with stable ids, the pair
// enumeration with current distinguishers, and bookkeeping counters. N is
// derived: the set of distinguishers referenced by surviving pairs.
struct ToTState {
  std::map<int, ExtendedTangle> tangles;
  std::vector<TanglePair> pairs;
  int step = 0;
  int split_count = 0;
  int next_tangle_id = 0;
  int next_pair_serial = 0;
  std::vector<ToTEvent> events;

  std::vector<Separation> nested_set() const;  // distinct dists, canonical order
  const ExtendedTangle& tangle(int id) const;
};

// Outcome of one crossing analysis: replace one side's distinguisher, or a
// tangle is unmasked as fake.
struct CrossOutcome {
  enum class Kind { ReplaceS, ReplaceT, Fake } kind = Kind::Fake;
  Separation replacement;
  int fake_id = -1;
};

// Deterministic realization of the replacement lemma for crossing
// distinguishers s of (tau,rho) and t of (phi,psi). When order(t) < order(s)
// the roles are swapped internally and the Replace outcomes swapped back.
// Throws NotCrossing / NotDistinguishing.
CrossOutcome classify_cross(Separation s, const ExtendedTangle& tau, const ExtendedTangle& rho,
                            int tau_id, int rho_id, Separation t, const ExtendedTangle& phi,
                            const ExtendedTangle& psi, int phi_id, int psi_id,
                            const ForbiddenOracle& F, const Universe& u);

// Replaces the distinguisher of pairs[pair_pos] by r: extends the pair's
// tangles by opposite orientations of r, keeps whichever of the other two
// extensions are tangles as split products, appends the split pairs, and
// reassigns distinguishers. Throws InvalidReplacement.
void apply_replacement(ToTState& state, std::size_t pair_pos, Separation r,
                       std::optional<Separation> crossing, const ForbiddenOracle& F,
                       const Universe& u);

// Deletes the tangle and every pair mentioning it. Throws UnknownTangle.
void remove_fake(ToTState& state, int tangle_id);

// Position of the first pair whose distinguisher crosses that of an earlier
// pair; nullopt when N is nested.
std::optional<std::size_t> min_cross_k(const ToTState& state, const Universe& u);

// One step of the main loop; precondition: N not nested.
void tot_step(ToTState& state, const ForbiddenOracle& F, const Universe& u);

// Count of tangles with exactly p oriented separations, p ascending; the
// algorithm never increases this key lexicographically.
std::vector<long> quasi_key(const std::map<int, ExtendedTangle>& tangles);

// true iff a <= b lexicographically after padding with zeros
bool quasi_key_leq(const std::vector<long>& a, const std::vector<long>& b);

struct ToTOptions {
  // Hard step budget; 0 means the loose default bound
  // 2^min(30, pairs(|T0| + splits)).
  long max_steps = 0;
};

struct ToTRunResult {
  ToTState state;
  std::vector<Separation> nested;  // final N
  long steps = 0;
  int split_count = 0;
  std::vector<std::vector<long>> key_trace;           // quasi_key after each step
  std::map<int, Weight> initial_pair_order;           // serial -> order of input dist
};

// Builds the initial state from tangles (ids in input order) with all pairs
// enumerated (i,j), i < j, distinguished via find_distinguisher.
ToTState make_initial_state(std::span<const ExtendedTangle> tangles, const Universe& u);

// Runs the corner-replacement loop until N is nested. Validates that input
// pairs cover all tangle pairs and that every distinguisher lies in S and
// distinguishes its pair. Throws StepBudgetExceeded past the budget.
ToTRunResult run_tot(ToTState initial, const ForbiddenOracle& F, const Universe& u,
                     const ToTOptions& opts = {});

struct ToTValidation {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct ToTValidateOptions {
  bool check_realness = true;  // needs ground size <= 5
  // Maximal tangles of S for the realness check; when empty they are
  // recomputed by brute force over the run's enumeration.
  std::vector<PartialOrientation> maximal_in_s;
};

// Checks nestedness, distinguisher validity, the order bound for unsplit
// descendants of input pairs, fake deletions (against the universe tangles
// of order <= max over S), and realness-completeness.
ToTValidation validate_tot_output(const ToTRunResult& result, const ForbiddenOracle& F,
                                  const Universe& u, const ToTValidateOptions& opts = {});

}  // namespace tangles
