#include "tangles/tree_of_tangles.hpp"

#include <algorithm>
#include <set>

#include "tangles/brute_force.hpp"

namespace tangles {

ExtendedTangle ExtendedTangle::from_base(const PartialOrientation& base, const ForbiddenOracle& F,
                                         const Universe& u) {
  for (const OrientedSep x : base) {
    if (!u.in_system(x)) {
      fail(ErrorKind::Internal, "base element " + u.show(x) + " lies outside S");
    }
  }
  if (!is_consistent(base, u)) fail(ErrorKind::Internal, "base orientation is inconsistent");
  if (F.has_forbidden_subset(base, u)) fail(ErrorKind::Internal, "base orientation violates F");
  ExtendedTangle t;
  t.elems_ = base;
  for (const OrientedSep x : base) t.max_base_order_ = std::max(t.max_base_order_, u.order(x));
  return t;
}

PartialOrientation ExtendedTangle::base(const Universe& u) const {
  std::vector<OrientedSep> kept;
  for (const OrientedSep x : elems_) {
    if (u.in_system(x)) kept.push_back(x);
  }
  return PartialOrientation::unchecked(std::move(kept));
}

PartialOrientation ExtendedTangle::extension(const Universe& u) const {
  std::vector<OrientedSep> kept;
  for (const OrientedSep x : elems_) {
    if (!u.in_system(x)) kept.push_back(x);
  }
  return PartialOrientation::unchecked(std::move(kept));
}

ExtendedTangle ExtendedTangle::with(OrientedSep x, const Universe& u) const {
  if (elems_.contains(x)) return *this;
  ExtendedTangle t;
  t.elems_ = elems_.with(x, u);
  t.max_base_order_ = max_base_order_;
  if (u.in_system(x)) t.max_base_order_ = std::max(t.max_base_order_, u.order(x));
  return t;
}

bool can_extend(const ExtendedTangle& tau, OrientedSep x, const ForbiddenOracle& F,
                const Universe& u) {
  if (tau.elements().contains(x)) return true;
  if (tau.elements().contains(u.inverse(x))) return false;
  if (u.order(x) > tau.max_base_order()) return false;
  for (const OrientedSep y : tau.elements()) {
    if (!is_consistent_pair(y, x, u)) return false;
  }
  return !F.blocks_addition(tau.elements(), x, u);
}

Separation find_distinguisher(const ExtendedTangle& tau, const ExtendedTangle& rho,
                              const Universe& u) {
  std::optional<Separation> best;
  Weight best_order = 0;
  for (const OrientedSep x : tau.elements()) {
    if (!rho.elements().contains(u.inverse(x))) continue;
    const Separation s = u.separation_of(x);
    const Weight w = u.order(s);
    if (!best || w < best_order || (w == best_order && lex_less(s.canon, best->canon))) {
      best = s;
      best_order = w;
    }
  }
  if (!best) fail(ErrorKind::NoDistinguisher, "tangles orient no separation oppositely");
  return *best;
}

std::vector<Separation> ToTState::nested_set() const {
  std::vector<Separation> result;
  for (const TanglePair& p : pairs) result.push_back(p.dist);
  std::sort(result.begin(), result.end(), LexLess{});
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

const ExtendedTangle& ToTState::tangle(int id) const {
  const auto it = tangles.find(id);
  if (it == tangles.end()) fail(ErrorKind::UnknownTangle, "no tangle with id " + std::to_string(id));
  return it->second;
}

namespace {

struct DistinguishCheck {
  bool ok = false;
  OrientedSep in_tau;  // orientation of the separation inside tau
};

DistinguishCheck distinguishes(Separation s, const ExtendedTangle& tau, const ExtendedTangle& rho,
                               const Universe& u) {
  const auto in_tau = tau.elements().orientation_of(s, u);
  if (!in_tau) return {};
  if (!rho.elements().contains(u.inverse(*in_tau))) return {};
  return {true, *in_tau};
}

CrossOutcome classify_normalized(Separation s, const ExtendedTangle& tau,
                                 const ExtendedTangle& rho, int tau_id, int rho_id, Separation t,
                                 const ExtendedTangle& phi, const ExtendedTangle& psi, int phi_id,
                                 int psi_id, const ForbiddenOracle& F, const Universe& u) {
  using Kind = CrossOutcome::Kind;
  const OrientedSep fs = u.canonical_orientation(s);
  const OrientedSep bs = u.inverse(fs);
  const bool fwd_phi = can_extend(phi, fs, F, u);
  const bool bwd_phi = can_extend(phi, bs, F, u);
  const bool fwd_psi = can_extend(psi, fs, F, u);
  const bool bwd_psi = can_extend(psi, bs, F, u);

  // (a) s itself fits phi and psi in opposite orientations: replace t by s.
  if ((fwd_phi && bwd_psi) || (bwd_phi && fwd_psi)) return {Kind::ReplaceT, s, -1};

  // (b) a tangle that accepts neither orientation of the smaller separation
  // is fake.
  if (!fwd_phi && !bwd_phi) return {Kind::Fake, {}, phi_id};
  if (!fwd_psi && !bwd_psi) return {Kind::Fake, {}, psi_id};

  // (c) now exactly one orientation of s fits both phi and psi.
  const bool fwd_both = fwd_phi && fwd_psi;
  const bool bwd_both = bwd_phi && bwd_psi;
  if (fwd_both == bwd_both) {
    fail(ErrorKind::Internal, "case analysis of the replacement lemma broke down");
  }
  const OrientedSep vs = fwd_both ? fs : bs;
  const OrientedSep t_phi = *phi.elements().orientation_of(t, u);

  const OrientedSep c1 = u.join(vs, t_phi);
  if (u.order(c1) <= u.order(t)) {
    if (!can_extend(phi, c1, F, u)) return {Kind::Fake, {}, phi_id};
    if (!can_extend(psi, u.inverse(c1), F, u)) return {Kind::Fake, {}, psi_id};
    return {Kind::ReplaceT, u.separation_of(c1), -1};
  }
  const OrientedSep c2 = u.join(vs, u.inverse(t_phi));
  if (u.order(c2) <= u.order(t)) {
    if (!can_extend(psi, c2, F, u)) return {Kind::Fake, {}, psi_id};
    if (!can_extend(phi, u.inverse(c2), F, u)) return {Kind::Fake, {}, phi_id};
    return {Kind::ReplaceT, u.separation_of(c2), -1};
  }

  // (d) both corners toward s exceeded |t|; by submodularity the opposing
  // corners fall below |s| and one of them can replace s.
  const OrientedSep sv = u.inverse(vs);
  const OrientedSep d1 = u.join(sv, t_phi);
  const OrientedSep d2 = u.join(sv, u.inverse(t_phi));
  if (u.order(d1) >= u.order(s) || u.order(d2) >= u.order(s)) {
    fail(ErrorKind::Internal, "submodularity bound violated in corner replacement");
  }
  const bool sv_in_tau = tau.elements().contains(sv);
  const ExtendedTangle& tprime = sv_in_tau ? tau : rho;
  const ExtendedTangle& other = sv_in_tau ? rho : tau;
  const int tprime_id = sv_in_tau ? tau_id : rho_id;
  const int other_id = sv_in_tau ? rho_id : tau_id;

  OrientedSep chosen;
  if (can_extend(tprime, d1, F, u)) {
    chosen = d1;
  } else if (can_extend(tprime, d2, F, u)) {
    chosen = d2;
  } else {
    return {Kind::Fake, {}, tprime_id};
  }
  if (!can_extend(other, u.inverse(chosen), F, u)) return {Kind::Fake, {}, other_id};
  return {Kind::ReplaceS, u.separation_of(chosen), -1};
}

}  // namespace

CrossOutcome classify_cross(Separation s, const ExtendedTangle& tau, const ExtendedTangle& rho,
                            int tau_id, int rho_id, Separation t, const ExtendedTangle& phi,
                            const ExtendedTangle& psi, int phi_id, int psi_id,
                            const ForbiddenOracle& F, const Universe& u) {
  if (is_nested(s, t, u)) {
    fail(ErrorKind::NotCrossing, u.show(s) + " and " + u.show(t) + " are nested");
  }
  if (!distinguishes(s, tau, rho, u).ok) {
    fail(ErrorKind::NotDistinguishing, u.show(s) + " does not distinguish its pair");
  }
  if (!distinguishes(t, phi, psi, u).ok) {
    fail(ErrorKind::NotDistinguishing, u.show(t) + " does not distinguish its pair");
  }

  // Ties keep the given roles; strictly larger s swaps them.
  const bool swapped = u.order(t) < u.order(s);
  CrossOutcome out =
      swapped ? classify_normalized(t, phi, psi, phi_id, psi_id, s, tau, rho, tau_id, rho_id, F, u)
              : classify_normalized(s, tau, rho, tau_id, rho_id, t, phi, psi, phi_id, psi_id, F, u);
  if (swapped) {
    if (out.kind == CrossOutcome::Kind::ReplaceS) {
      out.kind = CrossOutcome::Kind::ReplaceT;
    } else if (out.kind == CrossOutcome::Kind::ReplaceT) {
      out.kind = CrossOutcome::Kind::ReplaceS;
    }
  }
  return out;
}

namespace {

std::optional<Separation> pair_dist(const ToTState& state, int a, int b) {
  for (const TanglePair& p : state.pairs) {
    if ((p.a == a && p.b == b) || (p.a == b && p.b == a)) return p.dist;
  }
  return std::nullopt;
}

}  // namespace

void apply_replacement(ToTState& state, std::size_t pair_pos, Separation r,
                       std::optional<Separation> crossing, const ForbiddenOracle& F,
                       const Universe& u) {
  if (pair_pos >= state.pairs.size()) {
    fail(ErrorKind::InvalidReplacement, "pair index out of range");
  }
  const TanglePair row = state.pairs[pair_pos];
  const ExtendedTangle tau = state.tangle(row.a);
  const ExtendedTangle rho = state.tangle(row.b);
  if (u.order(r) > u.order(row.dist)) {
    fail(ErrorKind::InvalidReplacement, "replacement would increase the distinguisher order");
  }

  const OrientedSep fr = u.canonical_orientation(r);
  const OrientedSep br = u.inverse(fr);
  OrientedSep vr;
  if (can_extend(tau, fr, F, u) && can_extend(rho, br, F, u)) {
    vr = fr;
  } else if (can_extend(tau, br, F, u) && can_extend(rho, fr, F, u)) {
    vr = br;
  } else {
    fail(ErrorKind::InvalidReplacement,
         u.show(r) + " cannot be added to the pair in opposite orientations");
  }
  const OrientedSep vr_inv = u.inverse(vr);
  const bool tau_splits = can_extend(tau, vr_inv, F, u);
  const bool rho_splits = can_extend(rho, vr, F, u);

  ReplacementEvent event;
  event.step = state.step;
  event.pair_serial = row.serial;
  event.replaced = row.dist;
  event.crossing = crossing.value_or(r);
  event.replacement = r;
  event.n_before = state.nested_set();

  state.tangles[row.a] = tau.with(vr, u);
  state.tangles[row.b] = rho.with(vr_inv, u);
  state.pairs[pair_pos].dist = r;

  std::vector<int> split_ids;
  if (tau_splits) {
    const int id = state.next_tangle_id++;
    state.tangles.emplace(id, tau.with(vr_inv, u));
    split_ids.push_back(id);
  }
  if (rho_splits) {
    const int id = state.next_tangle_id++;
    state.tangles.emplace(id, rho.with(vr, u));
    split_ids.push_back(id);
  }

  if (!split_ids.empty()) {
    state.split_count += 1;
    event.split = true;
    event.split_ids = split_ids;
  }

  // Pair bookkeeping for split products: each new tangle pairs with every
  // other tangle; r when it distinguishes within the replacement family,
  // the old distinguisher when it does not, and the parent's distinguisher
  // toward outsiders.
  std::set<std::pair<int, int>> appended;
  for (std::size_t idx = 0; idx < split_ids.size(); ++idx) {
    const int id = split_ids[idx];
    const bool from_tau = tau_splits && id == split_ids[0];
    const int parent = from_tau ? row.a : row.b;
    for (const auto& [partner, partner_tangle] : state.tangles) {
      if (partner == id) continue;
      const std::pair<int, int> key{std::min(id, partner), std::max(id, partner)};
      if (appended.count(key)) continue;
      const bool partner_is_new =
          std::find(split_ids.begin(), split_ids.end(), partner) != split_ids.end();
      const bool partner_in_family = partner == row.a || partner == row.b || partner_is_new;

      Separation dist;
      if (partner_in_family) {
        const DistinguishCheck by_r = distinguishes(r, state.tangle(id), partner_tangle, u);
        dist = by_r.ok ? r : row.dist;
      } else {
        const auto inherited = pair_dist(state, parent, partner);
        if (!inherited) {
          fail(ErrorKind::Internal, "missing pair to inherit a distinguisher from");
        }
        dist = *inherited;
      }
      if (!distinguishes(dist, state.tangle(id), partner_tangle, u).ok) {
        fail(ErrorKind::Internal, "assigned distinguisher fails to distinguish a split pair");
      }
      state.pairs.push_back({key.first, key.second, dist, state.next_pair_serial++});
      appended.insert(key);
    }
  }

  state.events.push_back({ToTEvent::Kind::Replacement, std::move(event), {}});
}

void remove_fake(ToTState& state, int tangle_id) {
  const auto it = state.tangles.find(tangle_id);
  if (it == state.tangles.end()) {
    fail(ErrorKind::UnknownTangle, "no tangle with id " + std::to_string(tangle_id));
  }
  FakeEvent event;
  event.step = state.step;
  event.tangle_id = tangle_id;
  event.elements = it->second.elements().elements();
  state.events.push_back({ToTEvent::Kind::Fake, {}, std::move(event)});

  state.tangles.erase(it);
  std::erase_if(state.pairs,
                [&](const TanglePair& p) { return p.a == tangle_id || p.b == tangle_id; });
}

std::optional<std::size_t> min_cross_k(const ToTState& state, const Universe& u) {
  for (std::size_t k = 1; k < state.pairs.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!is_nested(state.pairs[k].dist, state.pairs[j].dist, u)) return k;
    }
  }
  return std::nullopt;
}

void tot_step(ToTState& state, const ForbiddenOracle& F, const Universe& u) {
  const auto k_opt = min_cross_k(state, u);
  if (!k_opt) fail(ErrorKind::Internal, "tot_step requires a crossing pair");
  const std::size_t k = *k_opt;

  const Separation s = state.pairs[k].dist;
  const int tau_id = state.pairs[k].a;
  const int rho_id = state.pairs[k].b;

  std::vector<std::size_t> crossing;
  for (std::size_t j = 0; j < k; ++j) {
    if (!is_nested(state.pairs[j].dist, s, u)) crossing.push_back(j);
  }

  auto classify_at = [&](std::size_t j) {
    return classify_cross(s, state.tangle(tau_id), state.tangle(rho_id), tau_id, rho_id,
                          state.pairs[j].dist, state.tangle(state.pairs[j].a),
                          state.tangle(state.pairs[j].b), state.pairs[j].a, state.pairs[j].b, F,
                          u);
  };

  std::vector<CrossOutcome> outcomes;
  outcomes.reserve(crossing.size());
  for (const std::size_t j : crossing) outcomes.push_back(classify_at(j));

  const auto first_of = [&](CrossOutcome::Kind kind) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (outcomes[i].kind == kind) return i;
    }
    return std::nullopt;
  };

  if (const auto i = first_of(CrossOutcome::Kind::ReplaceS)) {
    // Case (1): replace s itself, once.
    apply_replacement(state, k, outcomes[*i].replacement, state.pairs[crossing[*i]].dist, F, u);
  } else if (!first_of(CrossOutcome::Kind::Fake)) {
    // Case (2): every crossing t is replaceable; do so in pair order,
    // re-classifying before each replacement since the tangles evolve. A
    // failure mid-sequence surfaces as Fake; ReplaceS cannot newly appear.
    for (const std::size_t j : crossing) {
      const CrossOutcome out = classify_at(j);
      if (out.kind == CrossOutcome::Kind::ReplaceS) {
        fail(ErrorKind::Internal, "case (1) appeared during a case (2) sequence");
      }
      if (out.kind == CrossOutcome::Kind::Fake) {
        remove_fake(state, out.fake_id);
        state.step += 1;
        return;
      }
      apply_replacement(state, j, out.replacement, s, F, u);
    }
  } else {
    // Case (3): a fake tangle was found.
    remove_fake(state, outcomes[*first_of(CrossOutcome::Kind::Fake)].fake_id);
  }
  state.step += 1;
}

std::vector<long> quasi_key(const std::map<int, ExtendedTangle>& tangles) {
  std::size_t max_size = 0;
  for (const auto& [id, t] : tangles) max_size = std::max(max_size, t.elements().size());
  std::vector<long> key(tangles.empty() ? 0 : max_size + 1, 0);
  for (const auto& [id, t] : tangles) key[t.elements().size()] += 1;
  return key;
}

bool quasi_key_leq(const std::vector<long>& a, const std::vector<long>& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const long av = i < a.size() ? a[i] : 0;
    const long bv = i < b.size() ? b[i] : 0;
    if (av != bv) return av < bv;
  }
  return true;
}

ToTState make_initial_state(std::span<const ExtendedTangle> tangles, const Universe& u) {
  ToTState state;
  for (const ExtendedTangle& t : tangles) {
    state.tangles.emplace(state.next_tangle_id++, t);
  }
  for (int a = 0; a < state.next_tangle_id; ++a) {
    for (int b = a + 1; b < state.next_tangle_id; ++b) {
      const Separation dist = find_distinguisher(state.tangle(a), state.tangle(b), u);
      state.pairs.push_back({a, b, dist, state.next_pair_serial++});
    }
  }
  return state;
}

namespace {

std::vector<PartialOrientation> tangle_value_set(const std::map<int, ExtendedTangle>& tangles) {
  std::vector<PartialOrientation> values;
  for (const auto& [id, t] : tangles) values.push_back(t.elements());
  std::sort(values.begin(), values.end(), canonical_less);
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

long default_budget(int tangle_count, int split_count) {
  const long n = tangle_count + split_count;
  const long pairs = n * (n - 1) / 2;
  const long exponent = std::min<long>(30, pairs);
  return std::max<long>(16, 1L << exponent);
}

}  // namespace

ToTRunResult run_tot(ToTState initial, const ForbiddenOracle& F, const Universe& u,
                     const ToTOptions& opts) {
  // Input validation: full pair coverage, distinguishers in S that really
  // distinguish.
  std::set<std::pair<int, int>> seen;
  for (const TanglePair& p : initial.pairs) {
    if (!initial.tangles.count(p.a) || !initial.tangles.count(p.b) || p.a == p.b) {
      fail(ErrorKind::MalformedInstance, "pair references a missing tangle");
    }
    const std::pair<int, int> key{std::min(p.a, p.b), std::max(p.a, p.b)};
    if (!seen.insert(key).second) {
      fail(ErrorKind::MalformedInstance, "duplicate tangle pair");
    }
    if (!u.in_system(p.dist)) {
      fail(ErrorKind::MalformedInstance, "input distinguisher " + u.show(p.dist) + " outside S");
    }
    if (!distinguishes(p.dist, initial.tangle(p.a), initial.tangle(p.b), u).ok) {
      fail(ErrorKind::NotDistinguishing,
           u.show(p.dist) + " does not distinguish its input pair");
    }
  }
  const std::size_t ids = initial.tangles.size();
  if (seen.size() != ids * (ids - 1) / 2) {
    fail(ErrorKind::MalformedInstance, "input pairs do not cover all tangle pairs");
  }

  ToTRunResult result;
  const int initial_count = static_cast<int>(initial.tangles.size());
  for (const TanglePair& p : initial.pairs) {
    result.initial_pair_order.emplace(p.serial, u.order(p.dist));
  }

  ToTState& state = initial;
  while (min_cross_k(state, u)) {
    const long budget =
        opts.max_steps > 0 ? opts.max_steps : default_budget(initial_count, state.split_count);
    if (result.steps >= budget) {
      fail(ErrorKind::StepBudgetExceeded,
           "tree-of-tangles loop exceeded " + std::to_string(budget) + " steps");
    }
    const std::vector<long> key_before = quasi_key(state.tangles);
    const auto set_before = tangle_value_set(state.tangles);
    tot_step(state, F, u);
    const std::vector<long> key_after = quasi_key(state.tangles);
    if (!quasi_key_leq(key_after, key_before)) {
      fail(ErrorKind::Internal, "quasi-order key increased");
    }
    if (quasi_key_leq(key_before, key_after) && tangle_value_set(state.tangles) != set_before) {
      fail(ErrorKind::Internal, "equivalent tangle sets differ as sets");
    }
    result.key_trace.push_back(key_after);
    result.steps += 1;
  }

  result.split_count = state.split_count;
  result.nested = state.nested_set();
  result.state = std::move(state);
  return result;
}

ToTValidation validate_tot_output(const ToTRunResult& result, const ForbiddenOracle& F,
                                  const Universe& u, const ToTValidateOptions& opts) {
  ToTValidation report;
  const ToTState& state = result.state;

  const auto note = [&](const std::string& what) { report.violations.push_back(what); };

  // Nestedness of the final N.
  const auto nested = state.nested_set();
  for (std::size_t i = 0; i < nested.size(); ++i) {
    for (std::size_t j = i + 1; j < nested.size(); ++j) {
      if (!is_nested(nested[i], nested[j], u)) {
        note("final set not nested: " + u.show(nested[i]) + " crosses " + u.show(nested[j]));
      }
    }
  }

  // Every surviving pair is distinguished by its assigned separation, and
  // unsplit descendants respect the input order bound.
  for (const TanglePair& p : state.pairs) {
    if (!state.tangles.count(p.a) || !state.tangles.count(p.b)) {
      note("pair references a deleted tangle");
      continue;
    }
    if (!distinguishes(p.dist, state.tangle(p.a), state.tangle(p.b), u).ok) {
      note(u.show(p.dist) + " no longer distinguishes its pair");
    }
    const auto it = result.initial_pair_order.find(p.serial);
    if (it != result.initial_pair_order.end() && u.order(p.dist) > it->second) {
      note("distinguisher order grew for input pair serial " + std::to_string(p.serial));
    }
  }

  // Replacement events: order bounds and the fish-lemma trace property.
  for (const ToTEvent& e : state.events) {
    if (e.kind != ToTEvent::Kind::Replacement) continue;
    const ReplacementEvent& r = e.replacement;
    if (u.order(r.replacement) > std::max(u.order(r.replaced), u.order(r.crossing))) {
      note("replacement order exceeds max of the crossing pair");
    }
    if (u.order(r.replacement) > u.order(r.replaced)) {
      note("replacement order exceeds the replaced separation");
    }
    for (const Separation n : r.n_before) {
      if (is_nested(n, r.replaced, u) && is_nested(n, r.crossing, u) &&
          !is_nested(n, r.replacement, u)) {
        note("fish-lemma trace violated at " + u.show(n));
      }
    }
  }

  if (!opts.check_realness) return report;
  if (u.ground_size() > kBruteGroundCap) {
    note("realness check requires ground size <= " + std::to_string(kBruteGroundCap));
    return report;
  }

  Weight p_bound = 0;
  for (const Separation s : u.system()) p_bound = std::max(p_bound, u.order(s));
  const auto universe_tangles = brute_universe_tangles(F, u, p_bound);

  const auto is_real = [&](const PartialOrientation& tangle) {
    for (const PartialOrientation& omega : universe_tangles) {
      if (tangle.subset_of(omega)) return true;
    }
    return false;
  };

  // Every deleted tangle must actually be fake.
  for (const ToTEvent& e : state.events) {
    if (e.kind != ToTEvent::Kind::Fake) continue;
    const PartialOrientation deleted = PartialOrientation::unchecked(e.fake.elements);
    if (is_real(deleted)) {
      note("tangle " + std::to_string(e.fake.tangle_id) + " was deleted but is real");
    }
  }

  // Realness-completeness: every real maximal tangle of S appears among the
  // restrictions of the output tangles.
  std::vector<PartialOrientation> maximal = opts.maximal_in_s;
  if (maximal.empty()) maximal = brute_maximal(u.system(), F, u);
  for (const PartialOrientation& tau : maximal) {
    if (!is_real(tau)) continue;
    bool found = false;
    for (const auto& [id, t] : state.tangles) {
      if (t.base(u) == tau) {
        found = true;
        break;
      }
    }
    if (!found) note("real maximal tangle missing from the output restrictions");
  }
  return report;
}

}  // namespace tangles
