#include "tangles/forbidden.hpp"

#include <algorithm>
#include <functional>

namespace tangles {

namespace {

// Calls fn on every subset of elems with at most cap elements, smallest
// first; stops early when fn returns true.
bool any_subset_upto(std::span<const OrientedSep> elems, std::size_t cap,
                     const std::function<bool(std::span<const OrientedSep>)>& fn) {
  std::vector<OrientedSep> chosen;
  if (fn(chosen)) return true;
  std::function<bool(std::size_t, std::size_t)> pick = [&](std::size_t start,
                                                           std::size_t left) -> bool {
    if (left == 0) return fn(chosen);
    for (std::size_t i = start; i + left <= elems.size(); ++i) {
      chosen.push_back(elems[i]);
      if (pick(i + 1, left - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t size = 1; size <= cap && size <= elems.size(); ++size) {
    chosen.clear();
    if (pick(0, size)) return true;
  }
  return false;
}

}  // namespace

bool ForbiddenOracle::blocks_addition(const PartialOrientation& tau, OrientedSep x,
                                      const Universe&) const {
  const std::optional<int> m = max_member_size();
  const std::size_t cap = m ? static_cast<std::size_t>(std::max(0, *m - 1)) : tau.size();
  std::vector<OrientedSep> candidate;
  return any_subset_upto(tau.elements(), cap, [&](std::span<const OrientedSep> subset) {
    candidate.assign(subset.begin(), subset.end());
    candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), x, LexLess{}), x);
    return is_forbidden_sorted(candidate);
  });
}

bool ForbiddenOracle::has_forbidden_subset(const PartialOrientation& p, const Universe&) const {
  const std::optional<int> m = max_member_size();
  const std::size_t cap = m ? static_cast<std::size_t>(std::max(0, *m)) : p.size();
  return any_subset_upto(p.elements(), cap, [&](std::span<const OrientedSep> subset) {
    return is_forbidden_sorted(subset);
  });
}

bool query_forbidden(const ForbiddenOracle& oracle, std::vector<OrientedSep> raw,
                     const Universe& u) {
  return oracle.is_forbidden(PartialOrientation::from(std::move(raw), u));
}

CoverOracle::CoverOracle(const Universe& u, int max_member_size)
    : full_(u.full_mask()), max_size_(max_member_size) {
  if (max_member_size < 1) fail(ErrorKind::MalformedInstance, "cover oracle needs max size >= 1");
}

bool CoverOracle::is_forbidden_sorted(std::span<const OrientedSep> sigma) const {
  if (sigma.size() > static_cast<std::size_t>(max_size_)) return false;
  Mask covered = 0;
  for (const OrientedSep x : sigma) covered |= x.left;
  return covered == full_;
}

ExplicitForbidden::ExplicitForbidden(std::vector<PartialOrientation> members)
    : members_(std::move(members)) {}

std::optional<int> ExplicitForbidden::max_member_size() const {
  std::size_t m = 0;
  for (const PartialOrientation& f : members_) m = std::max(m, f.size());
  return static_cast<int>(m);
}

bool ExplicitForbidden::is_forbidden_sorted(std::span<const OrientedSep> sigma) const {
  for (const PartialOrientation& f : members_) {
    if (f.size() == sigma.size() &&
        std::equal(f.begin(), f.end(), sigma.begin(), sigma.end())) {
      return true;
    }
  }
  return false;
}

bool ExplicitForbidden::blocks_addition(const PartialOrientation& tau, OrientedSep x,
                                        const Universe&) const {
  for (const PartialOrientation& f : members_) {
    if (!f.contains(x)) continue;
    bool rest_in_tau = true;
    for (const OrientedSep e : f) {
      if (e != x && !tau.contains(e)) {
        rest_in_tau = false;
        break;
      }
    }
    if (rest_in_tau) return true;
  }
  return false;
}

bool ExplicitForbidden::has_forbidden_subset(const PartialOrientation& p, const Universe&) const {
  for (const PartialOrientation& f : members_) {
    if (f.subset_of(p)) return true;
  }
  return false;
}

bool stars_only(const ExplicitForbidden& F, const Universe& u) {
  for (const PartialOrientation& f : F.members()) {
    if (!is_star(f, u)) return false;
  }
  return true;
}

bool is_standard(const ExplicitForbidden& F, std::span<const Separation> S, const Universe& u) {
  for (const OrientedSep fr : trivial_orientations(S, u)) {
    const PartialOrientation singleton = PartialOrientation::unchecked({u.inverse(fr)});
    if (!F.is_forbidden(singleton)) return false;
  }
  return true;
}

}  // namespace tangles
