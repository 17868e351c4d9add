#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tangles/core.hpp"
#include "tangles/universe.hpp"

namespace tangles {

// Membership test for the forbidden family F over antisymmetric sets of
// oriented separations. Oracles are pure: equal queries give equal answers.
// Honest bound: with max_member_size() == m, is_forbidden returns false for
// every set larger than m.
class ForbiddenOracle {
 public:
  virtual ~ForbiddenOracle() = default;

  virtual std::optional<int> max_member_size() const = 0;

  // sigma must be sorted (LexLess), duplicate-free and antisymmetric.
  virtual bool is_forbidden_sorted(std::span<const OrientedSep> sigma) const = 0;

  bool is_forbidden(const PartialOrientation& sigma) const {
    return is_forbidden_sorted(sigma.elements());
  }

  // True iff some subset sigma of tau with |sigma| <= m-1 makes
  // sigma + {x} forbidden. Unbounded oracles scan every subset.
  virtual bool blocks_addition(const PartialOrientation& tau, OrientedSep x,
                               const Universe& u) const;

  // Full F-avoidance check: true iff some subset of p (any size up to the
  // member bound) is forbidden.
  virtual bool has_forbidden_subset(const PartialOrientation& p, const Universe& u) const;
};

// Validates the raw query set (antisymmetry) before asking the oracle.
bool query_forbidden(const ForbiddenOracle& oracle, std::vector<OrientedSep> raw,
                     const Universe& u);

// The standard tangle-style family: a set is forbidden iff it has at most
// max_member_size elements and the union of its left sides is the whole
// ground set.
class CoverOracle final : public ForbiddenOracle {
 public:
  CoverOracle(const Universe& u, int max_member_size = 3);

  std::optional<int> max_member_size() const override { return max_size_; }
  bool is_forbidden_sorted(std::span<const OrientedSep> sigma) const override;

 private:
  Mask full_ = 0;
  int max_size_ = 3;
};

// F given as an explicit list of member sets, each antisymmetric.
class ExplicitForbidden final : public ForbiddenOracle {
 public:
  explicit ExplicitForbidden(std::vector<PartialOrientation> members);

  const std::vector<PartialOrientation>& members() const { return members_; }

  std::optional<int> max_member_size() const override;
  bool is_forbidden_sorted(std::span<const OrientedSep> sigma) const override;
  bool blocks_addition(const PartialOrientation& tau, OrientedSep x,
                       const Universe& u) const override;
  bool has_forbidden_subset(const PartialOrientation& p, const Universe& u) const override;

 private:
  std::vector<PartialOrientation> members_;
};

// True iff every member of F passes is_star.
bool stars_only(const ExplicitForbidden& F, const Universe& u);

// Standard for S: F contains {inverse(r)} for every trivial orientation r of S.
bool is_standard(const ExplicitForbidden& F, std::span<const Separation> S, const Universe& u);

}  // namespace tangles
