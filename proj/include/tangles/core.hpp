#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tangles/errors.hpp"

namespace tangles {

class Universe;

// Left side of an oriented bipartition, one bit per ground-set element.
using Mask = std::uint32_t;
using Weight = std::int64_t;

// One orientation of a separation: the pair (left, complement), read as
// pointing toward the complement.
struct OrientedSep {
  Mask left = 0;
  friend constexpr auto operator<=>(OrientedSep, OrientedSep) = default;
};

// An unoriented separation, identified by its canonical orientation: the one
// whose left side is lexicographically smaller as a sorted index list.
struct Separation {
  Mask canon = 0;
  friend constexpr auto operator<=>(Separation, Separation) = default;
};

// Compares masks as increasing index lists, so {0,2} < {1} and {} < {0}.
bool lex_less(Mask a, Mask b);

struct LexLess {
  bool operator()(OrientedSep a, OrientedSep b) const { return lex_less(a.left, b.left); }
  bool operator()(Separation a, Separation b) const { return lex_less(a.canon, b.canon); }
};

// Antisymmetric set of oriented separations: never both orientations of the
// same underlying separation. Elements are kept in lexicographic order.
class PartialOrientation {
 public:
  PartialOrientation() = default;

  // Deduplicates, sorts, and validates antisymmetry.
  static PartialOrientation from(std::vector<OrientedSep> elems, const Universe& u);
  // Caller guarantees sorted-unique-antisymmetric input.
  static PartialOrientation unchecked(std::vector<OrientedSep> sorted);

  bool contains(OrientedSep x) const;
  bool orients(Separation s, const Universe& u) const;
  std::optional<OrientedSep> orientation_of(Separation s, const Universe& u) const;

  // Copy with x inserted; throws AlreadyOriented if x's separation is oriented.
  PartialOrientation with(OrientedSep x, const Universe& u) const;

  bool subset_of(const PartialOrientation& other) const;

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  const std::vector<OrientedSep>& elements() const { return elems_; }

  friend bool operator==(const PartialOrientation&, const PartialOrientation&) = default;

 private:
  std::vector<OrientedSep> elems_;
};

// Total order for deterministic collections of orientations: by size, then
// elementwise lexicographic.
bool canonical_less(const PartialOrientation& a, const PartialOrientation& b);

// A pair {x,y} with distinct underlying separations is inconsistent iff
// inverse(x) <= y (the two point away from each other). Symmetric by
// order reversal. Throws SameUnderlyingSeparation.
bool is_consistent_pair(OrientedSep x, OrientedSep y, const Universe& u);

// True iff every pair of elements with distinct separations is consistent.
bool is_consistent(const PartialOrientation& p, const Universe& u);

// Star law: x <= inverse(y) for all distinct elements x, y.
bool is_star(const PartialOrientation& sigma, const Universe& u);

// Nested iff some orientations are <=-comparable; crossing otherwise.
bool is_nested(Separation s, Separation t, const Universe& u);
inline bool crosses_sep(Separation s, Separation t, const Universe& u) { return !is_nested(s, t, u); }

// The four corner separations of s and t, for canonical orientations fs, ft:
// join(fs,ft), join(fs,~ft), join(~fs,ft), join(~fs,~ft).
std::array<OrientedSep, 4> corners(Separation s, Separation t, const Universe& u);

// All orientations fr of members of S such that fr < fs and fr < ~fs strictly
// for some other s in S.
std::vector<OrientedSep> trivial_orientations(std::span<const Separation> S, const Universe& u);

}  // namespace tangles
