#include "tangles/core.hpp"

#include <algorithm>
#include <bit>

#include "tangles/universe.hpp"

namespace tangles {

bool lex_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    const int i = std::countr_zero(a);
    const int j = std::countr_zero(b);
    if (i != j) return i < j;
    a &= a - 1;
    b &= b - 1;
  }
  // A proper prefix compares smaller; in particular {} < anything nonempty.
  return a == 0 && b != 0;
}

PartialOrientation PartialOrientation::from(std::vector<OrientedSep> elems, const Universe& u) {
  std::sort(elems.begin(), elems.end(), LexLess{});
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  for (const OrientedSep x : elems) {
    const OrientedSep inv = u.inverse(x);
    if (std::find(elems.begin(), elems.end(), inv) != elems.end()) {
      fail(ErrorKind::NonAntisymmetricQuery,
           "set contains both orientations of " + u.show(u.separation_of(x)));
    }
  }
  PartialOrientation p;
  p.elems_ = std::move(elems);
  return p;
}

PartialOrientation PartialOrientation::unchecked(std::vector<OrientedSep> sorted) {
  PartialOrientation p;
  p.elems_ = std::move(sorted);
  return p;
}

bool PartialOrientation::contains(OrientedSep x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x, LexLess{});
}

bool PartialOrientation::orients(Separation s, const Universe& u) const {
  return orientation_of(s, u).has_value();
}

std::optional<OrientedSep> PartialOrientation::orientation_of(Separation s, const Universe& u) const {
  const OrientedSep fwd = u.canonical_orientation(s);
  if (contains(fwd)) return fwd;
  const OrientedSep bwd = u.inverse(fwd);
  if (contains(bwd)) return bwd;
  return std::nullopt;
}

PartialOrientation PartialOrientation::with(OrientedSep x, const Universe& u) const {
  if (orients(u.separation_of(x), u)) {
    fail(ErrorKind::AlreadyOriented, u.show(u.separation_of(x)) + " is already oriented");
  }
  std::vector<OrientedSep> next = elems_;
  next.insert(std::upper_bound(next.begin(), next.end(), x, LexLess{}), x);
  return unchecked(std::move(next));
}

bool PartialOrientation::subset_of(const PartialOrientation& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end(),
                       LexLess{});
}

bool canonical_less(const PartialOrientation& a, const PartialOrientation& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LexLess{});
}

bool is_consistent_pair(OrientedSep x, OrientedSep y, const Universe& u) {
  if (u.separation_of(x) == u.separation_of(y)) {
    fail(ErrorKind::SameUnderlyingSeparation, "pair shares the separation " + u.show(u.separation_of(x)));
  }
  return !u.leq(u.inverse(x), y);
}

bool is_consistent(const PartialOrientation& p, const Universe& u) {
  const auto& e = p.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (!is_consistent_pair(e[i], e[j], u)) return false;
    }
  }
  return true;
}

bool is_star(const PartialOrientation& sigma, const Universe& u) {
  const auto& e = sigma.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j) continue;
      if (!u.leq(e[i], u.inverse(e[j]))) return false;
    }
  }
  return true;
}

bool is_nested(Separation s, Separation t, const Universe& u) {
  const OrientedSep fs = u.canonical_orientation(s);
  const OrientedSep bs = u.inverse(fs);
  const OrientedSep ft = u.canonical_orientation(t);
  const OrientedSep bt = u.inverse(ft);
  return u.leq(fs, ft) || u.leq(fs, bt) || u.leq(bs, ft) || u.leq(bs, bt);
}

std::array<OrientedSep, 4> corners(Separation s, Separation t, const Universe& u) {
  const OrientedSep fs = u.canonical_orientation(s);
  const OrientedSep bs = u.inverse(fs);
  const OrientedSep ft = u.canonical_orientation(t);
  const OrientedSep bt = u.inverse(ft);
  return {u.join(fs, ft), u.join(fs, bt), u.join(bs, ft), u.join(bs, bt)};
}

std::vector<OrientedSep> trivial_orientations(std::span<const Separation> S, const Universe& u) {
  std::vector<OrientedSep> result;
  for (const Separation r : S) {
    for (const OrientedSep fr : {u.canonical_orientation(r), u.inverse(u.canonical_orientation(r))}) {
      bool trivial = false;
      for (const Separation s : S) {
        if (s == r) continue;
        const OrientedSep fs = u.canonical_orientation(s);
        // Distinct separations with fr <= fs are automatically strict.
        if (u.leq(fr, fs) && u.leq(fr, u.inverse(fs))) {
          trivial = true;
          break;
        }
      }
      if (trivial) result.push_back(fr);
    }
  }
  std::sort(result.begin(), result.end(), LexLess{});
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

}  // namespace tangles
