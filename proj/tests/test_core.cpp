#include <doctest.h>

#include <set>

#include "support/fixtures.hpp"
#include "tangles/core.hpp"
#include "tangles/universe.hpp"

using namespace tangles;
using tangles::testing::Rng;

namespace {

OrientedSep os(Mask left) { return {left}; }

}  // namespace

TEST_CASE("lexicographic mask order") {
  CHECK(lex_less(0b001, 0b010));       // {0} < {1}
  CHECK(lex_less(0b101, 0b010));       // {0,2} < {1}
  CHECK(lex_less(0b011, 0b101));       // {0,1} < {0,2}
  CHECK(lex_less(0b001, 0b011));       // {0} < {0,1}: prefix
  CHECK(lex_less(0, 0b001));           // {} < {0}
  CHECK_FALSE(lex_less(0b010, 0b101)); // {1} > {0,2}
  CHECK_FALSE(lex_less(0b001, 0b001));
}

TEST_CASE("separation canonicalization and involution") {
  const Universe u = testing::fix_k3();
  CHECK(u.separation_of(os(0b110)).canon == 0b001);  // {1,2} vs {0}
  CHECK(u.separation_of(os(0b001)).canon == 0b001);
  CHECK(u.separation_of(os(0b010)).canon == 0b101);  // {1} vs {0,2}
  CHECK(u.inverse(u.inverse(os(0b011))) == os(0b011));
  CHECK(u.inverse(os(0b001)) == os(0b110));
  CHECK(u.separation_of(u.inverse(os(0b001))) == u.separation_of(os(0b001)));
  // No degenerate separations in a power-set universe: the two sides always
  // differ.
  for (Mask m = 0; m <= u.full_mask(); ++m) CHECK(os(m) != u.inverse(os(m)));
}

TEST_CASE("consistency of pairs matches the pointing-away rule") {
  const Universe u = testing::fix_k3();
  // ({1,2},{0}) vs ({0,2},{1}): inverse of the first is ({0},..) <= ({0,2},..)
  CHECK_FALSE(is_consistent_pair(os(0b110), os(0b101), u));
  CHECK(is_consistent_pair(os(0b110), os(0b010), u));
  CHECK(is_consistent_pair(os(0b001), os(0b101), u));
  CHECK_THROWS_AS(is_consistent_pair(os(0b001), os(0b110), u), Error);
}

TEST_CASE("consistency of sets") {
  const Universe u = testing::fix_k3();
  CHECK(is_consistent(PartialOrientation{}, u));
  CHECK_FALSE(is_consistent(PartialOrientation::from({os(0b110), os(0b101)}, u), u));
  CHECK(is_consistent(PartialOrientation::from({os(0b110), os(0b010), os(0b100)}, u), u));
}

TEST_CASE("stars") {
  const Universe u = testing::fix_k3();
  CHECK(is_star(PartialOrientation{}, u));
  CHECK(is_star(PartialOrientation::from({os(0b001)}, u), u));
  CHECK(is_star(PartialOrientation::from({os(0b001), os(0b010)}, u), u));
  CHECK_FALSE(is_star(PartialOrientation::from({os(0b110), os(0b101)}, u), u));
}

TEST_CASE("nestedness") {
  const Universe u3 = testing::fix_k3();
  const Separation s1 = u3.separation_of(os(0b001));
  const Separation s2 = u3.separation_of(os(0b010));
  CHECK(is_nested(s1, s1, u3));
  CHECK(is_nested(s1, s2, u3));

  const Universe u4 = testing::fix_c4();
  const Separation d0 = u4.separation_of(os(0b0011));
  const Separation d1 = u4.separation_of(os(0b0110));
  CHECK_FALSE(is_nested(d0, d1, u4));
}

TEST_CASE("corners") {
  const Universe u = testing::fix_c4();
  const Separation d0 = u.separation_of(os(0b0011));
  const Separation d1 = u.separation_of(os(0b0110));
  const auto cs = corners(d0, d1, u);
  // join on left sides
  CHECK(u.join(os(0b0011), os(0b0110)) == os(0b0111));
  // corners of a separation with itself include the full ground set
  const auto self = corners(d0, d0, u);
  bool has_full = false;
  for (const OrientedSep c : self) has_full = has_full || c.left == u.full_mask();
  CHECK(has_full);
  // all four corners of the crossing pair have order 2 (edge cuts on the cycle)
  for (const OrientedSep c : cs) CHECK(u.order(c) == 2);
}

TEST_CASE("trivial orientations") {
  const Universe plain = testing::fix_k3();
  CHECK(trivial_orientations(plain.system(), plain).empty());

  const Universe single(GroundSet(testing::labels_upto(2)), WeightedGraph(2, {{0, 1, 1}}),
                        {0b01});
  CHECK(trivial_orientations(single.system(), single).empty());

  // Adding the degenerate class {}|V makes ({},V) trivial.
  const Universe with_empty(GroundSet(testing::labels_upto(3)),
                            WeightedGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}),
                            {0b001, 0b010, 0b100, 0b000});
  const auto trivials = trivial_orientations(with_empty.system(), with_empty);
  REQUIRE(trivials.size() == 1);
  CHECK(trivials[0] == os(0));
}

TEST_CASE("partial orientation construction guards") {
  const Universe u = testing::fix_k3();
  CHECK_THROWS_AS(PartialOrientation::from({os(0b001), os(0b110)}, u), Error);
  const PartialOrientation p = PartialOrientation::from({os(0b001), os(0b010)}, u);
  CHECK_THROWS_AS(p.with(os(0b110), u), Error);  // separation already oriented
  CHECK(p.with(os(0b100), u).size() == 3);
  // duplicates collapse
  CHECK(PartialOrientation::from({os(0b001), os(0b001)}, u).size() == 1);
}

TEST_CASE("algebraic laws hold exactly on random pairs") {
  const Universe fixtures[] = {testing::fix_k3(), testing::fix_p3(), testing::fix_c4(),
                               testing::fix_chain(), testing::fix_dual_edge()};
  int fixture_index = 0;
  for (const Universe& u : fixtures) {
    Rng rng(0xC0FFEE + static_cast<std::uint64_t>(fixture_index++));
    for (int i = 0; i < 1000; ++i) {
      const OrientedSep x = testing::random_oriented(rng, u);
      const OrientedSep y = testing::random_oriented(rng, u);
      // order reversal
      CHECK(u.leq(x, y) == u.leq(u.inverse(y), u.inverse(x)));
      // De Morgan
      CHECK(u.inverse(u.join(x, y)) == u.meet(u.inverse(x), u.inverse(y)));
      // order symmetry and nonnegativity
      CHECK(u.order(x) == u.order(u.inverse(x)));
      CHECK(u.order(x) >= 0);
      // submodularity
      CHECK(u.order(u.join(x, y)) + u.order(u.meet(x, y)) <= u.order(x) + u.order(y));
      // lattice laws
      CHECK(u.join(x, y) == u.join(y, x));
      CHECK(u.meet(x, y) == u.meet(y, x));
      CHECK(u.join(x, x) == x);
      CHECK(u.leq(x, u.join(x, y)));
      CHECK(u.leq(u.meet(x, y), x));
      // consistency is symmetric
      if (u.separation_of(x) != u.separation_of(y)) {
        CHECK(is_consistent_pair(x, y, u) == is_consistent_pair(y, x, u));
      }
      // the pair star law coincides with a single leq by order reversal
      if (u.separation_of(x) != u.separation_of(y)) {
        const PartialOrientation sigma = PartialOrientation::from({x, y}, u);
        CHECK(is_star(sigma, u) == u.leq(x, u.inverse(y)));
      }
    }
  }
}

TEST_CASE("fish lemma on random crossing pairs") {
  const Universe fixtures[] = {testing::fix_c4(), testing::fix_chain()};
  int fixture_index = 0;
  for (const Universe& u : fixtures) {
    Rng rng(0xF15C + static_cast<std::uint64_t>(fixture_index++));
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
      const Separation s = u.separation_of(testing::random_oriented(rng, u));
      const Separation t = u.separation_of(testing::random_oriented(rng, u));
      const Separation r = u.separation_of(testing::random_oriented(rng, u));
      if (is_nested(s, t, u)) continue;
      if (!is_nested(r, s, u) || !is_nested(r, t, u)) continue;
      ++checked;
      for (const OrientedSep c : corners(s, t, u)) {
        CHECK(is_nested(r, u.separation_of(c), u));
      }
    }
    CHECK(checked > 0);  // ground sets of size >= 4 do have crossing pairs
  }
}
