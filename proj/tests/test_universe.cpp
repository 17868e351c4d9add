#include <doctest.h>

#include "support/fixtures.hpp"
#include "tangles/universe.hpp"

using namespace tangles;

TEST_CASE("bipartition involution and lattice basics") {
  const Universe u = testing::fix_k3();
  CHECK(u.inverse(OrientedSep{0b001}) == OrientedSep{0b110});
  CHECK(u.inverse(OrientedSep{0}) == OrientedSep{0b111});
  CHECK(u.leq(OrientedSep{0b001}, OrientedSep{0b101}));
  CHECK_FALSE(u.leq(OrientedSep{0b001}, OrientedSep{0b010}));
  CHECK(u.leq(OrientedSep{0b001}, OrientedSep{0b001}));
  CHECK(u.join(OrientedSep{0b001}, OrientedSep{0b010}) == OrientedSep{0b011});
  CHECK(u.meet(OrientedSep{0b001}, OrientedSep{0b010}) == OrientedSep{0});
  CHECK(u.join(OrientedSep{0b001}, u.inverse(OrientedSep{0b001})) == OrientedSep{0b111});
}

TEST_CASE("cut orders") {
  const Universe k3 = testing::fix_k3();
  CHECK(k3.order(OrientedSep{0b001}) == 2);
  CHECK(k3.order(OrientedSep{0}) == 0);
  CHECK(k3.order(OrientedSep{0b111}) == 0);

  const Universe c4 = testing::fix_c4();
  CHECK(c4.order(OrientedSep{0b0011}) == 2);
  CHECK(c4.order(OrientedSep{0b0101}) == 4);  // opposite corners of the cycle

  const Universe p3 = testing::fix_p3();
  CHECK(p3.order(OrientedSep{0b001}) == 1);
  CHECK(p3.order(OrientedSep{0b010}) == 2);
}

TEST_CASE("system bookkeeping and construction errors") {
  const Universe u = testing::fix_k3();
  CHECK(u.system_size() == 3);
  CHECK(u.in_system(u.separation_of(OrientedSep{0b110})));
  // {0,1}|{2} is s3 itself in canonical form; only {}|V lies outside S here
  CHECK(u.in_system(u.separation_of(OrientedSep{0b011})));
  CHECK_FALSE(u.in_system(u.separation_of(OrientedSep{0b000})));
  CHECK(u.system_index(u.separation_of(OrientedSep{0b010})) == 1);

  // duplicate classes are rejected, even via the opposite orientation
  CHECK_THROWS_AS(Universe(GroundSet(testing::labels_upto(3)),
                           WeightedGraph(3, {{0, 1, 1}}), {0b001, 0b110}),
                  Error);
  // unknown elements in a separation
  CHECK_THROWS_AS(Universe(GroundSet(testing::labels_upto(2)),
                           WeightedGraph(2, {{0, 1, 1}}), {0b100}),
                  Error);
}

TEST_CASE("universe has 2^n oriented bipartitions closed under the operations") {
  const Universe u = testing::fix_c4();
  int count = 0;
  for (Mask m = 0; m <= u.full_mask(); ++m) {
    ++count;
    // closure is structural: inverse/join/meet stay below the full mask
    CHECK((u.inverse(OrientedSep{m}).left & ~u.full_mask()) == 0);
  }
  CHECK(count == 16);
}

TEST_CASE("exact submodularity over all pairs of every fixture") {
  const Universe fixtures[] = {testing::fix_k3(), testing::fix_p3(), testing::fix_c4(),
                               testing::fix_chain(), testing::fix_dual_edge()};
  for (const Universe& u : fixtures) {
    for (Mask a = 0; a <= u.full_mask(); ++a) {
      for (Mask b = 0; b <= u.full_mask(); ++b) {
        const OrientedSep x{a};
        const OrientedSep y{b};
        CHECK(u.order(u.join(x, y)) + u.order(u.meet(x, y)) <= u.order(x) + u.order(y));
        CHECK(u.leq(x, y) == u.leq(u.inverse(y), u.inverse(x)));
      }
    }
  }
}

TEST_CASE("display helpers") {
  const Universe u = testing::fix_k3();
  CHECK(u.show(OrientedSep{0b001}) == "({0},{1,2})");
  CHECK(u.show(u.separation_of(OrientedSep{0b110})) == "{0}|{1,2}");
  CHECK(u.show_side(0) == "{}");
}
