#include <doctest.h>

#include "entgeo/coordinates.hpp"
#include "entgeo/dist.hpp"
#include "entgeo/errors.hpp"
#include "entgeo/grid.hpp"
#include "entgeo/order.hpp"

using namespace entgeo;

TEST_CASE("coordinates_of worked example") {
  const CoordSet c = coordinates_of(Dist::parse("1/2,1/3,1/6"));
  REQUIRE(c.size() == 2);
  CHECK(c[0].dist == Dist::parse("3/7,2/7,2/7"));
  CHECK(c[0].axis == 0b001);
  CHECK(c[1].dist == Dist::parse("2/5,2/5,1/5"));
  CHECK(c[1].axis == 0b011);
}

TEST_CASE("coordinates_of degenerate cases") {
  CHECK(coordinates_of(Dist::parse("1/3,1/3,1/3")).empty());
  const CoordSet self = coordinates_of(Dist::parse("1/2,1/2,0"));
  REQUIRE(self.size() == 1);
  CHECK(self[0].dist == Dist::parse("1/2,1/2,0"));
  const CoordSet pure = coordinates_of(Dist::parse("1,0,0"));
  REQUIRE(pure.size() == 1);
  CHECK(pure[0].dist == Dist::parse("1,0,0"));
}

TEST_CASE("sup_coordinates inverts coordinates_of") {
  CHECK(sup_coordinates(3, coordinates_of(Dist::parse("1/2,1/3,1/6"))) ==
        Dist::parse("1/2,1/3,1/6"));
  CHECK(sup_coordinates(3, {}) == Dist::parse("1/3,1/3,1/3"));
  CHECK(sup_coordinates(3, coordinates_of(Dist::parse("1/2,1/2,0"))) ==
        Dist::parse("1/2,1/2,0"));
  for (auto [n, den] : {std::pair<std::size_t, unsigned>{3, 6}, {4, 4}})
    for (const Dist& x : simplex_grid(n, den))
      CHECK(sup_coordinates(n, coordinates_of(x)) == x);
}

TEST_CASE("is_valid_coord_set") {
  CHECK(is_valid_coord_set(3, coordinates_of(Dist::parse("1/2,1/3,1/6"))));
  // two coordinates on the same axis
  CoordSet same = {{Dist::parse("1/2,1/4,1/4"), 0b001},
                   {Dist::parse("3/5,1/5,1/5"), 0b001}};
  CHECK_FALSE(is_valid_coord_set(3, same));
  // a single irreducible is a valid singleton
  CoordSet irr = {{Dist::parse("1/2,1/2,0"), 0b011}};
  CHECK(is_valid_coord_set(3, irr));
  // an irreducible anywhere but last is invalid
  CoordSet early = {{Dist::parse("1,0,0"), 0b001},
                    {Dist::parse("2/5,2/5,1/5"), 0b011}};
  CHECK_FALSE(is_valid_coord_set(3, early));
  CHECK_THROWS_AS(sup_coordinates(3, same), InvalidCoordSet);
}

TEST_CASE("irreducibles") {
  const auto two = irreducibles(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].dist == Dist::parse("1,0"));
  CHECK(two[1].dist == Dist::parse("0,1"));

  const auto three = irreducibles(3);
  CHECK(three.size() == 6);
  std::size_t pure = 0, edges = 0;
  for (const Coordinate& c : three)
    (is_maximal(c.dist) ? pure : edges)++;
  CHECK(pure == 3);
  CHECK(edges == 3);

  CHECK(irreducibles(4).size() == 14);
  CHECK_THROWS_AS(irreducibles(1), DimensionError);
}

TEST_CASE("downset_is_chain") {
  const auto grid = simplex_grid(3, 6);
  // Coordinates with a nonzero binary spectrum (and the bottom) always have
  // chain downsets.
  CHECK(downset_is_chain(Dist::parse("1/3,1/3,1/3"), grid));
  CHECK(downset_is_chain(Dist::parse("1/2,1/4,1/4"), grid));
  // (2/3,1/3,0) has a three-value spectrum; once the witnesses below it are
  // on the grid, its downset is not a chain.
  CHECK_FALSE(downset_is_chain(Dist::parse("2/3,1/3,0"), grid));
  CHECK_FALSE(leq(Dist::parse("1/2,1/3,1/6"), Dist::parse("1/2,1/2,0")));
  CHECK_FALSE(leq(Dist::parse("1/2,1/2,0"), Dist::parse("1/2,1/3,1/6")));
  CHECK(leq(Dist::parse("1/2,1/3,1/6"), Dist::parse("2/3,1/3,0")));
  CHECK(leq(Dist::parse("1/2,1/2,0"), Dist::parse("2/3,1/3,0")));
  // A pure state has a binary spectrum yet a non-chain downset for n >= 3,
  // so the chain property characterizes only the nonzero-spectrum coordinates.
  CHECK_FALSE(downset_is_chain(Dist::parse("0,0,1"), grid));
  // The denominator-6 grid misses the witnesses below (1/2,1/3,1/6); a grid
  // containing them exposes the non-chain downset.
  const Dist x = Dist::parse("1/2,1/3,1/6");
  CHECK(downset_is_chain(x, grid));
  const std::vector<Dist> witness_grid = {
      Dist::parse("1/3,1/3,1/3"), Dist::parse("3/7,2/7,2/7"),
      Dist::parse("2/5,2/5,1/5"), x};
  CHECK_FALSE(downset_is_chain(x, witness_grid));
  // vacuous case: bottom and the pure states only
  const std::vector<Dist> sparse = {Dist::parse("1/3,1/3,1/3"),
                                    Dist::parse("1,0,0"),
                                    Dist::parse("0,1,0"),
                                    Dist::parse("0,0,1")};
  for (const Dist& s : sparse) CHECK(downset_is_chain(s, sparse));
}

TEST_CASE("build_automorphism relabeling") {
  const auto grid = simplex_grid(3, 6);
  std::vector<AxisGauge> ident;
  for (const Coordinate& irr : irreducibles(3))
    ident.push_back({irr.axis, {}});

  const auto id_map = build_automorphism(Perm::identity(3), ident);
  for (const Dist& x : grid) CHECK(id_map(x) == x);

  const auto swap12 = build_automorphism(Perm({1, 0, 2}), ident);
  CHECK(swap12(Dist::parse("1/2,1/3,1/6")) == Dist::parse("1/3,1/2,1/6"));
  for (const Dist& x : grid)
    for (const Dist& y : grid)
      CHECK(leq(x, y) == leq(swap12(x), swap12(y)));
}

TEST_CASE("nontrivial gauge moves exactly the states on its axis") {
  // Non-uniform axis grid on the first axis of the two-point simplex: the
  // gauge exchanges nothing on other axes and fixes the irreducible.
  std::vector<AxisGauge> gauges = {{0b01, {{Rat(3, 5), Rat(2, 3)},
                                           {Rat(3, 4), Rat(4, 5)},
                                           {Rat(1), Rat(1)}}},
                                   {0b10, {}}};
  const auto h = build_automorphism(Perm::identity(2), gauges);
  CHECK(h(Dist::parse("1/2,1/2")) == Dist::parse("1/2,1/2"));
  CHECK(h(Dist::parse("3/5,2/5")) == Dist::parse("2/3,1/3"));
  CHECK(h(Dist::parse("3/4,1/4")) == Dist::parse("4/5,1/5"));
  CHECK(h(Dist::parse("1,0")) == Dist::parse("1,0"));
  CHECK(h(Dist::parse("2/5,3/5")) == Dist::parse("2/5,3/5"));

  // gauge values must stay in the axis range (1/n, 1/s]
  std::vector<AxisGauge> bad = {{0b01, {{Rat(3, 5), Rat(1, 3)}}}, {0b10, {}}};
  CHECK_THROWS_AS(build_automorphism(Perm::identity(2), bad),
                  GaugeDomainError);
  // a gauge must be order-preserving on its axis chain
  std::vector<AxisGauge> cross = {
      {0b01, {{Rat(3, 5), Rat(4, 5)}, {Rat(3, 4), Rat(2, 3)}}}, {0b10, {}}};
  CHECK_THROWS_AS(build_automorphism(Perm::identity(2), cross),
                  GaugeDomainError);
}

TEST_CASE("entropy rigidity on grids") {
  CHECK(entropy_rigidity_check(2, simplex_grid(2, 4)));
  CHECK(entropy_rigidity_check(3, simplex_grid(3, 6)));
  const std::vector<Dist> sparse = {Dist::parse("1/3,1/3,1/3"),
                                    Dist::parse("1,0,0"),
                                    Dist::parse("0,1,0"),
                                    Dist::parse("0,0,1")};
  CHECK(entropy_rigidity_check(3, sparse));
}
