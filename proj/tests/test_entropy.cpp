#include <doctest.h>

#include <cmath>
#include <numbers>

#include "entgeo/dist.hpp"
#include "entgeo/entropy.hpp"
#include "entgeo/errors.hpp"
#include "entgeo/grid.hpp"
#include "entgeo/order.hpp"

using namespace entgeo;

TEST_CASE("shannon values") {
  CHECK(shannon(Dist::parse("1,0")).value == doctest::Approx(0.0));
  CHECK(shannon(Dist::parse("1/2,1/2")).value == doctest::Approx(1.0));
  CHECK(shannon(Dist::parse("1/2,1/4,1/4")).value == doctest::Approx(1.5));
  CHECK(shannon(Dist::parse("1/2,1/2"), std::numbers::e).value ==
        doctest::Approx(std::log(2.0)));
  CHECK(shannon(Dist::parse("1/4,1/4,1/4,1/4"), 2.0, true).value ==
        doctest::Approx(1.0));
  CHECK(shannon(bottom(3), 3.0).value == doctest::Approx(1.0));
}

TEST_CASE("shannon is permutation symmetric") {
  for (const Dist& x : simplex_grid(3, 6))
    for (const Perm& tau : all_perms(3))
      CHECK(shannon(apply(x, tau)).value ==
            doctest::Approx(shannon(x).value).epsilon(kEntropyTol));
}

TEST_CASE("mix is exact") {
  CHECK(mix(Dist::parse("1/2,1/2"), Dist::parse("1,0"), Rat(1, 2)) ==
        Dist::parse("3/4,1/4"));
  CHECK(mix(Dist::parse("1/2,1/2"), Dist::parse("1,0"), Rat(0)) ==
        Dist::parse("1/2,1/2"));
  CHECK(mix(Dist::parse("1/2,1/2"), Dist::parse("1,0"), Rat(1)) ==
        Dist::parse("1,0"));
}

TEST_CASE("check_antitone") {
  CHECK(check_antitone(Dist::parse("1/2,1/2"), Dist::parse("1,0")));
  CHECK(check_antitone(Dist::parse("1/2,1/4,1/4"), Dist::parse("3/4,1/8,1/8")));
  // incomparable: vacuously true
  CHECK(check_antitone(Dist::parse("3/5,3/10,1/10"),
                       Dist::parse("1/10,3/10,3/5")));
  for (const Dist& x : simplex_grid(3, 6))
    for (const Dist& y : simplex_grid(3, 6)) {
      CHECK(check_antitone(x, y));
      if (leq(x, y) && x != y)
        CHECK(shannon(x).value > shannon(y).value + 1e-9);
    }
}

TEST_CASE("mixing_law_check") {
  const Dist x = Dist::parse("1/2,1/2");
  const Dist y = Dist::parse("1,0");
  CHECK(mixing_law_check(x, y, Rat(1, 2)));
  CHECK(mixing_law_check(x, y, Rat(0)));
  CHECK(mixing_law_check(x, y, Rat(1)));
  CHECK_THROWS_AS(mixing_law_check(Dist::parse("3/5,3/10,1/10"),
                                   Dist::parse("1/10,3/10,3/5"), Rat(1, 2)),
                  PreconditionError);

  const auto grid = simplex_grid(2, 8);
  for (const Dist& a : grid)
    for (const Dist& b : grid)
      if (leq(a, b))
        for (int num = 0; num <= 4; ++num)
          CHECK(mixing_law_check(a, b, Rat(num, 4)));
}

TEST_CASE("strictly_increasing_on_axis") {
  CHECK(strictly_increasing_on_axis(
      {Dist::parse("1/2,1/2"), Dist::parse("3/4,1/4"), Dist::parse("1,0")}));
  CHECK(strictly_increasing_on_axis({Dist::parse("1/2,1/2")}));
  CHECK_THROWS_AS(strictly_increasing_on_axis(
                      {Dist::parse("1,0"), Dist::parse("1/2,1/2")}),
                  NotAChainError);
}
