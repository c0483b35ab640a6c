#include <doctest.h>

#include "persist/errors.hpp"
#include "persist/phase_map.hpp"

using namespace persist;

namespace {

Params P(const char* a, const char* theta) { return Params::make(parse_rational(a), parse_rational(theta)); }

}  // namespace

TEST_CASE("Params rejects a <= -1") {
  CHECK_THROWS_AS(P("-1", "0"), Error);
  CHECK_THROWS_AS(P("-3/2", "1"), Error);
  try {
    P("-1", "1/2");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Domain);
  }
  CHECK_NOTHROW(P("-99/100", "5"));
}

TEST_CASE("canonical regions") {
  CHECK(classify(P("2", "1/2")).canonical == Region::Blue);
  CHECK(classify(P("3", "-1/2")).canonical == Region::Green);
  CHECK(classify(P("-1/2", "3")).canonical == Region::ZeroTail);
  const auto dual = classify(P("2", "3"));
  CHECK(dual.canonical == Region::DualPositive);
  REQUIRE(dual.dual_target);
  CHECK(*dual.dual_target == P("1/2", "1/3"));
  const auto neg = classify(P("3", "-4"));
  CHECK(neg.canonical == Region::DualNegative);
  CHECK(*neg.dual_target == P("3", "-1/4"));
  CHECK(classify(P("1/4", "-1/2")).canonical == Region::Yellow);
  CHECK(classify(P("-1/4", "1/2")).canonical == Region::Orange);
  CHECK(classify(P("-1/4", "2")).canonical == Region::GreyPiecewise);
  CHECK(classify(P("0", "2")).canonical == Region::GreyPiecewise);
  CHECK(classify(P("3", "1")).canonical == Region::ThetaOne);
  CHECK(classify(P("-1/4", "1/4")).canonical == Region::WhiteOne);
}

TEST_CASE("theta = 0 is blue or white") {
  CHECK(classify(P("2", "0")).canonical == Region::Blue);
  CHECK(classify(P("0", "0")).has(Region::Blue));
  CHECK(classify(P("-1/2", "0")).canonical == Region::WhiteOne);
}

TEST_CASE("trivial values") {
  CHECK(trivial_value(P("-1/4", "1/4"), 5) == Rational(1));
  CHECK(trivial_value(P("-1/2", "2"), 3) == Rational(0));
  CHECK(trivial_value(P("3", "1"), 4) == Rational(1, 120));
  CHECK(!trivial_value(P("1", "1/2"), 2));
}

TEST_CASE("region names round-trip") {
  for (Region r : {Region::WhiteOne, Region::ZeroTail, Region::ThetaOne, Region::Blue, Region::Green, Region::Yellow,
                   Region::Orange, Region::GreyPiecewise, Region::DualPositive, Region::DualNegative,
                   Region::DualFlip}) {
    CHECK(region_from_name(region_name(r)) == r);
  }
  CHECK(!region_from_name("Purple"));
}

TEST_CASE("flip partner") {
  CHECK(*flip_partner(P("-1/4", "2")) == P("-1/4", "1/2"));
  CHECK(*flip_partner(P("2", "-1/2")) == P("1/2", "-1/2"));
  CHECK(!flip_partner(P("-1/2", "-1/2")));
  CHECK(!flip_partner(P("1", "0")));
}

TEST_CASE("every grid point is covered and dualities resolve in one hop") {
  std::vector<Rational> as, thetas;
  for (int i = -19; i <= 80; ++i) as.push_back(ratio(i, 20));
  for (int i = -80; i <= 80; ++i) thetas.push_back(ratio(i, 16));
  for (const auto& a : as) {
    for (const auto& t : thetas) {
      const Params p{a, t};
      const auto ra = classify(p);
      CAPTURE(to_string(a));
      CAPTURE(to_string(t));
      REQUIRE(!ra.applicable.empty());
      CHECK(ra.has(ra.canonical));
      CHECK(ra.canonical != Region::DualFlip);
      CHECK(ra.applicable.front() == ra.canonical);
      if (is_duality(ra.canonical)) {
        REQUIRE(ra.dual_target);
        CHECK(!is_duality(classify(*ra.dual_target).canonical));
      } else {
        CHECK(!ra.dual_target);
      }
    }
  }
}
