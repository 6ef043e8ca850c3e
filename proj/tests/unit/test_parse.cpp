#include <doctest.h>

#include <stdexcept>

#include "posetcodes/parse.hpp"

using namespace posetcodes;

TEST_CASE("poset specs") {
  Poset h = parse_poset("hier:2,5");
  CHECK(h.size() == 5);
  CHECK(h.down(3) == 0b00111u);

  Poset covers = parse_poset("n=4; cover=1<2,3<4");
  CHECK(covers.down(2) == 0b0011u);
  CHECK(covers.down(4) == 0b1100u);

  Poset anti = parse_poset("n=3");
  CHECK(anti.down(2) == 0b010u);

  CHECK_THROWS_AS(parse_poset("hier:0,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poset("hier:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poset("n=4; cover=1<5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poset("n=4; cover=12"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poset("poset"), std::invalid_argument);
}

TEST_CASE("ideal specs close their generators") {
  Poset h = parse_poset("hier:2,5");
  IdealFamily fam = parse_ideal_family(h, "1,3,4");
  REQUIRE(fam.size() == 1);
  CHECK(fam.ideals()[0] == 0b01111u);

  IdealFamily two = parse_ideal_family(h, "1,3,4;2");
  REQUIRE(two.size() == 2);
  CHECK(two.ideals()[1] == 0b00010u);

  CHECK_THROWS_AS(parse_ideal_family(h, ""), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal_family(h, "1;;2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal_family(h, "6"), std::invalid_argument);
}

TEST_CASE("construction kinds") {
  CHECK(parse_kind("D") == CodeKind::DefiningSet);
  CHECK(parse_kind("f") == CodeKind::BooleanFunction);
  CHECK_THROWS_AS(parse_kind("g"), std::invalid_argument);
}
