#include "doctest.h"
#include "helmsens/sobolev.hpp"

using namespace helmsens;

TEST_CASE("half-integer construction and rendering") {
  CHECK(SobolevIndex::integer(3).str() == "3");
  CHECK(SobolevIndex::half(3).str() == "3/2");
  CHECK(SobolevIndex::half(-1).str() == "-1/2");
  CHECK(SobolevIndex::half(4).str() == "2");
  CHECK(SobolevIndex::infinity().str() == "inf");
}

TEST_CASE("parse round-trips str") {
  for (long long tw = -9; tw <= 9; ++tw) {
    const SobolevIndex s = SobolevIndex::half(tw);
    CHECK(SobolevIndex::parse(s.str()) == s);
  }
  CHECK(SobolevIndex::parse("inf") == SobolevIndex::infinity());
  CHECK_THROWS_AS(SobolevIndex::parse("2/3"), ParseError);
  CHECK_THROWS_AS(SobolevIndex::parse(""), ParseError);
}

TEST_CASE("arithmetic and ordering") {
  const SobolevIndex a = SobolevIndex::half(3);  // 3/2
  const SobolevIndex b = 2_idx;
  CHECK((a + b).twice() == 7);
  CHECK((b - a).twice() == 1);
  CHECK(a < b);
  CHECK(min(a, b) == a);
  CHECK(min(a, b, SobolevIndex::half(1)) == SobolevIndex::half(1));
  CHECK(a.as_double() == doctest::Approx(1.5));
  CHECK(min(a, SobolevIndex::infinity()) == a);
  CHECK(SobolevIndex::infinity() + b == SobolevIndex::infinity());
  CHECK(a.is_integer() == false);
  CHECK(b.is_integer());
}
