#include "patstat/fraction.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace patstat;

TEST_CASE("fractions reduce and compare exactly") {
  CHECK(Fraction(1, 4) + Fraction(3, 4) == Fraction(1));
  CHECK(Fraction(2, 4) == Fraction(1, 2));
  CHECK(Fraction(1, 3) + Fraction(1, 3) + Fraction(1, 3) == Fraction(1));
  CHECK(Fraction(1, 3) < Fraction(1, 2));
  CHECK(Fraction(609) + Fraction(1, 2) == Fraction(1219, 2));
  CHECK_THROWS_AS(Fraction(1, 0), std::invalid_argument);
}

TEST_CASE("accumulation never drifts") {
  Fraction sum;
  for (int i = 0; i < 700; ++i) sum += Fraction(1, 7);
  CHECK(sum == Fraction(100));
  Fraction thirds;
  for (int i = 0; i < 3 * 1000; ++i) thirds += Fraction(1, 3);
  CHECK(thirds == Fraction(1000));
}

TEST_CASE("decimal rendering") {
  CHECK(Fraction(1219, 2).to_decimal(1) == "609.5");
  CHECK(Fraction(1786, 5).to_decimal(1) == "357.2");
  CHECK(Fraction(248).to_decimal(1) == "248.0");
  CHECK(Fraction(1, 3).to_decimal(4) == "0.3333");
  CHECK(Fraction(2, 3).to_decimal(4) == "0.6667");
  CHECK(Fraction(1, 2).to_decimal(0) == "1");   // half away from zero
  CHECK(Fraction(1, 4).to_decimal(0) == "0");
  CHECK(Fraction(3, 4).to_decimal(0) == "1");
  CHECK(Fraction(0).to_decimal(2) == "0.00");
  CHECK(Fraction(1, 8).to_decimal(3) == "0.125");
  CHECK(Fraction(1, 8).to_decimal(2) == "0.13");
  CHECK_THROWS_AS(Fraction(1, 2).to_decimal(-1), std::invalid_argument);
}

TEST_CASE("plain rendering") {
  CHECK(Fraction(3, 4).to_string() == "3/4");
  CHECK(Fraction(8, 4).to_string() == "2");
  CHECK(Fraction(0).to_string() == "0");
}
