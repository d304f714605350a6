#include "patstat/date.hpp"

#include <random>

#include "doctest.h"

using namespace patstat;

TEST_CASE("date parsing accepts both dump formats") {
  auto d = parse_date_text("2005-01-14");
  REQUIRE(d.status == DateParseStatus::parsed);
  CHECK(d.value->year() == 2005);
  CHECK(d.value->month() == 1);
  CHECK(d.value->day() == 14);

  auto compact = parse_date_text("20050114");
  REQUIRE(compact.status == DateParseStatus::parsed);
  CHECK(*compact.value == *d.value);

  CHECK(parse_date_text("  2005-01-14  ").status == DateParseStatus::parsed);
}

TEST_CASE("missing-date inputs") {
  CHECK(parse_date_text("").status == DateParseStatus::empty);
  CHECK(parse_date_text("   ").status == DateParseStatus::empty);
  CHECK(parse_date_text("NULL").status == DateParseStatus::null_literal);
  CHECK(parse_date_text("null").status == DateParseStatus::null_literal);

  // the year-9999 placeholder never becomes a date
  auto sentinel = parse_date_text("9999-12-31");
  CHECK(sentinel.status == DateParseStatus::sentinel_year);
  CHECK_FALSE(sentinel.value.has_value());
  CHECK(parse_date_text("99990101").status == DateParseStatus::sentinel_year);
}

TEST_CASE("invalid dates are missing, flagged invalid") {
  CHECK(parse_date_text("2005-02-29").status == DateParseStatus::invalid);  // not a leap year
  CHECK(parse_date_text("2005-13-01").status == DateParseStatus::invalid);
  CHECK(parse_date_text("2005-00-10").status == DateParseStatus::invalid);
  CHECK(parse_date_text("2005/01/14").status == DateParseStatus::invalid);
  CHECK(parse_date_text("not a date").status == DateParseStatus::invalid);
  CHECK(parse_date_text("2005-1-4").status == DateParseStatus::invalid);

  CHECK(parse_date_text("2004-02-29").status == DateParseStatus::parsed);  // leap year
}

TEST_CASE("add_years clamps Feb 29") {
  const Date leap = *Date::make(2004, 2, 29);
  CHECK(leap.add_years(3).to_string() == "2007-02-28");
  CHECK(leap.add_years(4).to_string() == "2008-02-29");
  const Date plain = *Date::make(2005, 6, 15);
  CHECK(plain.add_years(3).to_string() == "2008-06-15");
  CHECK(plain.add_years(0) == plain);
  CHECK(plain.add_years(-5).to_string() == "2000-06-15");
}

TEST_CASE("ordering follows the calendar") {
  CHECK(*Date::make(2005, 6, 1) < *Date::make(2006, 1, 1));
  CHECK(*Date::make(2005, 6, 1) < *Date::make(2005, 6, 2));
  CHECK(*Date::make(2005, 6, 1) <= *Date::make(2005, 6, 1));
}

TEST_CASE("day numbers round-trip and count correctly") {
  CHECK(Date::make(1970, 1, 1)->day_number() == 0);
  CHECK(Date::make(1970, 1, 2)->day_number() == 1);
  CHECK(Date::make(1969, 12, 31)->day_number() == -1);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const auto days = static_cast<std::int64_t>(rng() % 80000) - 20000;
    const Date date = Date::from_day_number(days);
    CHECK(date.day_number() == days);
    const auto made = Date::make(date.year(), date.month(), date.day());
    REQUIRE(made.has_value());
    CHECK(*made == date);
  }

  // consecutive day numbers differ by exactly one calendar day
  std::int64_t prev = Date::make(2003, 12, 25)->day_number();
  for (int step = 1; step < 900; ++step) {
    const Date date = Date::from_day_number(prev + 1);
    CHECK(date.day_number() == prev + 1);
    prev = date.day_number();
  }
}

TEST_CASE("to_string zero-pads") {
  CHECK(Date::make(805, 3, 4)->to_string() == "0805-03-04");
  CHECK(Date::make(2005, 11, 30)->to_string() == "2005-11-30");
}

TEST_CASE("make rejects nonsense") {
  CHECK_FALSE(Date::make(2005, 2, 29).has_value());
  CHECK_FALSE(Date::make(2005, 0, 1).has_value());
  CHECK_FALSE(Date::make(9999, 1, 1).has_value());
  CHECK(Date::make(2000, 2, 29).has_value());   // 400-year leap rule
  CHECK_FALSE(Date::make(1900, 2, 29).has_value());  // 100-year exception
}
