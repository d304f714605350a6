#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace patstat {

// Calendar date with day precision. Only valid dates can be constructed;
// unknown dates are std::optional<Date> == nullopt throughout the engine.
// Patstat's year-9999 placeholder never survives past parsing.
class Date {
 public:
  Date() = default;  // 1970-01-01

  // nullopt when (year, month, day) is not a valid calendar date or the
  // year is the 9999 sentinel.
  static std::optional<Date> make(int year, int month, int day);

  int year() const { return year_; }
  int month() const { return month_; }
  int day() const { return day_; }

  // Days since 1970-01-01, proleptic Gregorian.
  std::int64_t day_number() const;
  static Date from_day_number(std::int64_t days);

  // Shifts the year; Feb 29 clamps to Feb 28 when the target year is not a
  // leap year (SQL DATE_ADD semantics).
  Date add_years(int n) const;

  std::string to_string() const;  // YYYY-MM-DD

  friend auto operator<=>(const Date&, const Date&) = default;

 private:
  Date(int y, int m, int d)
      : year_(static_cast<std::int16_t>(y)),
        month_(static_cast<std::int8_t>(m)),
        day_(static_cast<std::int8_t>(d)) {}

  std::int16_t year_ = 1970;
  std::int8_t month_ = 1;
  std::int8_t day_ = 1;
};

enum class DateParseStatus { parsed, empty, null_literal, sentinel_year, invalid };

struct ParsedDate {
  std::optional<Date> value;  // engaged only when status == parsed
  DateParseStatus status = DateParseStatus::empty;
};

// Accepts YYYY-MM-DD and YYYYMMDD. Empty text, the literal NULL (any case),
// any date with year 9999 and anything unparseable all map to a missing
// date; the status tells the caller which case applied.
ParsedDate parse_date_text(std::string_view text);

bool is_leap_year(int year);
int days_in_month(int year, int month);

}  // namespace patstat
