#include "patstat/date.hpp"

#include <array>
#include <cctype>
#include <cstdio>

namespace patstat {

namespace {

constexpr int kSentinelYear = 9999;

// Howard Hinnant's civil-from-days / days-from-civil algorithms.
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2) / 5 +
                       static_cast<unsigned>(d) - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  y = static_cast<int>(yy + (m <= 2));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

int to_int(std::string_view s) {
  int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_leap_year(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
  static constexpr std::array<int, 12> lengths = {31, 28, 31, 30, 31, 30,
                                                  31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12) return 0;
  if (month == 2 && is_leap_year(year)) return 29;
  return lengths[static_cast<std::size_t>(month - 1)];
}

std::optional<Date> Date::make(int year, int month, int day) {
  if (year == kSentinelYear) return std::nullopt;
  if (year < -9998 || year > 9998) return std::nullopt;
  if (month < 1 || month > 12) return std::nullopt;
  if (day < 1 || day > days_in_month(year, month)) return std::nullopt;
  return Date(year, month, day);
}

std::int64_t Date::day_number() const { return days_from_civil(year_, month_, day_); }

Date Date::from_day_number(std::int64_t days) {
  int y = 0, m = 0, d = 0;
  civil_from_days(days, y, m, d);
  return Date(y, m, d);
}

Date Date::add_years(int n) const {
  int y = year_ + n;
  int d = day_;
  if (month_ == 2 && d == 29 && !is_leap_year(y)) d = 28;
  return Date(y, month_, d);
}

std::string Date::to_string() const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", static_cast<int>(year_),
                static_cast<int>(month_), static_cast<int>(day_));
  return buf;
}

ParsedDate parse_date_text(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) return {std::nullopt, DateParseStatus::empty};

  if (s.size() == 4 && (s[0] == 'N' || s[0] == 'n')) {
    std::string upper;
    for (char c : s) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (upper == "NULL") return {std::nullopt, DateParseStatus::null_literal};
  }

  std::string_view ys, ms, ds;
  if (s.size() == 10 && s[4] == '-' && s[7] == '-') {
    ys = s.substr(0, 4);
    ms = s.substr(5, 2);
    ds = s.substr(8, 2);
  } else if (s.size() == 8 && all_digits(s)) {
    ys = s.substr(0, 4);
    ms = s.substr(4, 2);
    ds = s.substr(6, 2);
  } else {
    return {std::nullopt, DateParseStatus::invalid};
  }
  if (!all_digits(ys) || !all_digits(ms) || !all_digits(ds)) {
    return {std::nullopt, DateParseStatus::invalid};
  }

  const int y = to_int(ys);
  if (y == kSentinelYear) return {std::nullopt, DateParseStatus::sentinel_year};
  auto date = Date::make(y, to_int(ms), to_int(ds));
  if (!date) return {std::nullopt, DateParseStatus::invalid};
  return {date, DateParseStatus::parsed};
}

}  // namespace patstat
