#pragma once

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace scenariodoc {

using Timestamp = std::chrono::sys_seconds;

// Accepts "YYYY-MM-DD", "YYYY-MM-DDTHH:MM[:SS[.fff]]" with an optional "Z" or
// "+HH:MM" offset (a space may replace the "T"). Results are UTC.
std::optional<Timestamp> parse_timestamp(std::string_view text);

// "YYYY-MM-DDTHH:MM:SSZ"
std::string format_timestamp(Timestamp ts);

struct MonthKey {
  int year = 1970;
  unsigned month = 1;  // 1..12

  MonthKey next() const noexcept {
    return month == 12 ? MonthKey{year + 1, 1} : MonthKey{year, month + 1};
  }
  std::string str() const;  // "YYYY-MM"

  friend auto operator<=>(const MonthKey&, const MonthKey&) = default;
};

MonthKey month_of(Timestamp ts);
std::optional<MonthKey> parse_month(std::string_view text);

}  // namespace scenariodoc
