#pragma once

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "fria/rdf/term.h"

namespace fria::rdf {

// An xsd:date or xsd:dateTime value. Time zone suffixes are kept verbatim
// and ignored for ordering.
class Timestamp {
 public:
  // "YYYY-MM-DD" or "YYYY-MM-DDThh:mm:ss[.fff][Z|(+|-)hh:mm]"; nullopt if malformed.
  static std::optional<Timestamp> parse(std::string_view text);
  static Timestamp from_date(std::chrono::year_month_day day);
  static std::optional<Timestamp> from_literal(const Literal& lit);
  // Current UTC time at second precision.
  static Timestamp now_utc();
  static Timestamp today_utc();

  const std::chrono::year_month_day& day() const noexcept { return day_; }
  bool has_time() const noexcept { return time_.has_value(); }
  const std::string& lexical() const noexcept { return lexical_; }

  Literal to_literal() const;

  // Calendar-day comparison.
  std::strong_ordering compare_day(const Timestamp& other) const;

  // Full comparison: day, then time of day (a bare date sorts before any
  // time on the same day).
  friend std::strong_ordering operator<=>(const Timestamp& a, const Timestamp& b);
  friend bool operator==(const Timestamp& a, const Timestamp& b) { return a.lexical_ == b.lexical_; }

 private:
  std::chrono::year_month_day day_{};
  std::optional<std::string> time_;  // "hh:mm:ss[.fff]"
  std::string lexical_;
};

}  // namespace fria::rdf
