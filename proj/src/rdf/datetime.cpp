#include "fria/rdf/datetime.h"

#include <cstdio>
#include <ctime>
#include <regex>

namespace fria::rdf {

std::optional<Timestamp> Timestamp::parse(std::string_view text) {
  static const std::regex re(
      R"((-?\d{4,})-(\d{2})-(\d{2})(?:T(\d{2}:\d{2}:\d{2}(?:\.\d+)?)(Z|[+-]\d{2}:\d{2})?)?)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, re)) return std::nullopt;
  int y = std::stoi(m[1].str());
  unsigned mo = static_cast<unsigned>(std::stoi(m[2].str()));
  unsigned d = static_cast<unsigned>(std::stoi(m[3].str()));
  std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{mo}, std::chrono::day{d}};
  if (!ymd.ok()) return std::nullopt;
  Timestamp ts;
  ts.day_ = ymd;
  if (m[4].matched) {
    std::string time = m[4].str();
    int hh = std::stoi(time.substr(0, 2)), mm = std::stoi(time.substr(3, 2)), ss = std::stoi(time.substr(6, 2));
    if (hh > 24 || mm > 59 || ss > 60) return std::nullopt;
    ts.time_ = time;
  }
  ts.lexical_ = std::string(text);
  return ts;
}

Timestamp Timestamp::from_date(std::chrono::year_month_day day) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(day.year()), static_cast<unsigned>(day.month()),
                static_cast<unsigned>(day.day()));
  return *parse(buf);
}

std::optional<Timestamp> Timestamp::from_literal(const Literal& lit) {
  if (lit.datatype() != xsd::date && lit.datatype() != xsd::date_time) return std::nullopt;
  auto ts = parse(lit.lexical());
  if (!ts) return std::nullopt;
  if ((lit.datatype() == xsd::date) == ts->has_time()) return std::nullopt;
  return ts;
}

Timestamp Timestamp::now_utc() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return *parse(buf);
}

Timestamp Timestamp::today_utc() {
  auto now = now_utc();
  return from_date(now.day());
}

Literal Timestamp::to_literal() const { return Literal(lexical_, time_ ? xsd::date_time : xsd::date); }

std::strong_ordering Timestamp::compare_day(const Timestamp& other) const { return day_ <=> other.day_; }

std::strong_ordering operator<=>(const Timestamp& a, const Timestamp& b) {
  if (auto c = a.day_ <=> b.day_; c != 0) return c;
  if (a.time_.has_value() != b.time_.has_value()) return a.time_.has_value() ? std::strong_ordering::greater
                                                                              : std::strong_ordering::less;
  if (a.time_) {
    if (auto c = a.time_->compare(*b.time_) <=> 0; c != 0) return c;
  }
  return a.lexical_.compare(b.lexical_) <=> 0;
}

}  // namespace fria::rdf
