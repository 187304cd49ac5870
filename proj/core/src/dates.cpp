#include "secscore/dates.hpp"

#include <charconv>
#include <cstdio>

#include "secscore/errors.hpp"

namespace secscore {

namespace {

bool parse_int(std::string_view s, int& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

}  // namespace

bool try_parse_date(std::string_view iso, Date& out) {
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') return false;
    int y = 0, m = 0, d = 0;
    if (!parse_int(iso.substr(0, 4), y) || !parse_int(iso.substr(5, 2), m) ||
        !parse_int(iso.substr(8, 2), d)) {
        return false;
    }
    const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(m)},
                                          std::chrono::day{unsigned(d)}};
    if (!ymd.ok()) return false;
    out = std::chrono::sys_days{ymd};
    return true;
}

Date parse_date(std::string_view iso) {
    Date d;
    if (!try_parse_date(iso, d)) {
        throw InvalidDate("invalid date (expected YYYY-MM-DD): '" + std::string(iso) + "'");
    }
    return d;
}

std::string format_date(Date d) {
    const std::chrono::year_month_day ymd{d};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(ymd.year()), unsigned(ymd.month()),
                  unsigned(ymd.day()));
    return buf;
}

double weeks_between(Date from, Date to) {
    return double((to - from).count()) / 7.0;
}

}  // namespace secscore
