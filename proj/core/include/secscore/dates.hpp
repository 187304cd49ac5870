#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace secscore {

using Date = std::chrono::sys_days;

// Parses "YYYY-MM-DD". Throws InvalidDate on anything else.
Date parse_date(std::string_view iso);

bool try_parse_date(std::string_view iso, Date& out);

std::string format_date(Date d);

// Signed fractional weeks from one date to another, day resolution / 7.
double weeks_between(Date from, Date to);

}  // namespace secscore
