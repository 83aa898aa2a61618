#pragma once

// Record form of a series:
//   {"base": "y"|"x", "valuation": int, "truncation": int,
//    "coefficients": ["num/den", ...]}
// coefficients[i] belongs to exponent valuation + i, in units of base.

#include <json.hpp>

#include "series.hpp"

namespace tmirror {

nlohmann::ordered_json series_record(const LaurentSeries& s);
nlohmann::ordered_json series_record(const XSeries& s);

// Prefers the x base and falls back to y when exponents do not permit it.
nlohmann::ordered_json series_record_preferring_x(const LaurentSeries& s);

struct ParsedSeries {
    bool x_base = false;
    LaurentSeries series;
};

// Throws InvalidArgument on malformed records.
ParsedSeries parse_series_record(const nlohmann::json& record);

} // namespace tmirror
