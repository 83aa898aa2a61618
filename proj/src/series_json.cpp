#include "series_json.hpp"

#include "errors.hpp"

namespace tmirror {

namespace {

nlohmann::ordered_json record(const LaurentSeries& s, const char* base)
{
    nlohmann::ordered_json out;
    out["base"] = base;
    out["valuation"] = s.valuation();
    out["truncation"] = s.truncation();
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& c : s.coefficients()) {
        coeffs.push_back(fraction_string(c));
    }
    out["coefficients"] = std::move(coeffs);
    return out;
}

} // namespace

nlohmann::ordered_json series_record(const LaurentSeries& s)
{
    return record(s, "y");
}

nlohmann::ordered_json series_record(const XSeries& s)
{
    return record(s.series, "x");
}

nlohmann::ordered_json series_record_preferring_x(const LaurentSeries& s)
{
    if (expressible_in_x(s)) {
        return series_record(rebase_to_x(s));
    }
    return series_record(s);
}

ParsedSeries parse_series_record(const nlohmann::json& rec)
{
    try {
        ParsedSeries out;
        const auto base = rec.at("base").get<std::string>();
        if (base != "x" && base != "y") {
            throw InvalidArgument("unknown series base: " + base);
        }
        out.x_base = (base == "x");
        const auto valuation = rec.at("valuation").get<Exponent>();
        const auto truncation = rec.at("truncation").get<Exponent>();
        std::vector<Rational> coeffs;
        for (const auto& c : rec.at("coefficients")) {
            coeffs.push_back(parse_rational(c.get<std::string>()));
        }
        out.series = LaurentSeries::from_dense(valuation, std::move(coeffs), truncation);
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed series record: ") + e.what());
    }
}

} // namespace tmirror
