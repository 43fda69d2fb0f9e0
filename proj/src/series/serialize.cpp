#include <picard/serialize.hpp>

namespace picard {

namespace {

Json rationals_to_json(std::span<const Rational> cs)
{
    Json arr = Json::array();
    for (const auto& c : cs) {
        arr.push_back(to_string(c));
    }
    return arr;
}

std::vector<Rational> rationals_from_json(const Json& arr)
{
    if (!arr.is_array()) {
        throw PreconditionError("expected an array of exact coefficients");
    }
    std::vector<Rational> out;
    for (const auto& c : arr) {
        if (c.is_string()) {
            out.push_back(parse_rational(c.get<std::string>()));
        } else if (c.is_number_integer()) {
            out.emplace_back(Integer(std::to_string(c.get<long long>())));
        } else {
            throw PreconditionError("coefficients must be strings \"p/q\" or integers");
        }
    }
    return out;
}

} // namespace

Json to_json(const PowerSeries& s)
{
    Json j;
    j["variable"] = std::string(var_name(s.var()));
    j["valuation"] = s.valuation();
    j["order"] = s.order();
    j["coeffs"] = rationals_to_json(s.coeffs());
    return j;
}

PowerSeries series_from_json(const Json& j)
{
    try {
        return PowerSeries(parse_var(j.at("variable").get<std::string>()), j.at("valuation").get<int>(),
                           rationals_from_json(j.at("coeffs")), j.at("order").get<int>());
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("malformed series record: ") + e.what());
    }
}

Json to_json(const LogSeries& s)
{
    Json parts = Json::array();
    for (const auto& p : s.parts()) {
        parts.push_back(to_json(p));
    }
    return Json{{"parts", parts}};
}

LogSeries log_series_from_json(const Json& j)
{
    if (!j.is_object()) {
        throw PreconditionError("log-series record must be an object");
    }
    if (!j.contains("parts")) {
        return LogSeries(series_from_json(j));
    }
    std::vector<PowerSeries> parts;
    for (const auto& p : j.at("parts")) {
        parts.push_back(series_from_json(p));
    }
    return LogSeries(std::move(parts));
}

Json to_json(const Polynomial& p)
{
    return Json{{"coeffs", rationals_to_json(p.coeffs())}};
}

Polynomial polynomial_from_json(const Json& j)
{
    try {
        return Polynomial(rationals_from_json(j.at("coeffs")));
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("malformed polynomial record: ") + e.what());
    }
}

Json to_json(const RationalFunction& f)
{
    return Json{{"numerator", to_json(f.numerator())}, {"denominator", to_json(f.denominator())}};
}

} // namespace picard
