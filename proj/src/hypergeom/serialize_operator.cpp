#include <picard/serialize.hpp>

namespace picard {

Json to_json(const DeltaOperator& op)
{
    Json coeffs = Json::array();
    for (const auto& c : op.coeffs()) {
        coeffs.push_back(to_json(c));
    }
    Json j;
    j["order"] = op.order();
    j["coeffs"] = coeffs;
    return j;
}

DeltaOperator operator_from_json(const Json& j)
{
    try {
        std::vector<Polynomial> coeffs;
        for (const auto& c : j.at("coeffs")) {
            coeffs.push_back(polynomial_from_json(c));
        }
        DeltaOperator op(std::move(coeffs));
        if (j.contains("order") && j.at("order").get<int>() != op.order()) {
            throw PreconditionError("operator record order does not match its coefficients");
        }
        return op;
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("malformed operator record: ") + e.what());
    }
}

} // namespace picard
