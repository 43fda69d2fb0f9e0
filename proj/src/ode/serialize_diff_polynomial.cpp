#include <picard/serialize.hpp>

namespace picard {

namespace {

Json symbols_to_json(const std::vector<Symbol>& symbols)
{
    Json arr = Json::array();
    for (const auto& s : symbols) {
        arr.push_back(Json{{"name", s.name}, {"weight", s.weight}});
    }
    return arr;
}

template <class C, class F>
Json poly_to_json(const DiffPolynomial<C>& p, F coefficient)
{
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back(Json{{"exponents", e}, {"coefficient", coefficient(c)}, {"weight", p.monomial_weight(e)}});
    }
    return Json{{"symbols", symbols_to_json(p.symbols())}, {"terms", terms}};
}

} // namespace

Json to_json(const DiffPolynomial<Rational>& p)
{
    return poly_to_json(p, [](const Rational& c) { return Json(to_string(c)); });
}

Json to_json(const DiffPolynomial<PowerSeries>& p)
{
    return poly_to_json(p, [](const PowerSeries& c) { return to_json(c); });
}

DiffPolynomial<Rational> diff_polynomial_from_json(const Json& j)
{
    try {
        std::vector<Symbol> symbols;
        for (const auto& s : j.at("symbols")) {
            symbols.push_back({s.at("name").get<std::string>(), s.at("weight").get<int>()});
        }
        DiffPolynomial<Rational> p(std::move(symbols));
        for (const auto& t : j.at("terms")) {
            const auto e = t.at("exponents").get<std::vector<int>>();
            p.add_term(e, parse_rational(t.at("coefficient").get<std::string>()));
            if (t.contains("weight") && t.at("weight").get<int>() != p.monomial_weight(e)) {
                throw PreconditionError("term weight does not match its exponents");
            }
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("malformed differential polynomial record: ") + e.what());
    }
}

} // namespace picard
