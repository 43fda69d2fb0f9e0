#ifndef PICARD_SERIALIZE_HPP
#define PICARD_SERIALIZE_HPP

#include <picard/delta_operator.hpp>
#include <picard/diff_polynomial.hpp>
#include <picard/log_series.hpp>

#include <json.hpp>

namespace picard {

using Json = nlohmann::ordered_json;

// Exact records; every coefficient is a string "n" or "p/q".
//   series:     {"variable", "valuation", "order", "coeffs": [...]}
//   log-series: {"parts": [series, ...]}   (part j multiplies log^j / j!)
//   polynomial: {"coeffs": [...]}          (ascending powers)
//   operator:   {"order", "coeffs": [polynomial, ...]}  (delta^k coefficient)
//   differential polynomial:
//               {"symbols": [{"name", "weight"}, ...],
//                "terms": [{"exponents": [...], "coefficient", "weight"}, ...]}
//               the coefficient is "p/q", or a series record for series coefficients

Json to_json(const PowerSeries& s);
PowerSeries series_from_json(const Json& j);

Json to_json(const LogSeries& s);
/// Accepts a log-series record or a bare series record.
LogSeries log_series_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const DeltaOperator& op);
DeltaOperator operator_from_json(const Json& j);

Json to_json(const RationalFunction& f);

Json to_json(const DiffPolynomial<Rational>& p);
Json to_json(const DiffPolynomial<PowerSeries>& p);
DiffPolynomial<Rational> diff_polynomial_from_json(const Json& j);

} // namespace picard

#endif // PICARD_SERIALIZE_HPP
