#ifndef PICARD_WRONSKIAN_HPP
#define PICARD_WRONSKIAN_HPP

#include <picard/diff_polynomial.hpp>

namespace picard {

enum class Derivation { plain, euler };

LogSeries derive(const LogSeries& f, Derivation d);

enum class WronskianStatus {
    nonzero,
    indeterminate, ///< zero through the working order; raise the order to decide
};

struct WronskianResult {
    LogSeries value;
    WronskianStatus status;
    int order; // working order of the determinant
};

/// det(d^k f_j) for k, j < m, expanded by memoized minors.
WronskianResult wronskian(const std::vector<LogSeries>& fs, Derivation d = Derivation::plain);

/// Nonlinear operator annihilating every ratio f_j / f_0 of a fundamental system,
/// as a polynomial in t', ..., t^(2m-1) (symbol i is the (i+1)-th z-derivative).
/// Normalized by the Wronskian squared and by the constant that makes the
/// coefficient of t^(2m-1) (t^(m-1))^(m-1) equal to 1; that monomial only
/// arises from the unreduced top terms, so its raw coefficient is a constant
/// multiple of W^2.
struct ROperator {
    DiffPolynomial<PowerSeries> poly;
    Rational normalization; // raw W(t f, f) / W^2 equals normalization * poly
};

ROperator r_operator(const std::vector<LogSeries>& basis);

/// Values of t', ..., t^(2m-1) for a log-series t in z.
std::vector<LogSeries> derivative_values(const LogSeries& t, int count);

} // namespace picard

#endif // PICARD_WRONSKIAN_HPP
