#ifndef PICARD_FROBENIUS_HPP
#define PICARD_FROBENIUS_HPP

#include <picard/log_series.hpp>

#include <vector>

namespace picard {

/// Analytic parts g_0 .. g_{s-2} of the Frobenius solutions at z = 0 of the
/// mirror operator: the H-jet components of
///   sum_l z^l prod_{k=1}^{sl} (sH + k) / prod_{k=1}^{l} (H + k)^s   mod H^{s-1}.
std::vector<PowerSeries> frobenius_analytic_parts(int s, int order);

/// f_j = sum_{i=0}^{j} g_{j-i} log^i z / i!  for j = 0 .. s-2.
std::vector<LogSeries> frobenius_basis(int s, int order);

/// sum_l prod (a_i)_l / prod (b_j)_l  (scale z)^l / l!
PowerSeries pfq_series(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                       const Rational& scale, int order);

/// f_0 of the s = 4 operator minus 2F1(a, b; 1; 256 z)^2; zero for (1/8, 3/8).
PowerSeries symmetric_square_check(int order, const Rational& a = Rational(1, 8),
                                   const Rational& b = Rational(3, 8));

} // namespace picard

#endif // PICARD_FROBENIUS_HPP
