#ifndef PICARD_NONLINEAR_HPP
#define PICARD_NONLINEAR_HPP

#include <picard/rational_function.hpp>
#include <picard/yukawa.hpp>

#include <array>

namespace picard {

/// {z, t} = z'''/z' - 3/2 (z''/z')^2 from the first three derivatives.
PowerSeries schwarzian_from_derivatives(const PowerSeries& d1, const PowerSeries& d2, const PowerSeries& d3);

/// Schwarzian of z(q) with primes = delta_q = d/dt.
PowerSeries schwarzian(const PowerSeries& zq);

/// 2 Q(z) (delta z)^2 + {z, t}.
PowerSeries schwarzian_equation_residual(const PowerSeries& z_of_q, const RationalFunction& potential);

/// s = 3 uses the normal form of the s = 3 operator, s = 4 the normal form of
/// the second-order operator whose solutions square to the s = 4 ones.
PowerSeries verify_schwarzian_equation(int s, int order);

/// Quintic potential, built from its partial fractions in x = 5^5 z:
/// 5^8/4 (16/x + 16/(1-x) + 25/x^2 + 15/(1-x)^2).
RationalFunction quintic_potential();

/// -(5750 z + 63671875 z^2 + 19531250000 z^3) / (1 - 3125 z)^4.
RationalFunction quintic_quartic_potential();

/// 2Q(z) z'^2 + {z,t} - 2/5 (log K)'' + 1/10 ((log K)')^2, primes = delta_q.
PowerSeries second_order_coupling_residual(const PowerSeries& z_of_q, const PowerSeries& k,
                                           const RationalFunction& potential);
PowerSeries verify_second_order_coupling(int order);

/// Coefficients of K'^4, K K'^2 K'', K^2 K''^2, K^2 K' K''', K^3 K'''' on the right-hand side.
using QuarticCoefficients = std::array<Rational, 5>;
QuarticCoefficients default_quartic_coefficients();

/// Q~(z) (z'/z)^4 - (sum of the five K-monomials) / K^4.
PowerSeries fourth_order_coupling_residual(const PowerSeries& z_of_q, const PowerSeries& k,
                                           const RationalFunction& potential,
                                           const QuarticCoefficients& coeffs);
PowerSeries verify_fourth_order_coupling(int order);

/// (1 - 3125 z)^4 Q~(z) recovered from the series alone, as a z-series.
PowerSeries derived_quartic_numerator(int order);

struct ABQuantities {
    PowerSeries a2, a4, b2, b4;
};

/// A2, A4 from derivatives z, z', ..., z^(5) and the potentials evaluated along z:
/// q0 = Q0(z), q2 = Q2(z), dq2 = (dQ2/dz)(z). The (z''/z')^4 term of A4 carries
/// -135/16; with it A4 equals B4(log K) on the quintic mirror map.
std::pair<PowerSeries, PowerSeries> a_quantities(const std::vector<PowerSeries>& zd, const PowerSeries& q0,
                                                  const PowerSeries& q2, const PowerSeries& dq2);

/// B2, B4 from u', u'', u''', u''''.
std::pair<PowerSeries, PowerSeries> b_quantities(const std::vector<PowerSeries>& ud);

/// A's of the quintic mirror map and B's of u = log K, through q^(order-1).
ABQuantities ab_quantities(const RationalFunction& q0, const RationalFunction& q2, int order);

} // namespace picard

#endif // PICARD_NONLINEAR_HPP
