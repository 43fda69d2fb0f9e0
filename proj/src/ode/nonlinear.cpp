#include <picard/delta_operator.hpp>
#include <picard/nonlinear.hpp>

namespace picard {

namespace {

// Guard digits lost to the double poles of the potentials and to quotients.
constexpr int padding = 6;

PowerSeries derivative_of_log(const PowerSeries& k)
{
    return euler_derive(k) / k;
}

PowerSeries reduced(const PowerSeries& r, int order)
{
    return r.order() > order ? r.truncated(order) : r;
}

} // namespace

PowerSeries schwarzian_from_derivatives(const PowerSeries& d1, const PowerSeries& d2, const PowerSeries& d3)
{
    const auto r = d2 / d1;
    return d3 / d1 - r * r * Rational(3, 2);
}

PowerSeries schwarzian(const PowerSeries& zq)
{
    const auto d1 = euler_derive(zq);
    const auto d2 = euler_derive(d1);
    return schwarzian_from_derivatives(d1, d2, euler_derive(d2));
}

PowerSeries schwarzian_equation_residual(const PowerSeries& z_of_q, const RationalFunction& potential)
{
    const auto d1 = euler_derive(z_of_q);
    return potential.evaluate(z_of_q) * d1 * d1 * Rational(2) + schwarzian(z_of_q);
}

PowerSeries verify_schwarzian_equation(int s, int order)
{
    RationalFunction potential;
    if (s == 3) {
        potential = second_order_normal_form(build_operator(OperatorKind::eq1));
    } else if (s == 4) {
        potential = second_order_normal_form(build_operator(OperatorKind::eighth));
    } else {
        throw PreconditionError("the Schwarzian equation is checked for s = 3, 4");
    }
    const auto m = mirror_pipeline(s, order + padding);
    return reduced(schwarzian_equation_residual(m.z_of_q, potential), order);
}

RationalFunction quintic_potential()
{
    const Rational c = 3125;
    const RationalFunction x(Polynomial::monomial(1, c));
    const RationalFunction omx(Polynomial({1, -c}));
    const auto k = [](long v) { return RationalFunction(Polynomial::constant(v)); };
    return (k(16) / x + k(16) / omx + k(25) / (x * x) + k(15) / (omx * omx)) * Rational(390625, 4);
}

RationalFunction quintic_quartic_potential()
{
    return RationalFunction(
        Polynomial({Rational(0), Rational(-5750), Rational(-63671875), Rational(Integer("-19531250000"))}),
        Polynomial({1, Rational(-3125)}).pow(4));
}

PowerSeries second_order_coupling_residual(const PowerSeries& z_of_q, const PowerSeries& k,
                                           const RationalFunction& potential)
{
    const auto u1 = derivative_of_log(k);
    return schwarzian_equation_residual(z_of_q, potential) - euler_derive(u1) * Rational(2, 5) +
           u1 * u1 * Rational(1, 10);
}

PowerSeries verify_second_order_coupling(int order)
{
    const auto m = mirror_pipeline(5, order + padding);
    return reduced(second_order_coupling_residual(m.z_of_q, yukawa_from_mirror(m), quintic_potential()), order);
}

QuarticCoefficients default_quartic_coefficients()
{
    return {Rational(175), Rational(-280), Rational(49), Rational(70), Rational(-10)};
}

namespace {

PowerSeries quartic_right_side(const PowerSeries& k, const QuarticCoefficients& c)
{
    const auto r = yukawa_log_ratios(k, 4);
    const auto& r1 = r[0];
    const auto& r2 = r[1];
    return r1.pow(4) * c[0] + r1 * r1 * r2 * c[1] + r2 * r2 * c[2] + r1 * r[2] * c[3] + r[3] * c[4];
}

} // namespace

PowerSeries fourth_order_coupling_residual(const PowerSeries& z_of_q, const PowerSeries& k,
                                           const RationalFunction& potential,
                                           const QuarticCoefficients& coeffs)
{
    const auto ratio = euler_derive(z_of_q) / z_of_q;
    return potential.evaluate(z_of_q) * ratio.pow(4) - quartic_right_side(k, coeffs);
}

PowerSeries verify_fourth_order_coupling(int order)
{
    const auto m = mirror_pipeline(5, order + padding);
    return reduced(fourth_order_coupling_residual(m.z_of_q, yukawa_from_mirror(m), quintic_quartic_potential(),
                                                  default_quartic_coefficients()),
                   order);
}

PowerSeries derived_quartic_numerator(int order)
{
    const auto m = mirror_pipeline(5, order + padding);
    const auto ratio = euler_derive(m.z_of_q) / m.z_of_q;
    const auto in_q = quartic_right_side(yukawa_from_mirror(m), default_quartic_coefficients()) / ratio.pow(4);
    const auto in_z = compose(in_q, m.q_of_z);
    const auto factor = Polynomial({1, Rational(-3125)}).pow(4).to_series(Var::z, in_z.order());
    return reduced(in_z * factor, order);
}

std::pair<PowerSeries, PowerSeries> a_quantities(const std::vector<PowerSeries>& zd, const PowerSeries& q0,
                                                  const PowerSeries& q2, const PowerSeries& dq2)
{
    if (zd.size() < 6) {
        throw PreconditionError("A-quantities need z through its fifth derivative");
    }
    const auto& z1 = zd[1];
    const auto& z2 = zd[2];
    const auto& z3 = zd[3];
    const auto& z4 = zd[4];
    const auto& z5 = zd[5];
    const auto a2 = q2 * z1 * z1 + schwarzian_from_derivatives(z1, z2, z3) * Rational(5);
    const auto r2 = z2 / z1;
    const auto r3 = z3 / z1;
    const auto a4 = q0 * z1.pow(4) + dq2 * z1 * z1 * z2 * Rational(3, 2) - q2 * z2 * z2 * Rational(3, 4) +
                    q2 * z1 * z3 * Rational(3, 2) - r2.pow(4) * Rational(135, 16) +
                    r2 * r2 * r3 * Rational(75, 4) - r3 * r3 * Rational(15, 4) -
                    r2 * (z4 / z1) * Rational(15, 2) + (z5 / z1) * Rational(3, 2);
    return {a2, a4};
}

std::pair<PowerSeries, PowerSeries> b_quantities(const std::vector<PowerSeries>& ud)
{
    if (ud.size() < 4) {
        throw PreconditionError("B-quantities need u' through u''''");
    }
    const auto& u1 = ud[0];
    const auto& u2 = ud[1];
    const auto b2 = u2 * Rational(2) - u1 * u1 * Rational(1, 2);
    const auto b4 = ud[3] * Rational(1, 2) + u2 * u2 * Rational(1, 4) - u2 * u1 * u1 * Rational(1, 2) +
                    u1.pow(4) * Rational(1, 16);
    return {b2, b4};
}

ABQuantities ab_quantities(const RationalFunction& q0, const RationalFunction& q2, int order)
{
    const auto m = mirror_pipeline(5, order + padding);
    const auto& z = m.z_of_q;
    std::vector<PowerSeries> zd{z};
    for (int k = 1; k <= 5; ++k) {
        zd.push_back(euler_derive(zd.back()));
    }
    const auto [a2, a4] = a_quantities(zd, q0.evaluate(z), q2.evaluate(z), q2.derivative().evaluate(z));
    std::vector<PowerSeries> ud{derivative_of_log(yukawa_from_mirror(m))};
    for (int k = 2; k <= 4; ++k) {
        ud.push_back(euler_derive(ud.back()));
    }
    const auto [b2, b4] = b_quantities(ud);
    return {reduced(a2, order), reduced(a4, order), reduced(b2, order), reduced(b4, order)};
}

} // namespace picard
