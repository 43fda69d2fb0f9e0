#include <picard/frobenius.hpp>
#include <picard/mirror.hpp>

namespace picard {

MirrorData mirror_pipeline(int s, int order)
{
    if (s < 3) {
        throw PreconditionError("mirror map needs s >= 3, got " + std::to_string(s));
    }
    if (order < 2) {
        throw PreconditionError("mirror map needs order >= 2");
    }
    MirrorData out;
    out.s = s;
    out.order = order;
    out.analytic_parts = frobenius_analytic_parts(s, order);
    const auto& g0 = out.analytic_parts[0];
    const auto& g1 = out.analytic_parts[1];
    // q(z) = z exp(g1/g0); the mantissa is a unit so exp applies directly
    const auto q_of_z = exp(g1 / g0).shifted(1);
    const auto z_of_q = revert(q_of_z);
    out.q_of_z = q_of_z.truncated(order);
    out.z_of_q = z_of_q.truncated(order);
    out.f0_tilde = compose(g0, z_of_q);
    return out;
}

IntegralityReport integrality_report(const PowerSeries& f, int through)
{
    if (through >= f.order()) {
        throw PreconditionError("integrality check through " + std::to_string(through) +
                                " exceeds the series order " + std::to_string(f.order()));
    }
    IntegralityReport report;
    for (int e = f.valuation(); e <= through; ++e) {
        if (!is_integral(f.coeff(e))) {
            report.pass = false;
            report.first_failure = e;
            break;
        }
    }
    return report;
}

PowerSeries hodge_residual(const MirrorData& data, int exponent)
{
    const auto& z = data.z_of_q;
    const Rational ss(power(data.s, static_cast<unsigned long>(data.s)));
    const auto log_derivative = euler_derive(z) / z;
    const auto pole = compose(PowerSeries::geometric(Var::z, ss, z.order()), z);
    return data.f0_tilde * data.f0_tilde - log_derivative.pow(exponent) * pole;
}

PowerSeries verify_hodge_identity(int s, int order)
{
    if (s != 3 && s != 4) {
        throw PreconditionError("the squared-solution identity is only stated for s = 3, 4");
    }
    // delta z / z loses one term
    return hodge_residual(mirror_pipeline(s, order + 1), s - 2).truncated(order);
}

} // namespace picard
