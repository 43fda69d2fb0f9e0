#ifndef PICARD_MIRROR_HPP
#define PICARD_MIRROR_HPP

#include <picard/power_series.hpp>

#include <optional>
#include <vector>

namespace picard {

/// Mirror map data for the hypergeometric operator of parameter s.
///
/// Every series is known through exponent order - 1. q_of_z and z_of_q have
/// valuation 1 and leading coefficient 1.
struct MirrorData {
    int s = 0;
    int order = 0;
    std::vector<PowerSeries> analytic_parts; // g_0 .. g_{s-2} in z
    PowerSeries q_of_z{Var::z, 0};
    PowerSeries z_of_q{Var::q, 0};
    PowerSeries f0_tilde{Var::q, 0};
};

MirrorData mirror_pipeline(int s, int order);

struct IntegralityReport {
    bool pass = true;
    std::optional<int> first_failure; // exponent of the first non-integral coefficient
};

/// Checks every coefficient with exponent <= through. Throws PreconditionError
/// when the series is not known that far.
IntegralityReport integrality_report(const PowerSeries& f, int through);

/// f0_tilde^2 - (delta z / z)^exponent / (1 - s^s z(q)).
PowerSeries hodge_residual(const MirrorData& data, int exponent);

/// Residual of the s = 3, 4 identity, which uses exponent s - 2.
PowerSeries verify_hodge_identity(int s, int order);

} // namespace picard

#endif // PICARD_MIRROR_HPP
