#include <picard/frobenius.hpp>
#include <picard/hjet.hpp>

namespace picard {

std::vector<PowerSeries> frobenius_analytic_parts(int s, int order)
{
    if (s < 3) {
        throw PreconditionError("Frobenius basis needs s >= 3, got " + std::to_string(s));
    }
    if (order < 1) {
        throw PreconditionError("Frobenius basis needs a positive order");
    }
    const auto len = static_cast<std::size_t>(s - 1);
    std::vector<std::vector<Rational>> parts(len, std::vector<Rational>(static_cast<std::size_t>(order)));
    HJet ratio = HJet::constant(len, 1);
    parts[0][0] = 1;
    for (int l = 1; l < order; ++l) {
        // ratio_l = ratio_{l-1} * prod_{k=s(l-1)+1}^{sl} (sH + k) / (H + l)^s
        for (int k = s * (l - 1) + 1; k <= s * l; ++k) {
            ratio *= HJet::linear(len, k, s);
        }
        ratio *= HJet::linear(len, l, 1).pow(static_cast<unsigned>(s)).inverse();
        for (std::size_t j = 0; j < len; ++j) {
            parts[j][static_cast<std::size_t>(l)] = ratio[j];
        }
    }
    std::vector<PowerSeries> out;
    for (auto& p : parts) {
        out.emplace_back(Var::z, 0, std::move(p), order);
    }
    return out;
}

std::vector<LogSeries> frobenius_basis(int s, int order)
{
    const auto g = frobenius_analytic_parts(s, order);
    std::vector<LogSeries> out;
    for (std::size_t j = 0; j < g.size(); ++j) {
        std::vector<PowerSeries> parts;
        for (std::size_t i = 0; i <= j; ++i) {
            parts.push_back(g[j - i]);
        }
        out.emplace_back(std::move(parts));
    }
    return out;
}

PowerSeries pfq_series(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                       const Rational& scale, int order)
{
    for (const auto& b : lower) {
        if (b <= 0 && is_integral(b)) {
            throw PreconditionError("lower hypergeometric parameter is a nonpositive integer: " +
                                    to_string(b));
        }
    }
    std::vector<Rational> cs(static_cast<std::size_t>(std::max(order, 0)));
    if (cs.empty()) {
        return PowerSeries(Var::z, order);
    }
    Rational term = 1;
    cs[0] = term;
    for (int l = 0; l + 1 < order; ++l) {
        for (const auto& a : upper) {
            term *= a + l;
        }
        for (const auto& b : lower) {
            term /= b + l;
        }
        term *= scale;
        term /= l + 1;
        cs[static_cast<std::size_t>(l + 1)] = term;
    }
    return PowerSeries(Var::z, 0, std::move(cs), order);
}

PowerSeries symmetric_square_check(int order, const Rational& a, const Rational& b)
{
    const auto f0 = frobenius_analytic_parts(4, order).front();
    const auto h = pfq_series({a, b}, {Rational(1)}, 256, order);
    return f0 - h * h;
}

} // namespace picard
