#include <picard/delta_operator.hpp>

#include <cstdlib>

namespace picard {

DeltaOperator::DeltaOperator(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs))
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
    if (coeffs_.empty()) {
        throw PreconditionError("operator has no nonzero coefficient");
    }
}

namespace {

// delta^(s-1) - m z prod_k (a delta + b_k), expanded.
DeltaOperator hypergeometric_operator(int order, const Rational& scale, const Rational& step,
                                      const std::vector<Rational>& shifts)
{
    Polynomial product = Polynomial::constant(1);
    for (const auto& b : shifts) {
        product *= Polynomial({b, step});
    }
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(std::max(order, product.degree()) + 1));
    coeffs[static_cast<std::size_t>(order)] += Polynomial::constant(1);
    for (int k = 0; k <= product.degree(); ++k) {
        coeffs[static_cast<std::size_t>(k)] -= Polynomial::monomial(1, scale * product[k]);
    }
    return DeltaOperator(std::move(coeffs));
}

DeltaOperator mirror_operator(int s)
{
    if (s < 3) {
        throw PreconditionError("mirror operator needs s >= 3, got " + std::to_string(s));
    }
    std::vector<Rational> shifts;
    for (int k = 1; k < s; ++k) {
        shifts.emplace_back(k);
    }
    return hypergeometric_operator(s - 1, s, s, shifts);
}

// Stirling numbers of the second kind S(k, i), 0 <= i <= k <= n.
std::vector<std::vector<Integer>> stirling2(int n)
{
    std::vector<std::vector<Integer>> s(static_cast<std::size_t>(n) + 1,
                                        std::vector<Integer>(static_cast<std::size_t>(n) + 1));
    s[0][0] = 1;
    for (int k = 1; k <= n; ++k) {
        for (int i = 1; i <= k; ++i) {
            s[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                s[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] +
                i * s[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)];
        }
    }
    return s;
}

} // namespace

DeltaOperator build_operator(OperatorKind kind, int s)
{
    switch (kind) {
    case OperatorKind::mirror: return mirror_operator(s);
    case OperatorKind::eq1: return mirror_operator(3);
    case OperatorKind::eq4: return mirror_operator(4);
    case OperatorKind::eq20: return mirror_operator(5);
    case OperatorKind::eighth: return hypergeometric_operator(2, 4, 8, {Rational(1), Rational(3)});
    }
    throw PreconditionError("unknown operator kind");
}

LogSeries apply_operator(const DeltaOperator& op, const LogSeries& f)
{
    std::vector<PowerSeries> zero_parts(1, PowerSeries(f.var(), f.order()));
    LogSeries acc(std::move(zero_parts));
    LogSeries d = f;
    for (int k = 0; k <= op.order(); ++k) {
        if (k > 0) {
            d = euler_derive(d);
        }
        const Polynomial& c = op.coeff(k);
        if (c.is_zero()) {
            continue;
        }
        // exact polynomial, long enough that the product keeps d's relative precision
        const int len = d.order() - std::min(d.valuation(), 0) + c.degree() + 1;
        acc += d * c.to_series(f.var(), len);
    }
    return acc;
}

DzOperator to_dz_form(const DeltaOperator& op)
{
    const int m = op.order();
    const auto s = stirling2(m);
    // delta^k = sum_i S(k, i) z^i D^i, so the D^i coefficient is z^i sum_k S(k,i) c_k.
    std::vector<Polynomial> raw(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        Polynomial acc;
        for (int k = i; k <= m; ++k) {
            acc += op.coeff(k) * Rational(s[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]);
        }
        raw[static_cast<std::size_t>(i)] = acc * Polynomial::monomial(i, 1);
    }
    DzOperator out;
    const Polynomial& lead = raw[static_cast<std::size_t>(m)];
    for (int i = 0; i <= m; ++i) {
        out.coeffs.emplace_back(raw[static_cast<std::size_t>(i)], lead);
    }
    return out;
}

RationalFunction second_order_normal_form(const DeltaOperator& op)
{
    if (op.order() != 2) {
        throw PreconditionError("second-order normal form needs an operator of order 2, got " +
                                std::to_string(op.order()));
    }
    const auto dz = to_dz_form(op);
    const RationalFunction& p = dz.coeffs[1];
    const RationalFunction& r = dz.coeffs[0];
    return r - p * p * Rational(1, 4) - p.derivative() * Rational(1, 2);
}

FourthOrderNormalForm fourth_order_normal_form(const DeltaOperator& op)
{
    if (op.order() != 4) {
        throw PreconditionError("fourth-order normal form needs an operator of order 4, got " +
                                std::to_string(op.order()));
    }
    const auto dz = to_dz_form(op);
    const auto& a = dz.coeffs;
    const RationalFunction lambda = a[3] * Rational(-1, 4);
    // rho_j = w^(j)/w:  rho_0 = 1,  rho_{j+1} = rho_j' + lambda rho_j
    std::vector<RationalFunction> rho{RationalFunction(Polynomial::constant(1))};
    for (int j = 0; j < 4; ++j) {
        rho.push_back(rho.back().derivative() + lambda * rho.back());
    }
    // L[w v]/w = sum_i v^(i) sum_{k>=i} a_k C(k,i) rho_{k-i}
    std::vector<RationalFunction> b(5);
    for (int i = 0; i <= 4; ++i) {
        RationalFunction acc;
        for (int k = i; k <= 4; ++k) {
            acc += a[static_cast<std::size_t>(k)] * rho[static_cast<std::size_t>(k - i)] *
                   Rational(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(i)));
        }
        b[static_cast<std::size_t>(i)] = acc;
    }
    if (!b[3].is_zero()) {
        throw std::logic_error("gauge transformation left a third-derivative term");
    }
    return {b[2], b[1], b[0], lambda};
}

} // namespace picard
