#include <picard/frobenius.hpp>
#include <picard/yukawa.hpp>

#include <cmath>

namespace picard {

TPolyQSeries::TPolyQSeries(std::vector<PowerSeries> terms) : terms_(std::move(terms))
{
    if (terms_.empty()) {
        throw PreconditionError("t-polynomial needs at least one term");
    }
    normalize();
}

TPolyQSeries TPolyQSeries::t_var(int order)
{
    return TPolyQSeries({PowerSeries(Var::q, order), PowerSeries::constant(Var::q, 1, order)});
}

void TPolyQSeries::normalize()
{
    int order = terms_.front().order();
    for (const auto& p : terms_) {
        if (p.var() != Var::q) {
            throw PreconditionError("t-polynomial coefficients must be q-series");
        }
        order = std::min(order, p.order());
    }
    for (auto& p : terms_) {
        p = p.truncated(order);
    }
    while (terms_.size() > 1 && terms_.back().is_zero()) {
        terms_.pop_back();
    }
}

bool TPolyQSeries::is_zero() const
{
    return terms_.size() == 1 && terms_.front().is_zero();
}

TPolyQSeries& TPolyQSeries::operator+=(const TPolyQSeries& rhs)
{
    const int order = std::min(this->order(), rhs.order());
    if (terms_.size() < rhs.terms_.size()) {
        terms_.resize(rhs.terms_.size(), PowerSeries(Var::q, order));
    }
    for (std::size_t k = 0; k < rhs.terms_.size(); ++k) {
        terms_[k] += rhs.terms_[k];
    }
    for (auto& p : terms_) {
        p = p.truncated(order);
    }
    normalize();
    return *this;
}

TPolyQSeries& TPolyQSeries::operator-=(const TPolyQSeries& rhs)
{
    return *this += rhs * Rational(-1);
}

TPolyQSeries& TPolyQSeries::operator*=(const Rational& c)
{
    for (auto& p : terms_) {
        p *= c;
    }
    normalize();
    return *this;
}

TPolyQSeries& TPolyQSeries::operator*=(const PowerSeries& x)
{
    for (auto& p : terms_) {
        p *= x;
    }
    normalize();
    return *this;
}

TPolyQSeries operator*(const TPolyQSeries& a, const TPolyQSeries& b)
{
    const int order = std::min(a.order(), b.order());
    std::vector<PowerSeries> out(a.terms_.size() + b.terms_.size() - 1, PowerSeries(Var::q, order));
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        for (std::size_t j = 0; j < b.terms_.size(); ++j) {
            out[i + j] += a.terms_[i] * b.terms_[j];
        }
    }
    return TPolyQSeries(std::move(out));
}

bool operator==(const TPolyQSeries& a, const TPolyQSeries& b)
{
    return a.terms_ == b.terms_;
}

TPolyQSeries derive_t(const TPolyQSeries& f, int repeat)
{
    TPolyQSeries out = f;
    for (int r = 0; r < repeat; ++r) {
        const auto& terms = out.terms();
        std::vector<PowerSeries> next;
        for (std::size_t k = 0; k < terms.size(); ++k) {
            auto d = euler_derive(terms[k]);
            if (k + 1 < terms.size()) {
                d += terms[k + 1] * Rational(static_cast<long>(k + 1));
            }
            next.push_back(std::move(d));
        }
        out = TPolyQSeries(std::move(next));
    }
    return out;
}

PowerSeries yukawa_from_mirror(const MirrorData& s5)
{
    if (s5.s != 5) {
        throw PreconditionError("the Yukawa coupling is defined from the s = 5 mirror map");
    }
    const auto& z = s5.z_of_q;
    const auto ratio = euler_derive(z) / z;
    const auto pole = PowerSeries::constant(Var::q, 1, z.order()) - z * Rational(3125);
    return ratio.pow(3) * Rational(5) / (pole * s5.f0_tilde * s5.f0_tilde);
}

PowerSeries yukawa_from_definition(int order)
{
    return yukawa_from_mirror(mirror_pipeline(5, order + 1)).truncated(order);
}

InstantonTable instanton_numbers(const PowerSeries& k, int count)
{
    if (k.var() != Var::q || k.valuation() < 0) {
        throw PreconditionError("instanton extraction needs a q-series");
    }
    if (count >= k.order()) {
        throw PreconditionError("K is known only through q^" + std::to_string(k.order() - 1));
    }
    InstantonTable table;
    for (int m = 1; m <= count; ++m) {
        Rational c = k.coeff(m);
        for (int l = 1; l < m; ++l) {
            if (m % l == 0) {
                c -= Rational(table.n[static_cast<std::size_t>(l - 1)] * power(l, 3));
            }
        }
        c /= Rational(power(m, 3));
        if (!is_integral(c)) {
            throw IntegralityError("n_" + std::to_string(m) + " = " + to_string(c) + " is not an integer");
        }
        table.n.push_back(c.get_num());
    }
    for (int l = 1; l <= count; ++l) {
        Rational sum = 0;
        for (int d = 1; d <= l; ++d) {
            if (l % d == 0) {
                sum += make_rational(table.n[static_cast<std::size_t>(l / d - 1)], power(d, 3));
            }
        }
        table.N.push_back(sum);
    }
    return table;
}

PowerSeries lambert_series(const std::vector<Integer>& weights, int order)
{
    std::vector<Rational> cs(static_cast<std::size_t>(std::max(order, 0)));
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const int l = static_cast<int>(i) + 1;
        const Integer w = weights[i] * power(l, 3);
        for (int m = l; m < order; m += l) {
            cs[static_cast<std::size_t>(m)] += w;
        }
    }
    return PowerSeries(Var::q, 0, std::move(cs), order);
}

TPolyQSeries prepotential_from_table(const InstantonTable& table, const Rational& cubic, int order)
{
    if (static_cast<int>(table.N.size()) < order - 1) {
        throw PreconditionError("instanton table shorter than the requested order");
    }
    std::vector<Rational> cs(static_cast<std::size_t>(order));
    for (int l = 1; l < order; ++l) {
        cs[static_cast<std::size_t>(l)] = table.N[static_cast<std::size_t>(l - 1)];
    }
    std::vector<PowerSeries> terms(4, PowerSeries(Var::q, order));
    terms[0] = PowerSeries(Var::q, 0, std::move(cs), order);
    terms[3] = PowerSeries::constant(Var::q, cubic, order);
    return TPolyQSeries(std::move(terms));
}

TPolyQSeries prepotential(int order)
{
    const auto k = yukawa_from_definition(order);
    return prepotential_from_table(instanton_numbers(k, order - 1), Rational(5, 6), order);
}

PowerSeries yukawa_definition_residual(int order)
{
    const auto m = mirror_pipeline(5, order + 1);
    const auto third = derive_t(prepotential(order), 3);
    if (third.t_degree() != 0) {
        throw std::logic_error("third t-derivative of the prepotential is not a q-series");
    }
    const auto& k = third.term(0);
    const auto& z = m.z_of_q;
    const auto pole = PowerSeries::constant(Var::q, 1, z.order()) - z * Rational(3125);
    const auto lhs = m.f0_tilde * m.f0_tilde * pole * k;
    const auto ratio = euler_derive(z) / z;
    return (lhs - ratio.pow(3) * Rational(5)).truncated(order);
}

std::vector<TPolyQSeries> t_functions(const TPolyQSeries& f)
{
    const int order = f.order();
    const auto t = TPolyQSeries::t_var(order);
    const auto df = derive_t(f);
    return {TPolyQSeries::from_series(PowerSeries::constant(Var::q, 1, order)), t, df * Rational(1, 5),
            (t * df - f * Rational(2)) * Rational(1, 5)};
}

std::vector<TPolyQSeries> t_functions(int order)
{
    return t_functions(prepotential(order));
}

std::vector<TPolyQSeries> t_functions_from_basis(const MirrorData& s5)
{
    const auto& g = s5.analytic_parts;
    const auto& z = s5.z_of_q;
    std::vector<PowerSeries> ratio; // (g_j / g_0)(z(q))
    for (const auto& gj : g) {
        ratio.push_back(compose(gj / g[0], z));
    }
    // log z(q) = t - (g_1/g_0)(z(q))
    const auto log_z = TPolyQSeries({-ratio[1], PowerSeries::constant(Var::q, 1, z.order())});
    std::vector<TPolyQSeries> powers{TPolyQSeries::from_series(PowerSeries::constant(Var::q, 1, z.order()))};
    for (std::size_t i = 1; i < g.size(); ++i) {
        powers.push_back(powers.back() * log_z * make_rational(1, static_cast<unsigned long>(i)));
    }
    std::vector<TPolyQSeries> out;
    for (std::size_t j = 0; j < g.size(); ++j) {
        TPolyQSeries tj = TPolyQSeries::from_series(PowerSeries(Var::q, z.order()));
        for (std::size_t i = 0; i <= j; ++i) {
            tj += powers[i] * ratio[j - i];
        }
        out.push_back(std::move(tj));
    }
    return out;
}

LogSeries prepotential_identity_residual(int order)
{
    const auto m = mirror_pipeline(5, order);
    const auto f = prepotential(order);
    const auto basis = frobenius_basis(5, order);
    const auto& f0 = basis[0].as_power_series();
    const LogSeries t = basis[1] / f0;
    // (5/6) t^3 + (q-part)(q(z))
    LogSeries lhs = t * t * t * Rational(5, 6) + LogSeries(compose(f.term(0), m.q_of_z));
    const LogSeries rhs = (basis[1] * basis[2] - basis[0] * basis[3]) / (f0 * f0) * Rational(5, 2);
    return lhs - rhs;
}

std::vector<TPolyQSeries> verify_pandharipande(int order)
{
    const auto k = yukawa_from_definition(order);
    const auto inv_k = k.inverse();
    std::vector<TPolyQSeries> out;
    for (const auto& tj : t_functions(prepotential_from_table(instanton_numbers(k, order - 1), Rational(5, 6),
                                                              order))) {
        out.push_back(derive_t(derive_t(tj, 2) * inv_k, 2));
    }
    return out;
}

EisensteinAnalog eisenstein_analog(int order)
{
    std::vector<Rational> k0(static_cast<std::size_t>(order)), f0(static_cast<std::size_t>(order));
    for (int n = 1; n < order; ++n) {
        for (int d = 1; d <= n; ++d) {
            if (n % d == 0) {
                k0[static_cast<std::size_t>(n)] += Rational(240 * power(d, 3));
                f0[static_cast<std::size_t>(n)] += make_rational(240, power(d, 3));
            }
        }
    }
    if (order > 0) {
        k0[0] = 1;
    }
    std::vector<PowerSeries> terms(4, PowerSeries(Var::q, order));
    terms[0] = PowerSeries(Var::q, 0, std::move(f0), order);
    terms[3] = PowerSeries::constant(Var::q, Rational(1, 6), order);
    return {PowerSeries(Var::q, 0, std::move(k0), order), TPolyQSeries(std::move(terms))};
}

F0Evaluation evaluate_F0_at(double t, int order)
{
    if (!(t < 0) || !std::isfinite(t)) {
        throw PreconditionError("F0 needs |q| = |exp(t)| < 1");
    }
    if (order < 1) {
        throw PreconditionError("F0 evaluation needs a positive order");
    }
    const auto f0 = eisenstein_analog(order).f0.term(0);
    const double q = std::exp(t);
    // Horner over the exact coefficients converted to double
    double sum = 0;
    for (int m = order - 1; m >= 1; --m) {
        sum = (sum + f0.coeff(m).get_d()) * q;
    }
    F0Evaluation out;
    out.value = t * t * t / 6 + sum;
    // 240 sigma_{-3}(m) <= 240 zeta(3) < 289, geometric tail from q^order
    out.tail_bound = 289 * std::pow(q, order) / (1 - q);
    return out;
}

std::vector<PowerSeries> yukawa_log_ratios(const PowerSeries& k, int count)
{
    std::vector<PowerSeries> out;
    auto d = k;
    for (int i = 1; i <= count; ++i) {
        d = euler_derive(d);
        out.push_back(d / k);
    }
    return out;
}

} // namespace picard
