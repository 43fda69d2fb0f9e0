#ifndef PICARD_YUKAWA_HPP
#define PICARD_YUKAWA_HPP

#include <picard/log_series.hpp>
#include <picard/mirror.hpp>

#include <vector>

namespace picard {

/// Polynomial in t with q-series coefficients, t = log q. terms[k] multiplies t^k.
class TPolyQSeries {
public:
    explicit TPolyQSeries(std::vector<PowerSeries> terms);
    static TPolyQSeries from_series(const PowerSeries& p) { return TPolyQSeries({p}); }
    /// t itself, to the given q-order.
    static TPolyQSeries t_var(int order);

    int order() const noexcept { return terms_.front().order(); }
    std::size_t t_degree() const noexcept { return terms_.size() - 1; }
    const PowerSeries& term(std::size_t k) const { return terms_.at(k); }
    const std::vector<PowerSeries>& terms() const noexcept { return terms_; }
    bool is_zero() const;

    TPolyQSeries& operator+=(const TPolyQSeries& rhs);
    TPolyQSeries& operator-=(const TPolyQSeries& rhs);
    TPolyQSeries& operator*=(const Rational& c);
    TPolyQSeries& operator*=(const PowerSeries& p);
    friend TPolyQSeries operator+(TPolyQSeries a, const TPolyQSeries& b) { return a += b; }
    friend TPolyQSeries operator-(TPolyQSeries a, const TPolyQSeries& b) { return a -= b; }
    friend TPolyQSeries operator*(TPolyQSeries a, const Rational& c) { return a *= c; }
    friend TPolyQSeries operator*(TPolyQSeries a, const PowerSeries& p) { return a *= p; }
    friend TPolyQSeries operator*(const TPolyQSeries& a, const TPolyQSeries& b);
    friend bool operator==(const TPolyQSeries& a, const TPolyQSeries& b);

private:
    void normalize();
    std::vector<PowerSeries> terms_;
};

/// d/dt: t^k P  ->  k t^(k-1) P + t^k delta_q P.
TPolyQSeries derive_t(const TPolyQSeries& f, int repeat = 1);

struct InstantonTable {
    std::vector<Integer> n;  // n[l-1] = n_l
    std::vector<Rational> N; // N[l-1] = sum_{k | l} n_{l/k} / k^3
};

/// K = 5 (delta z / z)^3 / ((1 - 5^5 z) f0_tilde^2), known through q^(order-1).
PowerSeries yukawa_from_definition(int order);
PowerSeries yukawa_from_mirror(const MirrorData& s5);

/// Divisor recursion on K = K(0) + sum n_l l^3 q^l / (1 - q^l), for l = 1..count.
/// Throws IntegralityError on a non-integral n_l.
InstantonTable instanton_numbers(const PowerSeries& k, int count);

/// sum_l weights[l-1] l^3 q^l / (1 - q^l) to the given order.
PowerSeries lambert_series(const std::vector<Integer>& weights, int order);

/// cubic t^3 + sum N_l q^l.
TPolyQSeries prepotential_from_table(const InstantonTable& table, const Rational& cubic, int order);
/// (5/6) t^3 + sum N_l q^l from the quintic data.
TPolyQSeries prepotential(int order);

/// f0_tilde^2 (1 - 5^5 z) K - 5 (delta z / z)^3 with K rebuilt as the third
/// t-derivative of the prepotential (so it passes through the instanton table).
PowerSeries yukawa_definition_residual(int order);

/// t_0 .. t_3 from the prepotential: 1, t, F'/5, (t F' - 2F)/5.
std::vector<TPolyQSeries> t_functions(const TPolyQSeries& f);
std::vector<TPolyQSeries> t_functions(int order);

/// f_j / f_0 pulled back along z(q) with log z = t - (g_1/g_0)(z(q)).
std::vector<TPolyQSeries> t_functions_from_basis(const MirrorData& s5);

/// F(f_1/f_0) - (5/2)(f_1 f_2 - f_0 f_3)/f_0^2 as a log-series in z.
LogSeries prepotential_identity_residual(int order);

/// d^2/dt^2 (1/K) d^2/dt^2 t_j for j = 0..3.
std::vector<TPolyQSeries> verify_pandharipande(int order);

struct EisensteinAnalog {
    PowerSeries k0;  // 1 + 240 sum sigma_3(n) q^n
    TPolyQSeries f0; // t^3/6 + sum 240 sigma_{-3}(n) q^n
};
EisensteinAnalog eisenstein_analog(int order);

struct F0Evaluation {
    double value = 0;
    double tail_bound = 0; // bound on the dropped q-terms
};
/// Double-precision evaluation of the truncated F0 at q = exp(t). Requires t < 0.
F0Evaluation evaluate_F0_at(double t, int order);

/// delta^k K / K for k = 1..count. K must be a unit; log K itself is never
/// formed, so the constant term need not be 1.
std::vector<PowerSeries> yukawa_log_ratios(const PowerSeries& k, int count);

} // namespace picard

#endif // PICARD_YUKAWA_HPP
