#ifndef PICARD_POWER_SERIES_HPP
#define PICARD_POWER_SERIES_HPP

#include <picard/rational.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace picard {

enum class Var { z, q, t };

std::string_view var_name(Var v);
Var parse_var(std::string_view name);

// Truncated Laurent series  sum_{n >= valuation} c_n x^n + O(x^order).
//
// Coefficients are stored densely for exponents valuation .. order-1 and the
// leading one is nonzero; the zero series has valuation == order and no
// coefficients. Every operation returns the largest order it can prove.
class PowerSeries {
public:
    PowerSeries(Var var, int order);
    PowerSeries(Var var, int valuation, std::vector<Rational> coeffs, int order);

    static PowerSeries constant(Var var, const Rational& c, int order);
    static PowerSeries monomial(Var var, int exponent, const Rational& c, int order);
    static PowerSeries variable(Var var, int order);
    /// 1 / (1 - ratio * x)
    static PowerSeries geometric(Var var, const Rational& ratio, int order);
    static PowerSeries from_integers(Var var, int valuation, const std::vector<long long>& coeffs,
                                     int order);

    Var var() const noexcept { return var_; }
    int valuation() const noexcept { return valuation_; }
    int order() const noexcept { return order_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient of x^exponent; throws when exponent >= order.
    Rational coeff(int exponent) const;
    const Rational& leading() const;
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    PowerSeries truncated(int order) const;
    /// Reinterprets the unknown tail as zeros up to the new order. Only for
    /// algorithms that carry their own error analysis (Newton steps, Horner).
    PowerSeries extended(int order) const;
    /// Multiplies by x^k.
    PowerSeries shifted(int k) const;
    PowerSeries with_var(Var var) const;

    PowerSeries operator-() const;
    PowerSeries& operator+=(const PowerSeries& rhs);
    PowerSeries& operator-=(const PowerSeries& rhs);
    PowerSeries& operator*=(const PowerSeries& rhs);
    PowerSeries& operator/=(const PowerSeries& rhs);
    PowerSeries& operator*=(const Rational& c);

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
    friend PowerSeries operator*(const Rational& c, PowerSeries a) { return a *= c; }
    friend PowerSeries operator+(PowerSeries a, const Rational& c);
    friend PowerSeries operator-(PowerSeries a, const Rational& c);

    friend bool operator==(const PowerSeries& a, const PowerSeries& b);

    PowerSeries pow(int n) const;
    PowerSeries inverse() const;

    std::string to_string() const;

private:
    void normalize();

    Var var_;
    int valuation_;
    int order_;
    std::vector<Rational> coeffs_;
};

enum class SeriesOp { add, sub, mul, div };

PowerSeries arith(const PowerSeries& a, const PowerSeries& b, SeriesOp op);

/// outer(inner(x)); inner must have positive valuation.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

/// Compositional inverse of a series with valuation exactly 1, by Newton
/// iteration doubling the number of correct terms. The result is in `target`.
PowerSeries revert(const PowerSeries& f, Var target);
PowerSeries revert(const PowerSeries& f);
/// Same result by one-term-per-pass substitution; quadratic in passes.
PowerSeries revert_naive(const PowerSeries& f, Var target);

PowerSeries exp(const PowerSeries& f);
PowerSeries log(const PowerSeries& f);

/// (x d/dx)^repeat f
PowerSeries euler_derive(const PowerSeries& f, int repeat = 1);
/// d/dx f
PowerSeries plain_derive(const PowerSeries& f);

/// Horner evaluation of a dense coefficient list c_0 + c_1 x + ... at a series
/// (any valuation >= 0; the polynomial is exact so only x's order limits).
PowerSeries evaluate_polynomial(std::span<const Rational> coeffs, const PowerSeries& x);

} // namespace picard

#endif // PICARD_POWER_SERIES_HPP
