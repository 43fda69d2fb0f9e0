#ifndef PICARD_POLYNOMIAL_HPP
#define PICARD_POLYNOMIAL_HPP

#include <picard/power_series.hpp>

#include <string>
#include <utility>
#include <vector>

namespace picard {

// Dense univariate polynomial over Q; the zero polynomial has no coefficients
// and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(int degree, const Rational& c);
    /// x - root
    static Polynomial linear_factor(const Rational& root);
    static Polynomial from_integers(const std::vector<long long>& coeffs);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Lowest exponent with a nonzero coefficient (-1 for zero).
    int valuation() const;
    Rational operator[](int k) const;
    const Rational& leading() const;
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial derivative() const;
    Polynomial monic() const;
    Polynomial pow(unsigned n) const;
    Rational evaluate(const Rational& x) const;
    PowerSeries evaluate(const PowerSeries& x) const;
    /// The polynomial as a series in `var`, exact below `order`.
    PowerSeries to_series(Var var, int order) const;

    std::string to_string(std::string_view var = "z") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// (quotient, remainder)
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero when both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

} // namespace picard

#endif // PICARD_POLYNOMIAL_HPP
