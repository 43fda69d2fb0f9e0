#ifndef PICARD_RATIONAL_FUNCTION_HPP
#define PICARD_RATIONAL_FUNCTION_HPP

#include <picard/polynomial.hpp>

#include <string>

namespace picard {

// num/den in lowest terms with a monic denominator.
class RationalFunction {
public:
    RationalFunction() : den_(Polynomial::constant(1)) {}
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num) : RationalFunction(std::move(num), Polynomial::constant(1)) {}

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);
    RationalFunction& operator*=(const Rational& c);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend RationalFunction operator*(RationalFunction a, const Rational& c) { return a *= c; }
    friend RationalFunction operator*(const Rational& c, RationalFunction a) { return a *= c; }
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    RationalFunction derivative() const;

    /// Multiplicity of (z - point) in the reduced denominator.
    int pole_order(const Rational& point) const;

    Rational evaluate(const Rational& x) const;
    /// num(x)/den(x) for a series x without poles; Laurent when den(x) vanishes at 0.
    PowerSeries evaluate(const PowerSeries& x) const;
    /// Laurent expansion at the origin, exact below `order`.
    PowerSeries laurent(Var var, int order) const;

    std::string to_string(std::string_view var = "z") const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

} // namespace picard

#endif // PICARD_RATIONAL_FUNCTION_HPP
