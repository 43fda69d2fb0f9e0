#include <picard/rational_function.hpp>

namespace picard {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) {
        throw PreconditionError("rational function with zero denominator");
    }
    normalize();
}

void RationalFunction::normalize()
{
    if (num_.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    const Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    const Rational lead = den_.leading();
    if (lead != 1) {
        num_ *= 1 / lead;
        den_ *= 1 / lead;
    }
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs)
{
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs)
{
    return *this += -rhs;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs)
{
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs)
{
    if (rhs.is_zero()) {
        throw PreconditionError("division by the zero rational function");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const Rational& c)
{
    num_ *= c;
    normalize();
    return *this;
}

RationalFunction RationalFunction::derivative() const
{
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

int RationalFunction::pole_order(const Rational& point) const
{
    const Polynomial factor = Polynomial::linear_factor(point);
    Polynomial d = den_;
    int k = 0;
    while (d.degree() > 0) {
        auto [quo, rem] = divmod(d, factor);
        if (!rem.is_zero()) {
            break;
        }
        d = std::move(quo);
        ++k;
    }
    return k;
}

Rational RationalFunction::evaluate(const Rational& x) const
{
    const Rational d = den_.evaluate(x);
    if (d == 0) {
        throw PreconditionError("rational function evaluated at a pole");
    }
    return num_.evaluate(x) / d;
}

PowerSeries RationalFunction::evaluate(const PowerSeries& x) const
{
    return num_.evaluate(x) / den_.evaluate(x);
}

PowerSeries RationalFunction::laurent(Var var, int order) const
{
    const int shift = std::max(den_.valuation(), 0);
    // den = z^shift * d1 with d1(0) != 0, so num/d1 has no pole and the
    // quotient by z^shift is exact.
    const int work = order + shift;
    return (num_.to_series(var, work) / den_.to_series(var, work + shift)).truncated(order);
}

std::string RationalFunction::to_string(std::string_view var) const
{
    if (den_.degree() == 0) {
        return num_.to_string(var);
    }
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace picard
