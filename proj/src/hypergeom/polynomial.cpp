#include <picard/polynomial.hpp>

#include <sstream>

namespace picard {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Polynomial Polynomial::constant(const Rational& c)
{
    return Polynomial({c});
}

Polynomial Polynomial::monomial(int degree, const Rational& c)
{
    std::vector<Rational> cs(static_cast<std::size_t>(degree) + 1);
    cs.back() = c;
    return Polynomial(std::move(cs));
}

Polynomial Polynomial::linear_factor(const Rational& root)
{
    return Polynomial({-root, Rational(1)});
}

Polynomial Polynomial::from_integers(const std::vector<long long>& coeffs)
{
    std::vector<Rational> cs;
    for (auto c : coeffs) {
        cs.emplace_back(Integer(std::to_string(c)));
    }
    return Polynomial(std::move(cs));
}

int Polynomial::valuation() const
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

Rational Polynomial::operator[](int k) const
{
    if (k < 0 || k > degree()) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const
{
    if (coeffs_.empty()) {
        throw PreconditionError("zero polynomial has no leading coefficient");
    }
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    return *this += -rhs;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs)
{
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) {
        x *= c;
    }
    trim();
    return *this;
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        out[k - 1] = coeffs_[k] * static_cast<long>(k);
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) {
        return *this;
    }
    return *this * (1 / leading());
}

Polynomial Polynomial::pow(unsigned n) const
{
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1U) {
            result *= base;
        }
        n >>= 1U;
        if (n > 0) {
            base *= base;
        }
    }
    return result;
}

Rational Polynomial::evaluate(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

PowerSeries Polynomial::evaluate(const PowerSeries& x) const
{
    return evaluate_polynomial(coeffs_, x);
}

PowerSeries Polynomial::to_series(Var var, int order) const
{
    std::vector<Rational> cs(coeffs_.begin(),
                             coeffs_.begin() + std::min<std::ptrdiff_t>(
                                                   static_cast<std::ptrdiff_t>(coeffs_.size()),
                                                   std::max(order, 0)));
    return PowerSeries(var, 0, std::move(cs), order);
}

std::string Polynomial::to_string(std::string_view var) const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool any = false;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const auto& c = coeffs_[k];
        if (c == 0) {
            continue;
        }
        if (any) {
            os << (c < 0 ? " - " : " + ");
        } else if (c < 0) {
            os << "-";
        }
        const Rational mag = abs(c);
        if (k == 0 || mag != 1) {
            os << picard::to_string(mag);
            if (k > 0) {
                os << "*";
            }
        }
        if (k > 0) {
            os << var;
            if (k > 1) {
                os << "^" << k;
            }
        }
        any = true;
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero()) {
        throw PreconditionError("polynomial division by zero");
    }
    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) {
        return {Polynomial(), a};
    }
    std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1));
    const Rational lead_inv = 1 / b.leading();
    for (int k = da - db; k >= 0; --k) {
        const Rational c = rem[static_cast<std::size_t>(k + db)] * lead_inv;
        quo[static_cast<std::size_t>(k)] = c;
        if (c == 0) {
            continue;
        }
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= c * b[j];
        }
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        auto r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

} // namespace picard
