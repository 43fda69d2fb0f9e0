#include <picard/hjet.hpp>

namespace picard {

HJet::HJet(std::size_t length) : coeffs_(length)
{
    if (length == 0) {
        throw PreconditionError("H-jet needs positive length");
    }
}

HJet::HJet(std::size_t length, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (length == 0) {
        throw PreconditionError("H-jet needs positive length");
    }
    coeffs_.resize(length);
}

HJet HJet::constant(std::size_t length, const Rational& c)
{
    HJet j(length);
    j.coeffs_[0] = c;
    return j;
}

HJet HJet::linear(std::size_t length, const Rational& a, const Rational& b)
{
    HJet j(length);
    j.coeffs_[0] = a;
    if (length > 1) {
        j.coeffs_[1] = b;
    }
    return j;
}

HJet& HJet::operator+=(const HJet& rhs)
{
    if (rhs.length() != length()) {
        throw PreconditionError("H-jet length mismatch");
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    return *this;
}

HJet& HJet::operator-=(const HJet& rhs)
{
    if (rhs.length() != length()) {
        throw PreconditionError("H-jet length mismatch");
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    return *this;
}

HJet& HJet::operator*=(const HJet& rhs)
{
    if (rhs.length() != length()) {
        throw PreconditionError("H-jet length mismatch");
    }
    const std::size_t n = coeffs_.size();
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

HJet& HJet::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

HJet HJet::inverse() const
{
    if (coeffs_[0] == 0) {
        throw PreconditionError("H-jet with zero constant term is not invertible");
    }
    const std::size_t n = coeffs_.size();
    std::vector<Rational> inv(n);
    const Rational c0 = 1 / coeffs_[0];
    inv[0] = c0;
    for (std::size_t m = 1; m < n; ++m) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            acc += coeffs_[k] * inv[m - k];
        }
        inv[m] = -acc * c0;
    }
    return HJet(n, std::move(inv));
}

HJet HJet::pow(unsigned n) const
{
    HJet result = constant(length(), 1);
    HJet base = *this;
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

} // namespace picard
