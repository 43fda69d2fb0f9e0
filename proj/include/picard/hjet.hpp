#ifndef PICARD_HJET_HPP
#define PICARD_HJET_HPP

#include <picard/rational.hpp>

#include <span>
#include <vector>

namespace picard {

// Truncated polynomial c_0 + c_1 H + ... + c_{n-1} H^{n-1}  (mod H^n).
class HJet {
public:
    explicit HJet(std::size_t length);
    HJet(std::size_t length, std::vector<Rational> coeffs);

    static HJet constant(std::size_t length, const Rational& c);
    /// a + b H
    static HJet linear(std::size_t length, const Rational& a, const Rational& b);

    std::size_t length() const noexcept { return coeffs_.size(); }
    const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    HJet& operator+=(const HJet& rhs);
    HJet& operator-=(const HJet& rhs);
    HJet& operator*=(const HJet& rhs);
    HJet& operator*=(const Rational& c);
    friend HJet operator+(HJet a, const HJet& b) { return a += b; }
    friend HJet operator-(HJet a, const HJet& b) { return a -= b; }
    friend HJet operator*(HJet a, const HJet& b) { return a *= b; }
    friend HJet operator*(HJet a, const Rational& c) { return a *= c; }
    friend bool operator==(const HJet&, const HJet&) = default;

    /// Requires a nonzero constant term.
    HJet inverse() const;
    HJet pow(unsigned n) const;

private:
    std::vector<Rational> coeffs_;
};

} // namespace picard

#endif // PICARD_HJET_HPP
