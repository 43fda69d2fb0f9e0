#ifndef PICARD_RATIONAL_HPP
#define PICARD_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace picard {

// GMP keeps mpq_class canonical (lowest terms, positive denominator, zero
// as 0/1) after every arithmetic operation; anything built from raw
// numerator/denominator goes through make_rational.
using Integer = mpz_class;
using Rational = mpq_class;

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IntegralityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline Rational make_rational(const Integer& num, const Integer& den = 1)
{
    if (den == 0) {
        throw PreconditionError("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rational& r)
{
    return r.get_den() == 1;
}

/// Parses "n" or "p/q" (optional sign, decimal digits only).
Rational parse_rational(std::string_view text);

/// "n" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
Integer power(long base, unsigned long exponent);

} // namespace picard

#endif // PICARD_RATIONAL_HPP
