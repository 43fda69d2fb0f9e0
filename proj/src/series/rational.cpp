#include <picard/rational.hpp>

#include <cctype>

namespace picard {

namespace {

Integer parse_integer(std::string_view text)
{
    std::size_t pos = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        pos = 1;
    }
    if (pos == text.size()) {
        throw PreconditionError("malformed rational: empty integer part");
    }
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw PreconditionError("malformed rational: '" + std::string(text) + "'");
        }
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return Integer(digits, 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const auto den = parse_integer(text.substr(slash + 1));
    if (den <= 0) {
        throw PreconditionError("malformed rational: denominator must be positive");
    }
    return make_rational(parse_integer(text.substr(0, slash)), den);
}

std::string to_string(const Rational& r)
{
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer factorial(unsigned long n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer power(long base, unsigned long exponent)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), Integer(base).get_mpz_t(), exponent);
    return out;
}

} // namespace picard
