#ifndef PICARD_DIFF_POLYNOMIAL_HPP
#define PICARD_DIFF_POLYNOMIAL_HPP

#include <picard/log_series.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace picard {

struct Symbol {
    std::string name;
    int weight = 0;
};

inline bool coeff_is_zero(const Rational& c)
{
    return c == 0;
}
inline bool coeff_is_zero(const PowerSeries& c)
{
    return c.is_zero();
}

/// Polynomial in a fixed list of symbols (derivative symbols such as t', t''
/// or B2, B2', B4) with coefficients in C.
template <class C>
class DiffPolynomial {
public:
    using Exponents = std::vector<int>;

    explicit DiffPolynomial(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    const std::map<Exponents, C>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Exponents& e, const C& c)
    {
        if (e.size() != symbols_.size()) {
            throw PreconditionError("exponent vector does not match the symbol list");
        }
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!coeff_is_zero(c)) {
                terms_.emplace(e, c);
            }
            return;
        }
        it->second += c;
        if (coeff_is_zero(it->second)) {
            terms_.erase(it);
        }
    }

    /// Coefficient of a monomial, or nullopt when absent.
    std::optional<C> coefficient(const Exponents& e) const
    {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    int monomial_weight(const Exponents& e) const
    {
        int w = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            w += e[i] * symbols_[i].weight;
        }
        return w;
    }

    static int monomial_degree(const Exponents& e)
    {
        int d = 0;
        for (int x : e) {
            d += x;
        }
        return d;
    }

    /// Common weight of all monomials; nullopt when not quasi-homogeneous or zero.
    std::optional<int> weight() const
    {
        std::optional<int> w;
        for (const auto& [e, c] : terms_) {
            const int mw = monomial_weight(e);
            if (w && *w != mw) {
                return std::nullopt;
            }
            w = mw;
        }
        return w;
    }

    bool is_quasi_homogeneous() const { return is_zero() || weight().has_value(); }

    int degree() const
    {
        int d = is_zero() ? -1 : 0;
        for (const auto& [e, c] : terms_) {
            d = std::max(d, monomial_degree(e));
        }
        return d;
    }

    std::string to_string() const
    {
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + coeff_text(c) + ")";
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) {
                    continue;
                }
                out += "*" + symbols_[i].name;
                if (e[i] > 1) {
                    out += "^" + std::to_string(e[i]);
                }
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    static std::string coeff_text(const Rational& c) { return picard::to_string(c); }
    static std::string coeff_text(const PowerSeries& c) { return c.to_string(); }

    std::vector<Symbol> symbols_;
    std::map<Exponents, C> terms_;
};

/// Substitutes series for the symbols.
PowerSeries evaluate(const DiffPolynomial<Rational>& p, const std::vector<PowerSeries>& values);
LogSeries evaluate(const DiffPolynomial<PowerSeries>& p, const std::vector<LogSeries>& values);

} // namespace picard

#endif // PICARD_DIFF_POLYNOMIAL_HPP
