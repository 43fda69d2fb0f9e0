#ifndef PICARD_LOG_SERIES_HPP
#define PICARD_LOG_SERIES_HPP

#include <picard/power_series.hpp>

#include <vector>

namespace picard {

// sum_j p_j(x) (log x)^j / j!
//
// All parts are kept at one common order (the minimum of what the inputs
// allow). With this normalisation  x d/dx (p log^j/j!) = (x p') log^j/j!
// + p log^(j-1)/(j-1)!  so derivations are a shift-and-add on the parts.
class LogSeries {
public:
    explicit LogSeries(PowerSeries p0);
    explicit LogSeries(std::vector<PowerSeries> parts);

    /// log x itself.
    static LogSeries log_var(Var var, int order);

    Var var() const noexcept { return parts_.front().var(); }
    int order() const noexcept { return parts_.front().order(); }
    /// Highest j with a nonzero part (0 for the zero series).
    std::size_t log_degree() const;
    std::size_t size() const noexcept { return parts_.size(); }
    const PowerSeries& part(std::size_t j) const { return parts_.at(j); }
    const std::vector<PowerSeries>& parts() const noexcept { return parts_; }
    bool is_zero() const;
    /// Lowest valuation over all nonzero parts (order when zero).
    int valuation() const;

    /// The log-free part; throws unless every higher part is zero.
    PowerSeries as_power_series() const;
    LogSeries truncated(int order) const;

    LogSeries operator-() const;
    LogSeries& operator+=(const LogSeries& rhs);
    LogSeries& operator-=(const LogSeries& rhs);
    LogSeries& operator*=(const Rational& c);
    LogSeries& operator*=(const PowerSeries& p);
    LogSeries& operator/=(const PowerSeries& p);
    friend LogSeries operator+(LogSeries a, const LogSeries& b) { return a += b; }
    friend LogSeries operator-(LogSeries a, const LogSeries& b) { return a -= b; }
    friend LogSeries operator*(const LogSeries& a, const LogSeries& b);
    friend LogSeries operator*(LogSeries a, const Rational& c) { return a *= c; }
    friend LogSeries operator*(LogSeries a, const PowerSeries& p) { return a *= p; }
    friend LogSeries operator*(const PowerSeries& p, LogSeries a) { return a *= p; }
    friend LogSeries operator/(LogSeries a, const PowerSeries& p) { return a /= p; }
    friend bool operator==(const LogSeries& a, const LogSeries& b);

private:
    void normalize();

    std::vector<PowerSeries> parts_;
};

/// x d/dx
LogSeries euler_derive(const LogSeries& f, int repeat = 1);
/// d/dx
LogSeries plain_derive(const LogSeries& f);

} // namespace picard

#endif // PICARD_LOG_SERIES_HPP
