#include <picard/log_series.hpp>

#include <algorithm>

namespace picard {

LogSeries::LogSeries(PowerSeries p0) : parts_{std::move(p0)} {}

LogSeries::LogSeries(std::vector<PowerSeries> parts) : parts_(std::move(parts))
{
    if (parts_.empty()) {
        throw PreconditionError("log-series needs at least one part");
    }
    for (const auto& p : parts_) {
        if (p.var() != parts_.front().var()) {
            throw PreconditionError("log-series parts must share a variable");
        }
    }
    normalize();
}

LogSeries LogSeries::log_var(Var var, int order)
{
    return LogSeries({PowerSeries(var, order), PowerSeries::constant(var, 1, order)});
}

void LogSeries::normalize()
{
    int order = parts_.front().order();
    for (const auto& p : parts_) {
        order = std::min(order, p.order());
    }
    for (auto& p : parts_) {
        p = p.truncated(order);
    }
    while (parts_.size() > 1 && parts_.back().is_zero()) {
        parts_.pop_back();
    }
}

std::size_t LogSeries::log_degree() const
{
    return parts_.size() - 1;
}

bool LogSeries::is_zero() const
{
    return std::all_of(parts_.begin(), parts_.end(), [](const PowerSeries& p) { return p.is_zero(); });
}

int LogSeries::valuation() const
{
    int v = order();
    for (const auto& p : parts_) {
        v = std::min(v, p.valuation());
    }
    return v;
}

PowerSeries LogSeries::as_power_series() const
{
    if (parts_.size() > 1) {
        throw PreconditionError("log-series has nonzero logarithmic parts");
    }
    return parts_.front();
}

LogSeries LogSeries::truncated(int order) const
{
    LogSeries out = *this;
    for (auto& p : out.parts_) {
        p = p.truncated(order);
    }
    out.normalize();
    return out;
}

LogSeries LogSeries::operator-() const
{
    LogSeries out = *this;
    for (auto& p : out.parts_) {
        p = -p;
    }
    return out;
}

LogSeries& LogSeries::operator+=(const LogSeries& rhs)
{
    if (rhs.var() != var()) {
        throw PreconditionError("log-series variable mismatch");
    }
    const int rhs_order = rhs.order();
    if (parts_.size() < rhs.parts_.size()) {
        parts_.resize(rhs.parts_.size(), PowerSeries(var(), order()));
    }
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (j < rhs.parts_.size()) {
            parts_[j] += rhs.parts_[j];
        } else {
            parts_[j] = parts_[j].truncated(rhs_order);
        }
    }
    normalize();
    return *this;
}

LogSeries& LogSeries::operator-=(const LogSeries& rhs)
{
    return *this += -rhs;
}

LogSeries& LogSeries::operator*=(const Rational& c)
{
    for (auto& p : parts_) {
        p *= c;
    }
    normalize();
    return *this;
}

LogSeries& LogSeries::operator*=(const PowerSeries& s)
{
    for (auto& p : parts_) {
        p = p * s;
    }
    normalize();
    return *this;
}

LogSeries& LogSeries::operator/=(const PowerSeries& s)
{
    for (auto& p : parts_) {
        p = p / s;
    }
    normalize();
    return *this;
}

LogSeries operator*(const LogSeries& a, const LogSeries& b)
{
    if (a.var() != b.var()) {
        throw PreconditionError("log-series variable mismatch");
    }
    // (log^i/i!)(log^k/k!) = C(i+k, i) log^(i+k)/(i+k)!
    const std::size_t n = a.parts_.size() + b.parts_.size() - 1;
    // Every index i+k < n is hit at least once, so the placeholders never survive.
    std::vector<PowerSeries> out(n, PowerSeries(a.var(), 0));
    std::vector<bool> touched(n, false);
    for (std::size_t i = 0; i < a.parts_.size(); ++i) {
        for (std::size_t k = 0; k < b.parts_.size(); ++k) {
            PowerSeries term = a.parts_[i] * b.parts_[k];
            if (i > 0 && k > 0) {
                term *= Rational(binomial(i + k, i));
            }
            if (touched[i + k]) {
                out[i + k] += term;
            } else {
                out[i + k] = std::move(term);
                touched[i + k] = true;
            }
        }
    }
    return LogSeries(std::move(out));
}

bool operator==(const LogSeries& a, const LogSeries& b)
{
    return a.parts_ == b.parts_;
}

LogSeries euler_derive(const LogSeries& f, int repeat)
{
    LogSeries cur = f;
    for (int r = 0; r < repeat; ++r) {
        std::vector<PowerSeries> parts;
        const auto& ps = cur.parts();
        for (std::size_t j = 0; j < ps.size(); ++j) {
            PowerSeries p = euler_derive(ps[j]);
            if (j + 1 < ps.size()) {
                p += ps[j + 1];
            }
            parts.push_back(std::move(p));
        }
        cur = LogSeries(std::move(parts));
    }
    return cur;
}

LogSeries plain_derive(const LogSeries& f)
{
    std::vector<PowerSeries> parts;
    const auto& ps = f.parts();
    for (std::size_t j = 0; j < ps.size(); ++j) {
        PowerSeries p = plain_derive(ps[j]);
        if (j + 1 < ps.size()) {
            p += ps[j + 1].shifted(-1);
        }
        parts.push_back(std::move(p));
    }
    return LogSeries(std::move(parts));
}

} // namespace picard
