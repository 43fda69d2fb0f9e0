#include <picard/diff_polynomial.hpp>

namespace picard {

namespace {

template <class V>
std::vector<std::vector<V>> power_table(const std::vector<V>& values, const std::vector<int>& max_exp)
{
    std::vector<std::vector<V>> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (max_exp[i] == 0) {
            continue;
        }
        out[i].push_back(values[i]);
        for (int e = 2; e <= max_exp[i]; ++e) {
            out[i].push_back(out[i].back() * values[i]);
        }
    }
    return out;
}

template <class C>
std::vector<int> max_exponents(const DiffPolynomial<C>& p)
{
    std::vector<int> out(p.symbols().size(), 0);
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            out[i] = std::max(out[i], e[i]);
        }
    }
    return out;
}

} // namespace

PowerSeries evaluate(const DiffPolynomial<Rational>& p, const std::vector<PowerSeries>& values)
{
    if (values.size() != p.symbols().size()) {
        throw PreconditionError("one value per symbol required");
    }
    const auto powers = power_table(values, max_exponents(p));
    std::optional<PowerSeries> sum;
    for (const auto& [e, c] : p.terms()) {
        std::optional<PowerSeries> term;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) {
                const auto& f = powers[i][static_cast<std::size_t>(e[i] - 1)];
                term = term ? *term * f : f;
            }
        }
        const auto value = term ? *term * c : PowerSeries::constant(values.front().var(), c, values.front().order());
        sum = sum ? *sum + value : value;
    }
    return sum ? *sum : PowerSeries(values.front().var(), values.front().order());
}

LogSeries evaluate(const DiffPolynomial<PowerSeries>& p, const std::vector<LogSeries>& values)
{
    if (values.size() != p.symbols().size()) {
        throw PreconditionError("one value per symbol required");
    }
    const auto powers = power_table(values, max_exponents(p));
    std::optional<LogSeries> sum;
    for (const auto& [e, c] : p.terms()) {
        std::optional<LogSeries> term;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) {
                const auto& f = powers[i][static_cast<std::size_t>(e[i] - 1)];
                term = term ? *term * f : f;
            }
        }
        const auto value = term ? *term * c : LogSeries(c);
        sum = sum ? *sum + value : value;
    }
    return sum ? *sum : LogSeries(PowerSeries(values.front().var(), values.front().order()));
}

} // namespace picard
