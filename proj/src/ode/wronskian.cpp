#include <picard/wronskian.hpp>

#include <algorithm>
#include <bit>
#include <numeric>

namespace picard {

LogSeries derive(const LogSeries& f, Derivation d)
{
    return d == Derivation::plain ? plain_derive(f) : euler_derive(f);
}

namespace {

int common_order(const std::vector<std::vector<LogSeries>>& rows)
{
    int order = rows.front().front().order();
    for (const auto& r : rows) {
        for (const auto& f : r) {
            order = std::min(order, f.order());
        }
    }
    return order;
}

// Minors of the matrix rows[k][j] (k = derivative order, j = function) using
// the first popcount(mask) columns and the rows in mask, for all masks with
// popcount <= max_size.
class MinorTable {
public:
    MinorTable(const std::vector<std::vector<LogSeries>>& rows, int max_size)
        : values_(std::size_t{1} << rows.size())
    {
        const int nrows = static_cast<int>(rows.size());
        const Var var = rows.front().front().var();
        values_[0] = LogSeries(PowerSeries::constant(var, 1, common_order(rows)));
        std::vector<unsigned> masks(values_.size());
        std::iota(masks.begin(), masks.end(), 0u);
        std::stable_sort(masks.begin(), masks.end(),
                         [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
        for (unsigned mask : masks) {
            const int c = std::popcount(mask);
            if (c == 0 || c > max_size) {
                continue;
            }
            std::optional<LogSeries> sum;
            int position = 0;
            for (int i = 0; i < nrows; ++i) {
                if (!(mask & (1u << i))) {
                    continue;
                }
                const auto& rest = values_[mask & ~(1u << i)];
                auto term = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c - 1)] * *rest;
                if ((position + c - 1) % 2 != 0) {
                    term = -term;
                }
                sum = sum ? *sum + term : term;
                ++position;
            }
            values_[mask] = std::move(*sum);
        }
    }

    const LogSeries& operator[](unsigned mask) const { return *values_[mask]; }

private:
    std::vector<std::optional<LogSeries>> values_;
};

std::vector<std::vector<LogSeries>> derivative_rows(const std::vector<LogSeries>& fs, int count, Derivation d)
{
    std::vector<std::vector<LogSeries>> rows{fs};
    for (int k = 1; k < count; ++k) {
        std::vector<LogSeries> next;
        for (const auto& f : rows.back()) {
            next.push_back(derive(f, d));
        }
        rows.push_back(std::move(next));
    }
    return rows;
}

void check_inputs(const std::vector<LogSeries>& fs)
{
    if (fs.empty()) {
        throw PreconditionError("Wronskian of an empty family");
    }
    for (const auto& f : fs) {
        if (f.var() != fs.front().var()) {
            throw PreconditionError("Wronskian inputs must share one variable");
        }
    }
}

std::string derivative_name(int k)
{
    if (k <= 3) {
        return "t" + std::string(static_cast<std::size_t>(k), '\'');
    }
    return "t^(" + std::to_string(k) + ")";
}

} // namespace

WronskianResult wronskian(const std::vector<LogSeries>& fs, Derivation d)
{
    check_inputs(fs);
    const int m = static_cast<int>(fs.size());
    if (m > 12) {
        throw PreconditionError("Wronskian size limited to 12");
    }
    const MinorTable minors(derivative_rows(fs, m, d), m);
    LogSeries value = minors[(1u << m) - 1];
    const int order = value.order();
    const auto status = value.is_zero() ? WronskianStatus::indeterminate : WronskianStatus::nonzero;
    return {std::move(value), status, order};
}

std::vector<LogSeries> derivative_values(const LogSeries& t, int count)
{
    std::vector<LogSeries> out;
    LogSeries cur = t;
    for (int k = 0; k < count; ++k) {
        cur = plain_derive(cur);
        out.push_back(cur);
    }
    return out;
}

ROperator r_operator(const std::vector<LogSeries>& basis)
{
    check_inputs(basis);
    const int m = static_cast<int>(basis.size());
    if (m > 5) {
        throw PreconditionError("r_operator supports at most five basis functions");
    }
    const int nrows = 2 * m;
    const MinorTable minors(derivative_rows(basis, nrows, Derivation::plain), m);
    const LogSeries& w = minors[(1u << m) - 1];
    if (w.is_zero()) {
        throw PreconditionError("degenerate basis: Wronskian vanishes to the working order");
    }

    std::vector<Symbol> symbols;
    for (int k = 1; k < nrows; ++k) {
        symbols.push_back({derivative_name(k), k});
    }
    using Exponents = DiffPolynomial<PowerSeries>::Exponents;

    // Columns 0..m-1 hold d^k(t f_j) - t d^k f_j = sum_{l>=1} C(k,l) t^(l) f_j^(k-l);
    // columns m..2m-1 hold f_j^(k). Laplace expansion along the last m columns.
    int column_sum = 0;
    for (int j = m; j < nrows; ++j) {
        column_sum += j;
    }
    std::map<Exponents, LogSeries> raw;
    for (unsigned s = 0; s < (1u << nrows); ++s) {
        if (std::popcount(s) != m || !(s & 1u)) {
            continue;
        }
        int row_sum = 0;
        std::vector<int> rest;
        for (int k = 0; k < nrows; ++k) {
            if (s & (1u << k)) {
                row_sum += k;
            } else {
                rest.push_back(k);
            }
        }
        std::map<Exponents, LogSeries> inner;
        std::vector<int> l(static_cast<std::size_t>(m), 1);
        while (true) {
            std::vector<int> d(static_cast<std::size_t>(m));
            for (std::size_t i = 0; i < d.size(); ++i) {
                d[i] = rest[i] - l[i];
            }
            std::vector<int> sorted = d;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
                // parity of the sorting permutation by inversion count
                int inversions = 0;
                unsigned mask = 0;
                for (std::size_t i = 0; i < d.size(); ++i) {
                    mask |= 1u << d[i];
                    for (std::size_t j = i + 1; j < d.size(); ++j) {
                        inversions += d[i] > d[j] ? 1 : 0;
                    }
                }
                Integer c = inversions % 2 == 0 ? 1 : -1;
                Exponents e(symbols.size(), 0);
                for (std::size_t i = 0; i < d.size(); ++i) {
                    c *= binomial(static_cast<unsigned long>(rest[i]), static_cast<unsigned long>(l[i]));
                    ++e[static_cast<std::size_t>(l[i] - 1)];
                }
                auto term = minors[mask] * Rational(c);
                auto it = inner.find(e);
                if (it == inner.end()) {
                    inner.emplace(e, std::move(term));
                } else {
                    it->second += term;
                }
            }
            // next choice of l with 1 <= l_i <= rest_i
            std::size_t i = 0;
            while (i < l.size() && l[i] == rest[i]) {
                l[i] = 1;
                ++i;
            }
            if (i == l.size()) {
                break;
            }
            ++l[i];
        }
        const bool negative = (row_sum + column_sum) % 2 != 0;
        for (auto& [e, c] : inner) {
            auto term = c * minors[s];
            if (negative) {
                term = -term;
            }
            auto it = raw.find(e);
            if (it == raw.end()) {
                raw.emplace(e, std::move(term));
            } else {
                it->second += term;
            }
        }
    }

    PowerSeries w_series = [&] {
        try {
            return w.as_power_series();
        } catch (const PreconditionError&) {
            throw PreconditionError("Wronskian of the basis carries logarithms; not a fundamental system");
        }
    }();
    const auto w2 = w_series * w_series;
    Exponents lead(symbols.size(), 0);
    if (m >= 2) {
        lead[static_cast<std::size_t>(m - 2)] += m - 1;
    }
    lead.back() += 1;

    std::map<Exponents, PowerSeries> reduced;
    for (const auto& [e, c] : raw) {
        const auto q = c / w2;
        if (q.log_degree() > 0) {
            throw PreconditionError("R[t] coefficient carries logarithms; not a fundamental system");
        }
        reduced.emplace(e, q.part(0));
    }
    auto it = reduced.find(lead);
    if (it == reduced.end() || it->second.is_zero()) {
        throw PreconditionError("leading coefficient of R[t] vanishes to the working order");
    }
    const auto& lc = it->second;
    if (lc.valuation() != 0 || lc != PowerSeries::constant(lc.var(), lc.coeff(0), lc.order())) {
        throw std::logic_error("leading coefficient of R[t] is not constant: " + lc.to_string());
    }
    ROperator out{DiffPolynomial<PowerSeries>(symbols), lc.coeff(0)};
    const Rational inv = 1 / out.normalization;
    for (const auto& [e, c] : reduced) {
        out.poly.add_term(e, c * inv);
    }
    return out;
}

} // namespace picard
