#include <picard/delta_operator.hpp>
#include <picard/nonlinear.hpp>
#include <picard/relation_search.hpp>

#include <map>
#include <numeric>

namespace picard {

namespace {

using u64 = std::uint64_t;
constexpr u64 prime = (u64{1} << 61) - 1;

u64 mul_mod(u64 a, u64 b)
{
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % prime);
}

u64 add_mod(u64 a, u64 b)
{
    const u64 s = a + b;
    return s >= prime ? s - prime : s;
}

u64 sub_mod(u64 a, u64 b)
{
    return a >= b ? a - b : a + prime - b;
}

u64 pow_mod(u64 a, u64 e)
{
    u64 r = 1;
    while (e) {
        if (e & 1) {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    return r;
}

u64 reduce(const Integer& x)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), Integer(prime).get_mpz_t());
    return r.get_ui();
}

u64 reduce(const Rational& x)
{
    const u64 den = reduce(Integer(x.get_den()));
    if (den == 0) {
        throw std::runtime_error("denominator divisible by the working prime");
    }
    return mul_mod(reduce(Integer(x.get_num())), pow_mod(den, prime - 2));
}

using ModSeries = std::vector<u64>;

ModSeries mod_mul(const ModSeries& a, const ModSeries& b)
{
    ModSeries out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < out.size(); ++j) {
            out[i + j] = add_mod(out[i + j], mul_mod(a[i], b[j]));
        }
    }
    return out;
}

// Monomial values built incrementally: value(e) = value(e - unit_i) * symbol_i.
template <class Series, class Mul>
class MonomialCache {
public:
    MonomialCache(std::vector<Series> symbols, Series one, Mul mul)
        : symbols_(std::move(symbols)), one_(std::move(one)), mul_(mul)
    {
    }

    const Series& operator()(const std::vector<int>& e)
    {
        auto it = cache_.find(e);
        if (it != cache_.end()) {
            return it->second;
        }
        std::size_t i = 0;
        while (i < e.size() && e[i] == 0) {
            ++i;
        }
        if (i == e.size()) {
            return cache_.emplace(e, one_).first->second;
        }
        auto lower = e;
        --lower[i];
        Series value = mul_((*this)(lower), symbols_[i]);
        return cache_.emplace(e, std::move(value)).first->second;
    }

private:
    std::vector<Series> symbols_;
    Series one_;
    Mul mul_;
    std::map<std::vector<int>, Series> cache_;
};

int common_length(const std::vector<PowerSeries>& values)
{
    int n = values.front().order();
    for (const auto& v : values) {
        if (v.valuation() < 0) {
            throw PreconditionError("relation samples must be power series without poles");
        }
        n = std::min(n, v.order());
    }
    if (n <= 0) {
        throw PreconditionError("relation sample carries no coefficients");
    }
    return n;
}

void enumerate(const std::vector<Symbol>& symbols, std::size_t i, int remaining, std::vector<int>& cur,
               std::vector<std::vector<int>>& out)
{
    if (i == symbols.size()) {
        if (remaining == 0) {
            out.push_back(cur);
        }
        return;
    }
    const int w = symbols[i].weight;
    for (int e = remaining / w; e >= 0; --e) {
        cur[i] = e;
        enumerate(symbols, i + 1, remaining - e * w, cur, out);
    }
    cur[i] = 0;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

} // namespace

std::vector<std::vector<int>> monomials_of_weight(const std::vector<Symbol>& symbols, int weight)
{
    for (const auto& s : symbols) {
        if (s.weight <= 0) {
            throw PreconditionError("symbol weights must be positive");
        }
    }
    std::vector<std::vector<int>> out;
    std::vector<int> cur(symbols.size(), 0);
    if (weight > 0) {
        enumerate(symbols, 0, weight, cur, out);
    }
    return out;
}

std::vector<std::vector<Integer>> integer_nullspace(std::vector<std::vector<Integer>> m, std::size_t columns)
{
    // Bareiss elimination to row echelon form; every division is exact.
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < columns && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            for (std::size_t j = c + 1; j < columns; ++j) {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]);
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(columns, false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<Integer>> basis;
    for (std::size_t f = 0; f < columns; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<Rational> x(columns, 0);
        x[f] = 1;
        for (std::size_t i = pivots.size(); i-- > 0;) {
            const std::size_t pc = pivots[i];
            Rational s = 0;
            for (std::size_t j = pc + 1; j < columns; ++j) {
                if (x[j] != 0 && m[i][j] != 0) {
                    s += Rational(m[i][j]) * x[j];
                }
            }
            x[pc] = -s / Rational(m[i][pc]);
        }
        Integer l = 1;
        for (const auto& v : x) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        }
        std::vector<Integer> v(columns);
        Integer g = 0;
        for (std::size_t j = 0; j < columns; ++j) {
            const Rational s = x[j] * l;
            v[j] = s.get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_mpz_t());
        }
        for (auto& e : v) {
            mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RelationSearchResult find_relation_at_weight(const RelationGenerator& g, int weight, int trials,
                                             std::uint64_t seed, int certify_trials)
{
    RelationSearchResult out;
    out.weight = weight;
    const auto monomials = monomials_of_weight(g.symbols, weight);
    const std::size_t n = monomials.size();
    out.monomials = static_cast<int>(n);
    if (n == 0) {
        out.message = "no monomials of weight " + std::to_string(weight);
        return out;
    }

    // modular rank with incremental echelon basis
    std::vector<std::vector<u64>> echelon;
    std::vector<std::size_t> echelon_pivot;
    std::vector<std::pair<int, int>> chosen; // (trial, coefficient index)
    std::vector<std::vector<PowerSeries>> samples;
    for (int trial = 0; trial < trials && echelon.size() < n; ++trial) {
        auto rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
        samples.push_back(g.sample(rng));
        const auto& vals = samples.back();
        if (vals.size() != g.symbols.size()) {
            throw PreconditionError("generator returned the wrong number of symbol values");
        }
        const int len = common_length(vals);
        std::vector<ModSeries> mod_vals;
        for (const auto& v : vals) {
            ModSeries s(static_cast<std::size_t>(len), 0);
            for (int k = v.valuation(); k < len; ++k) {
                s[static_cast<std::size_t>(k)] = reduce(v.coeff(k));
            }
            mod_vals.push_back(std::move(s));
        }
        ModSeries one(static_cast<std::size_t>(len), 0);
        one[0] = 1;
        MonomialCache cache(mod_vals, one, mod_mul);
        std::vector<const ModSeries*> mono_vals;
        for (const auto& e : monomials) {
            mono_vals.push_back(&cache(e));
        }
        for (int k = 0; k < len && echelon.size() < n; ++k) {
            std::vector<u64> row(n);
            for (std::size_t c = 0; c < n; ++c) {
                row[c] = (*mono_vals[c])[static_cast<std::size_t>(k)];
            }
            for (std::size_t b = 0; b < echelon.size(); ++b) {
                const u64 f = row[echelon_pivot[b]];
                if (f == 0) {
                    continue;
                }
                for (std::size_t c = 0; c < n; ++c) {
                    row[c] = sub_mod(row[c], mul_mod(f, echelon[b][c]));
                }
            }
            std::size_t p = 0;
            while (p < n && row[p] == 0) {
                ++p;
            }
            if (p == n) {
                continue;
            }
            const u64 inv = pow_mod(row[p], prime - 2);
            for (auto& x : row) {
                x = mul_mod(x, inv);
            }
            echelon.push_back(std::move(row));
            echelon_pivot.push_back(p);
            chosen.emplace_back(trial, k);
        }
    }
    out.rank = static_cast<int>(echelon.size());
    out.nullity = static_cast<int>(n) - out.rank;
    if (out.nullity == 0) {
        out.message = "full rank at weight " + std::to_string(weight);
        return out;
    }

    // exact nullspace on the independent rows
    std::map<int, std::vector<int>> rows_by_trial;
    for (const auto& [t, k] : chosen) {
        rows_by_trial[t].push_back(k);
    }
    std::vector<std::vector<Integer>> matrix;
    for (const auto& [t, ks] : rows_by_trial) {
        const int len = *std::max_element(ks.begin(), ks.end()) + 1;
        std::vector<PowerSeries> vals;
        for (const auto& v : samples[static_cast<std::size_t>(t)]) {
            vals.push_back(v.truncated(len));
        }
        MonomialCache cache(vals, PowerSeries::constant(vals.front().var(), 1, len),
                            [](const PowerSeries& a, const PowerSeries& b) { return a * b; });
        std::vector<const PowerSeries*> mono_vals;
        for (const auto& e : monomials) {
            mono_vals.push_back(&cache(e));
        }
        for (int k : ks) {
            std::vector<Rational> row(n);
            Integer l = 1;
            for (std::size_t c = 0; c < n; ++c) {
                row[c] = mono_vals[c]->coeff(k);
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), row[c].get_den_mpz_t());
            }
            std::vector<Integer> irow(n);
            for (std::size_t c = 0; c < n; ++c) {
                irow[c] = Rational(row[c] * l).get_num();
            }
            matrix.push_back(std::move(irow));
        }
    }
    const auto null = integer_nullspace(std::move(matrix), n);
    if (null.empty()) {
        out.message = "modular rank deficit not confirmed over the rationals";
        return out;
    }
    out.nullity = static_cast<int>(null.size());
    DiffPolynomial<Rational> rel(g.symbols);
    for (std::size_t c = 0; c < n; ++c) {
        if (null.front()[c] != 0) {
            rel.add_term(monomials[c], Rational(null.front()[c]));
        }
    }
    if (rel.terms().rbegin()->second < 0) {
        DiffPolynomial<Rational> flipped(g.symbols);
        for (const auto& [e, c] : rel.terms()) {
            flipped.add_term(e, -c);
        }
        rel = flipped;
    }
    out.degree = rel.degree();

    // certification on fresh inputs
    for (int i = 0; i < certify_trials; ++i) {
        auto rng = trial_rng(seed ^ 0x9e3779b97f4a7c15ULL, static_cast<std::uint64_t>(i));
        if (!evaluate(rel, g.sample(rng)).is_zero()) {
            out.message = "candidate failed exact certification on a fresh input";
            return out;
        }
        ++out.certified_trials;
    }
    out.relation = std::move(rel);
    out.message = "relation found";
    return out;
}

RelationSearchResult find_relation(const RelationGenerator& g, int min_weight, int weight_bound, int trials,
                                   std::uint64_t seed)
{
    RelationSearchResult last;
    last.message = "empty weight range";
    for (int w = min_weight; w <= weight_bound; ++w) {
        last = find_relation_at_weight(g, w, trials, seed);
        if (last.relation) {
            return last;
        }
    }
    last.message = "no relation up to weight " + std::to_string(weight_bound) + " with " + std::to_string(trials) +
                   " trials (seed " + std::to_string(seed) + ")";
    return last;
}

std::vector<Symbol> pair_symbols(const std::string& low, const std::string& high, int low_derivs,
                                 int high_derivs)
{
    const auto name = [](const std::string& base, int k) {
        return k <= 3 ? base + std::string(static_cast<std::size_t>(k), '\'')
                      : base + "^(" + std::to_string(k) + ")";
    };
    std::vector<Symbol> out;
    for (int k = 0; k <= low_derivs; ++k) {
        out.push_back({name(low, k), 2 + k});
    }
    for (int k = 0; k <= high_derivs; ++k) {
        out.push_back({name(high, k), 4 + k});
    }
    return out;
}

namespace {

constexpr int sample_terms = 10;

std::vector<PowerSeries> with_derivatives(const PowerSeries& low, const PowerSeries& high, int low_derivs,
                                          int high_derivs, bool euler)
{
    const auto d = [euler](const PowerSeries& f) { return euler ? euler_derive(f) : plain_derive(f); };
    std::vector<PowerSeries> out{low};
    for (int k = 1; k <= low_derivs; ++k) {
        out.push_back(d(out.back()));
    }
    out.push_back(high);
    for (int k = 1; k <= high_derivs; ++k) {
        out.push_back(d(out.back()));
    }
    return out;
}

// Linear coefficient kept nonzero so quotients by the first derivative stay regular.
PowerSeries random_polynomial(std::mt19937_64& rng, const Rational& constant, int degree, int order)
{
    std::uniform_int_distribution<int> dist(-4, 4);
    std::vector<Rational> cs{constant};
    for (int k = 1; k <= degree; ++k) {
        int c = dist(rng);
        while (k == 1 && c == 0) {
            c = dist(rng);
        }
        cs.emplace_back(c);
    }
    return PowerSeries(Var::t, 0, std::move(cs), order);
}

} // namespace

RelationGenerator b_generator(int low_derivs, int high_derivs)
{
    RelationGenerator g;
    g.symbols = pair_symbols("B2", "B4", low_derivs, high_derivs);
    g.sample = [low_derivs, high_derivs](std::mt19937_64& rng) {
        const int order = sample_terms + std::max(low_derivs, high_derivs) + 4;
        // u' = v drawn as a polynomial; u itself never enters
        std::uniform_int_distribution<int> dist(-4, 4);
        const auto v = random_polynomial(rng, Rational(dist(rng)), order - 1, order);
        std::vector<PowerSeries> ud{v};
        for (int k = 0; k < 3; ++k) {
            ud.push_back(plain_derive(ud.back()));
        }
        const auto [b2, b4] = b_quantities(ud);
        return with_derivatives(b2, b4, low_derivs, high_derivs, false);
    };
    return g;
}

RelationGenerator a_generator(int low_derivs, int high_derivs)
{
    const auto nf = fourth_order_normal_form(build_operator(OperatorKind::eq20));
    RelationGenerator g;
    g.symbols = pair_symbols("A2", "A4", low_derivs, high_derivs);
    g.sample = [nf, low_derivs, high_derivs](std::mt19937_64& rng) {
        const int order = sample_terms + std::max(low_derivs, high_derivs) + 10;
        // a generic base point away from the singularities 0 and 1/3125
        std::uniform_int_distribution<int> num(1, 9), den(11, 97);
        const Rational z0 = make_rational(num(rng), den(rng));
        const auto z = random_polynomial(rng, z0, order - 1, order);
        std::vector<PowerSeries> zd{z};
        for (int k = 1; k <= 5; ++k) {
            zd.push_back(plain_derive(zd.back()));
        }
        const auto [a2, a4] =
            a_quantities(zd, nf.q0.evaluate(z), nf.q2.evaluate(z), nf.q2.derivative().evaluate(z));
        return with_derivatives(a2, a4, low_derivs, high_derivs, false);
    };
    return g;
}

RelationReport relation_search(RelationMode mode, int weight_bound, int order, int trials, std::uint64_t seed)
{
    constexpr int low_derivs = 5;
    constexpr int high_derivs = 3;
    RelationReport report;
    const auto g = mode == RelationMode::p2 ? b_generator(low_derivs, high_derivs)
                                            : a_generator(low_derivs, high_derivs);
    report.search = find_relation(g, 2, weight_bound, trials, seed);
    if (!report.search.relation) {
        return report;
    }
    const auto nf = fourth_order_normal_form(build_operator(OperatorKind::eq20));
    const auto ab = ab_quantities(nf.q0, nf.q2, order);
    const auto values = mode == RelationMode::p2 ? with_derivatives(ab.a2, ab.a4, low_derivs, high_derivs, true)
                                                 : with_derivatives(ab.b2, ab.b4, low_derivs, high_derivs, true);
    report.check = evaluate(*report.search.relation, values);
    report.verified = report.check.is_zero() && report.check.order() >= order;
    return report;
}

} // namespace picard
