#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <picard/delta_operator.hpp>
#include <picard/frobenius.hpp>
#include <picard/nonlinear.hpp>
#include <picard/relation_search.hpp>
#include <picard/serialize.hpp>
#include <picard/wronskian.hpp>

#include "test_support.hpp"

using namespace picard;
using picard::testing::random_series;

namespace {

LogSeries ls(const PowerSeries& p)
{
    return LogSeries(p);
}

PowerSeries z_var(int order)
{
    return PowerSeries::variable(Var::z, order);
}

// Rank of the coefficient vectors by plain rational elimination.
std::size_t rational_rank(const std::vector<PowerSeries>& fs, int order)
{
    std::vector<std::vector<Rational>> m;
    for (const auto& f : fs) {
        std::vector<Rational> row;
        for (int k = 0; k < order; ++k) {
            row.push_back(f.coeff(k));
        }
        m.push_back(row);
    }
    std::size_t rank = 0;
    for (int c = 0; c < order && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][static_cast<std::size_t>(c)] == 0) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[p], m[rank]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            const Rational f = m[i][static_cast<std::size_t>(c)] / m[rank][static_cast<std::size_t>(c)];
            for (int j = c; j < order; ++j) {
                m[i][static_cast<std::size_t>(j)] -= f * m[rank][static_cast<std::size_t>(j)];
            }
        }
        ++rank;
    }
    return rank;
}

DiffPolynomial<PowerSeries>::Exponents exps(std::initializer_list<int> e)
{
    return e;
}

} // namespace

TEST_CASE("DiffPolynomial bookkeeping")
{
    DiffPolynomial<Rational> p({{"x", 2}, {"y", 4}});
    p.add_term({2, 0}, 3);
    p.add_term({0, 1}, -1);
    CHECK(p.weight() == 4);
    CHECK(p.degree() == 2);
    CHECK(p.is_quasi_homogeneous());
    p.add_term({1, 0}, 5);
    CHECK_FALSE(p.is_quasi_homogeneous());
    p.add_term({1, 0}, -5);
    CHECK(p.is_quasi_homogeneous());
    CHECK(p.terms().size() == 2);
    CHECK_THROWS_AS(p.add_term({1}, 1), PreconditionError);
    // 3x^2 - y at x = 1 + q, y = 3 + 6q + 3q^2
    const auto x = PowerSeries::from_integers(Var::q, 0, {1, 1}, 5);
    const auto y = PowerSeries::from_integers(Var::q, 0, {3, 6, 3}, 5);
    CHECK(evaluate(p, {x, y}).is_zero());
    CHECK(DiffPolynomial<Rational>({{"x", 1}}).degree() == -1);
}

TEST_CASE("Wronskian examples")
{
    const int n = 10;
    const auto f = random_series(*new std::mt19937_64(3), Var::z, 0, n);
    const auto w1 = wronskian({ls(f)});
    CHECK(w1.value == ls(f));
    CHECK(w1.status == WronskianStatus::nonzero);

    const auto one = ls(PowerSeries::constant(Var::z, 1, n));
    const auto w = wronskian({one, LogSeries::log_var(Var::z, n)});
    CHECK(w.value == ls(PowerSeries::monomial(Var::z, -1, 1, w.order)));

    const auto z = z_var(n);
    const auto wz = wronskian({ls(z), ls(z * z)});
    CHECK(wz.value.as_power_series() == (z * z).truncated(wz.order));
    CHECK(wronskian({one, ls(z)}).value.as_power_series() == PowerSeries::constant(Var::z, 1, n - 1));

    const auto dep = wronskian({ls(z), ls(z * Rational(3))});
    CHECK(dep.status == WronskianStatus::indeterminate);
    CHECK(dep.value.is_zero());
    CHECK_THROWS_AS(wronskian({}), PreconditionError);
    CHECK_THROWS_AS(wronskian({ls(z), ls(PowerSeries::variable(Var::q, n))}), PreconditionError);
}

TEST_CASE("property: Wronskian vanishes iff the inputs are dependent")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> small(-3, 3);
    const int n = 12;
    int dependent_cases = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int m = 2 + trial % 3;
        std::vector<PowerSeries> fs;
        for (int j = 0; j < m; ++j) {
            fs.push_back(random_series(rng, Var::z, 0, n));
        }
        if (trial % 2 == 0) {
            PowerSeries combo(Var::z, n);
            for (int j = 0; j + 1 < m; ++j) {
                combo += fs[static_cast<std::size_t>(j)] * Rational(small(rng));
            }
            fs.back() = combo;
        }
        std::vector<LogSeries> lfs;
        for (const auto& f : fs) {
            lfs.push_back(ls(f));
        }
        const auto w = wronskian(lfs);
        const bool dependent = rational_rank(fs, n) < fs.size();
        dependent_cases += dependent ? 1 : 0;
        CHECK((w.status == WronskianStatus::indeterminate) == dependent);
        CHECK(w.value.is_zero() == dependent);
    }
    CHECK(dependent_cases >= 60);
}

TEST_CASE("property: operator equals W(y, f) / W(f)")
{
    const int n = 16;
    const auto op = build_operator(OperatorKind::eq1);
    const auto dz = to_dz_form(op);
    const auto basis = frobenius_basis(3, n);
    const auto wf = wronskian({basis[0], basis[1]}).value;
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const auto y = random_series(rng, Var::z, 0, n);
        const auto y1 = plain_derive(y);
        const auto y2 = plain_derive(y1);
        const auto dy = y2 + dz.coeffs[1].laurent(Var::z, n) * y1 + dz.coeffs[0].laurent(Var::z, n) * y;
        const auto lhs = wf * ls(dy);
        const auto rhs = wronskian({ls(y), basis[0], basis[1]}).value;
        const int order = std::min(lhs.order(), rhs.order());
        CHECK((lhs.truncated(order) - rhs.truncated(order)).is_zero());
        CHECK(order >= n - 6);
    }
}

TEST_CASE("property: W(g f) = g^m W(f)")
{
    std::mt19937_64 rng(13);
    for (int s : {3, 5}) {
        const int n = 12;
        const auto basis = frobenius_basis(s, n);
        const auto wf = wronskian(basis).value;
        const int m = static_cast<int>(basis.size());
        for (int trial = 0; trial < 100; ++trial) {
            const auto g = random_series(rng, Var::z, 0, n, true);
            std::vector<LogSeries> gf;
            for (const auto& f : basis) {
                gf.push_back(f * g);
            }
            const auto lhs = wronskian(gf).value;
            const auto rhs = wf * g.pow(m);
            const int order = std::min(lhs.order(), rhs.order());
            CHECK((lhs.truncated(order) - rhs.truncated(order)).is_zero());
        }
    }
}

TEST_CASE("R[t] for a second-order operator")
{
    const int n = 28;
    const auto basis = frobenius_basis(3, n);
    const auto r = r_operator(basis);
    CHECK(r.normalization == -2);
    CHECK(r.poly.symbols().size() == 3);
    CHECK(r.poly.terms().size() == 3);
    const auto lead = r.poly.coefficient(exps({1, 0, 1}));
    REQUIRE(lead);
    CHECK(*lead == PowerSeries::constant(Var::z, 1, lead->order()));
    const auto t2 = r.poly.coefficient(exps({0, 2, 0}));
    REQUIRE(t2);
    CHECK(*t2 == PowerSeries::constant(Var::z, Rational(-3, 2), t2->order()));
    // t'^2 coefficient is -2Q: R = t'^2 ({t, z} - 2Q)
    const auto q = second_order_normal_form(build_operator(OperatorKind::eq1));
    const auto t1 = r.poly.coefficient(exps({2, 0, 0}));
    REQUIRE(t1);
    CHECK(*t1 == q.laurent(Var::z, t1->order()) * Rational(-2));

    const auto f0 = basis[0].as_power_series();
    const auto ratio = basis[1] / f0;
    const auto res = evaluate(r.poly, derivative_values(ratio, 3));
    CHECK(res.is_zero());
    CHECK(res.order() >= 20);
    // another ratio of solutions
    const auto other = basis[1] / (f0 * Rational(2) + PowerSeries::constant(Var::z, 0, n));
    CHECK(evaluate(r.poly, derivative_values(other, 3)).is_zero());
    // a non-solution ratio is not annihilated
    const auto bad = basis[1] / (f0 + z_var(n));
    CHECK_FALSE(evaluate(r.poly, derivative_values(bad, 3)).is_zero());
}

TEST_CASE("R[t] for the quintic basis has order 7")
{
    const int n = 44;
    const auto basis = frobenius_basis(5, n);
    const auto r = r_operator(basis);
    REQUIRE(r.poly.symbols().size() == 7);
    CHECK(r.poly.symbols().back().weight == 7);
    bool uses_top = false;
    for (const auto& [e, c] : r.poly.terms()) {
        uses_top = uses_top || e.back() > 0;
        CHECK(DiffPolynomial<PowerSeries>::monomial_degree(e) == 4);
    }
    CHECK(uses_top);
    const auto f0 = basis[0].as_power_series();
    for (std::size_t j = 1; j < basis.size(); ++j) {
        const auto res = evaluate(r.poly, derivative_values(basis[j] / f0, 7));
        CHECK(res.is_zero());
        CHECK(res.order() >= 10);
    }
    std::vector<LogSeries> degenerate{basis[0], basis[0] * Rational(2)};
    CHECK_THROWS_AS(r_operator(degenerate), PreconditionError);
}

TEST_CASE("Schwarzian")
{
    const int n = 12;
    const auto q = PowerSeries::variable(Var::q, n);
    CHECK(schwarzian(q) == PowerSeries::constant(Var::q, Rational(-1, 2), n - 1));
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const auto z = random_series(rng, Var::q, 1, n, true);
        const auto one = PowerSeries::constant(Var::q, 1, n);
        const auto moebius = z * Rational(2) / (z + one);
        const auto a = schwarzian(z);
        const auto b = schwarzian(moebius);
        const int order = std::min(a.order(), b.order());
        CHECK(a.truncated(order) == b.truncated(order));
        // scaling t leaves {z, t} scaled by the square; affine maps of z are exact invariants
        const auto c = schwarzian(z * Rational(3) + one * Rational(5));
        CHECK(c.truncated(order) == a.truncated(order));
    }
}

TEST_CASE("Schwarzian equation for s = 3, 4")
{
    for (int s : {3, 4}) {
        const auto r = verify_schwarzian_equation(s, 20);
        CHECK(r.is_zero());
        CHECK(r.order() >= 20);
    }
    const auto m = mirror_pipeline(3, 20);
    const auto q = second_order_normal_form(build_operator(OperatorKind::eq1));
    CHECK_FALSE(schwarzian_equation_residual(m.z_of_q, q * Rational(2)).is_zero());
    CHECK_THROWS_AS(verify_schwarzian_equation(5, 10), PreconditionError);
}

TEST_CASE("second-order coupling of mirror map and Yukawa coupling")
{
    const auto r = verify_second_order_coupling(24);
    CHECK(r.is_zero());
    CHECK(r.order() >= 24);
    const auto m = mirror_pipeline(5, 20);
    const auto k = yukawa_from_mirror(m);
    const auto broken = second_order_coupling_residual(m.z_of_q, k, RationalFunction());
    CHECK_FALSE(broken.is_zero());
    // leading cancellation: 2 * 1/4 - 1/2 at q^0
    CHECK(broken.coeff(0) == Rational(-1, 2));
    CHECK(quintic_potential() == fourth_order_normal_form(build_operator(OperatorKind::eq20)).q2 * Rational(1, 10));
}

TEST_CASE("fourth-order coupling")
{
    const auto r = verify_fourth_order_coupling(24);
    CHECK(r.is_zero());
    CHECK(r.order() >= 24);

    const auto numerator = derived_quartic_numerator(30);
    CHECK(numerator == PowerSeries(Var::z, 1,
                                   {Rational(-5750), Rational(-63671875), Rational(Integer("-19531250000"))},
                                   numerator.order()));
    CHECK(numerator.order() >= 30);
    // the second displayed form, -(2 x + 163 x^2 + 8 x^3)/25 with x = 5^5 z, disagrees
    CHECK(numerator.coeff(1) != Rational(-2 * 3125, 25));

    const auto m = mirror_pipeline(5, 20);
    const auto k = yukawa_from_mirror(m);
    auto coeffs = default_quartic_coefficients();
    coeffs[2] = 48;
    CHECK_FALSE(fourth_order_coupling_residual(m.z_of_q, k, quintic_quartic_potential(), coeffs).is_zero());
}

TEST_CASE("A and B quantities")
{
    const int n = 10;
    const auto zero = PowerSeries(Var::t, n);
    const auto [b2c, b4c] = b_quantities({zero, zero, zero, zero});
    CHECK(b2c.is_zero());
    CHECK(b4c.is_zero());
    const auto [b2t, b4t] = b_quantities({PowerSeries::constant(Var::t, 1, n), zero, zero, zero});
    CHECK(b2t == PowerSeries::constant(Var::t, Rational(-1, 2), n));
    CHECK(b4t == PowerSeries::constant(Var::t, Rational(1, 16), n));

    const auto nf = fourth_order_normal_form(build_operator(OperatorKind::eq20));
    const auto ab = ab_quantities(nf.q0, nf.q2, 20);
    CHECK(ab.a2.valuation() >= 1);
    CHECK(ab.a2.order() >= 20);
    CHECK(ab.a2 == ab.b2);
    CHECK(ab.a4 == ab.b4);
    CHECK(ab.a2.coeff(1) == 1150);
}

TEST_CASE("relation search machinery")
{
    // kernel of [1 2 3; 2 4 6] over the integers
    const auto null = integer_nullspace({{1, 2, 3}, {2, 4, 6}}, 3);
    CHECK(null.size() == 2);
    for (const auto& v : null) {
        CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
    }
    CHECK(integer_nullspace({{1, 0}, {0, 1}}, 2).empty());

    const auto symbols = pair_symbols("B2", "B4", 5, 3);
    const std::vector<int> sizes{1, 1, 3, 3, 6, 7, 11, 14, 22, 27, 40};
    for (int w = 2; w <= 12; ++w) {
        CHECK(monomials_of_weight(symbols, w).size() == static_cast<std::size_t>(sizes[static_cast<std::size_t>(w - 2)]));
    }

    // B2 against 2 B2
    const auto b = b_generator(0, 0);
    RelationGenerator pair;
    pair.symbols = {{"x1", 2}, {"x2", 2}};
    pair.sample = [b](std::mt19937_64& rng) {
        const auto v = b.sample(rng);
        return std::vector<PowerSeries>{v[0], v[0] * Rational(2)};
    };
    const auto found = find_relation(pair, 2, 2, 4, 7);
    REQUIRE(found.relation);
    DiffPolynomial<Rational> expected(pair.symbols);
    expected.add_term({1, 0}, 2);
    expected.add_term({0, 1}, -1);
    CHECK(found.relation->terms() == expected.terms());

    const auto none = find_relation(b_generator(5, 3), 2, 8, 10, 1);
    CHECK_FALSE(none.relation);
    CHECK(none.message.find("no relation up to weight 8") != std::string::npos);
}

TEST_CASE("B-relation of weight 12 holds on the quintic mirror map")
{
    const auto report = relation_search(RelationMode::p2, 12, 16, 40, 1);
    REQUIRE(report.search.relation);
    const auto& rel = *report.search.relation;
    CHECK(rel.weight() == 12);
    CHECK(rel.is_quasi_homogeneous());
    CHECK(report.search.degree == 5);
    CHECK(report.search.certified_trials >= 3);
    CHECK(report.verified);
    CHECK(report.check.is_zero());
    CHECK(report.check.order() >= 16);

    // fresh inputs with a different seed
    const auto g = b_generator(5, 3);
    std::mt19937_64 rng(987654321);
    for (int i = 0; i < 5; ++i) {
        CHECK(evaluate(rel, g.sample(rng)).is_zero());
    }
    // same search with another seed finds the same relation
    const auto again = relation_search(RelationMode::p2, 12, 16, 40, 99);
    REQUIRE(again.search.relation);
    CHECK(again.search.relation->terms() == rel.terms());

    // the displayed -135/64 in place of -135/16 breaks the relation on the mirror map
    const auto nf = fourth_order_normal_form(build_operator(OperatorKind::eq20));
    const auto m = mirror_pipeline(5, 24);
    std::vector<PowerSeries> zd{m.z_of_q};
    for (int k = 1; k <= 5; ++k) {
        zd.push_back(euler_derive(zd.back()));
    }
    const auto [a2, a4] = a_quantities(zd, nf.q0.evaluate(m.z_of_q), nf.q2.evaluate(m.z_of_q),
                                       nf.q2.derivative().evaluate(m.z_of_q));
    const auto r2 = zd[2] / zd[1];
    const auto printed = a4 + r2.pow(4) * (Rational(135, 16) - Rational(135, 64));
    std::vector<PowerSeries> vals{a2};
    for (int k = 1; k <= 5; ++k) {
        vals.push_back(euler_derive(vals.back()));
    }
    vals.push_back(printed);
    for (int k = 1; k <= 3; ++k) {
        vals.push_back(euler_derive(vals.back()));
    }
    CHECK_FALSE(evaluate(rel, vals).is_zero());
}

TEST_CASE("dual search reports its parameters when nothing is found")
{
    const auto report = relation_search(RelationMode::p1, 10, 16, 20, 3);
    CHECK_FALSE(report.search.relation);
    CHECK_FALSE(report.verified);
    CHECK(report.search.message.find("weight 10") != std::string::npos);
    CHECK(report.search.message.find("seed 3") != std::string::npos);
}

TEST_CASE("differential polynomial records round trip")
{
    DiffPolynomial<Rational> p({{"B2", 2}, {"B4", 4}});
    p.add_term({2, 0}, Rational(-3, 7));
    p.add_term({0, 1}, 5);
    const auto j = to_json(p);
    CHECK(j["terms"][0]["weight"] == 4);
    const auto back = diff_polynomial_from_json(j);
    CHECK(back.terms() == p.terms());
    CHECK(back.symbols().size() == 2);
    auto bad = j;
    bad["terms"][0]["weight"] = 3;
    CHECK_THROWS_AS(diff_polynomial_from_json(bad), PreconditionError);
    CHECK_THROWS_AS(diff_polynomial_from_json(Json{{"terms", 1}}), PreconditionError);
}
