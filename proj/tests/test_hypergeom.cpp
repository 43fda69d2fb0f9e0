#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <picard/delta_operator.hpp>
#include <picard/frobenius.hpp>
#include <picard/hjet.hpp>
#include <picard/serialize.hpp>

#include "test_support.hpp"

using namespace picard;

namespace {

PowerSeries zs(int val, std::vector<long long> cs, int order)
{
    return PowerSeries::from_integers(Var::z, val, cs, order);
}

Rational R(const char* s)
{
    return parse_rational(s);
}

// {t, z} = t'''/t' - 3/2 (t''/t')^2 with d/dz, from t' directly.
PowerSeries schwarzian_from_first_derivative(const PowerSeries& t1)
{
    const auto t2 = plain_derive(t1);
    const auto t3 = plain_derive(t2);
    const auto r = t2 / t1;
    return t3 / t1 - r * r * Rational(3, 2);
}

// Antiderivative with zero constant term; input must not contain z^-1.
PowerSeries integrate(const PowerSeries& f)
{
    std::vector<Rational> cs;
    for (int e = f.valuation(); e < f.order(); ++e) {
        REQUIRE(e != -1);
        cs.push_back(f.coeff(e) / (e + 1));
    }
    return PowerSeries(f.var(), f.valuation() + 1, std::move(cs), f.order() + 1);
}

// Frobenius pair of  delta^2 - z P(delta)  built independently of the library
// basis code: c_l(H) (H+l)^2 = P(H+l-1) c_{l-1}(H).
std::pair<LogSeries, LogSeries> second_order_basis(const std::vector<Rational>& p, int order)
{
    std::vector<Rational> g0(static_cast<std::size_t>(order)), g1(static_cast<std::size_t>(order));
    HJet c = HJet::constant(2, 1);
    g0[0] = 1;
    for (int l = 1; l < order; ++l) {
        HJet pv(2);
        HJet hp = HJet::constant(2, 1);
        for (const auto& pk : p) {
            pv += hp * pk;
            hp *= HJet::linear(2, l - 1, 1);
        }
        c *= pv;
        c *= HJet::linear(2, l, 1).pow(2).inverse();
        g0[static_cast<std::size_t>(l)] = c[0];
        g1[static_cast<std::size_t>(l)] = c[1];
    }
    PowerSeries a(Var::z, 0, g0, order), b(Var::z, 0, g1, order);
    return {LogSeries(a), LogSeries({b, a})};
}

} // namespace

TEST_CASE("build_operator")
{
    const auto m3 = build_operator(OperatorKind::mirror, 3);
    // delta^2 - z(27 delta^2 + 27 delta + 6)
    CHECK(m3.order() == 2);
    CHECK(m3.coeff(2) == Polynomial::from_integers({1, -27}));
    CHECK(m3.coeff(1) == Polynomial::from_integers({0, -27}));
    CHECK(m3.coeff(0) == Polynomial::from_integers({0, -6}));
    CHECK(m3 == build_operator(OperatorKind::eq1));
    CHECK(build_operator(OperatorKind::mirror, 4) == build_operator(OperatorKind::eq4));

    // delta^4 - 5z(5d+1)(5d+2)(5d+3)(5d+4) = delta^4 - 5z(625d^4 + 1250d^3 + 875d^2 + 250d + 24)
    const auto m5 = build_operator(OperatorKind::eq20);
    CHECK(m5 == build_operator(OperatorKind::mirror, 5));
    CHECK(m5.coeff(4) == Polynomial::from_integers({1, -3125}));
    CHECK(m5.coeff(3) == Polynomial::from_integers({0, -6250}));
    CHECK(m5.coeff(2) == Polynomial::from_integers({0, -4375}));
    CHECK(m5.coeff(1) == Polynomial::from_integers({0, -1250}));
    CHECK(m5.coeff(0) == Polynomial::from_integers({0, -120}));

    // delta^2 - 4z(64 d^2 + 32 d + 3)
    const auto e8 = build_operator(OperatorKind::eighth);
    CHECK(e8.coeff(2) == Polynomial::from_integers({1, -256}));
    CHECK(e8.coeff(1) == Polynomial::from_integers({0, -128}));
    CHECK(e8.coeff(0) == Polynomial::from_integers({0, -12}));

    CHECK_THROWS_AS(build_operator(OperatorKind::mirror, 2), PreconditionError);
}

TEST_CASE("apply_operator basics")
{
    const auto op = build_operator(OperatorKind::eq1);
    const auto one = LogSeries(PowerSeries::constant(Var::z, 1, 10));
    CHECK(apply_operator(op, one) == LogSeries(op.coeff(0).to_series(Var::z, 10)));
    // delta alone on log z gives 1
    const DeltaOperator delta({Polynomial(), Polynomial::constant(1)});
    CHECK(apply_operator(delta, LogSeries::log_var(Var::z, 8)) ==
          LogSeries(PowerSeries::constant(Var::z, 1, 8)));
}

TEST_CASE("Frobenius basis is annihilated by its operator")
{
    for (int s = 3; s <= 6; ++s) {
        const auto op = build_operator(OperatorKind::mirror, s);
        const auto basis = frobenius_basis(s, 40);
        REQUIRE(basis.size() == static_cast<std::size_t>(s - 1));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const auto image = apply_operator(op, basis[j]);
            CHECK(image.is_zero());
            CHECK(image.order() == 40);
            CHECK(basis[j].log_degree() == j);
            // triangular jet: the top log part of f_j is g_0
            CHECK(basis[j].part(j) == basis[0].part(0));
        }
    }
}

TEST_CASE("g_0 equals (sl)!/(l!)^s and g_1 the harmonic-sum formula")
{
    for (int s = 3; s <= 5; ++s) {
        const auto g = frobenius_analytic_parts(s, 30);
        for (unsigned long l = 0; l < 30; ++l) {
            const Integer lf = factorial(l);
            Integer den;
            mpz_pow_ui(den.get_mpz_t(), lf.get_mpz_t(), static_cast<unsigned long>(s));
            const Rational g0 = make_rational(factorial(static_cast<unsigned long>(s) * l), den);
            CHECK(g[0].coeff(static_cast<int>(l)) == g0);
            Rational harmonic = 0;
            for (unsigned long k = l + 1; k <= static_cast<unsigned long>(s) * l; ++k) {
                harmonic += make_rational(1, k);
            }
            CHECK(g[1].coeff(static_cast<int>(l)) == g0 * harmonic * s);
        }
    }
    // s = 3: 3 * 6 * (1/2 + 1/3) = 15
    CHECK(frobenius_analytic_parts(3, 4)[1].coeff(1) == 15);
}

TEST_CASE("s = 5 analytic parts through z^4")
{
    const auto g = frobenius_analytic_parts(5, 5);
    CHECK(g[0] == PowerSeries(Var::z, 0,
                              {R("1"), R("120"), R("113400"), R("168168000"), R("305540235000")}, 5));
    CHECK(g[1] == PowerSeries(Var::z, 1,
                              {R("770"), R("810225"), R("3745679000/3"), R("4627120640625/2")}, 5));
    CHECK(g[2] == PowerSeries(Var::z, 1,
                              {R("575"), R("4208175/4"), R("16964522000/9"), R("180021646778125/48")}, 5));
    CHECK(g[3] == PowerSeries(Var::z, 1,
                              {R("-1150"), R("-3298375/4"), R("-46661619875/54"),
                               R("-325329574909375/288")},
                              5));
}

TEST_CASE("pfq_series")
{
    CHECK(pfq_series({R("1/3"), R("2/3")}, {R("1")}, 27, 4) == zs(0, {1, 6, 90, 1680}, 4));
    CHECK(pfq_series({R("1/4"), R("1/2"), R("3/4")}, {R("1"), R("1")}, 256, 4) ==
          zs(0, {1, 24, 2520, 369600}, 4));
    CHECK(pfq_series({R("1/4"), R("1/2")}, {R("1")}, 0, 5) == PowerSeries::constant(Var::z, 1, 5));
    CHECK_THROWS_AS(pfq_series({R("1")}, {R("-2")}, 1, 5), PreconditionError);
    CHECK_THROWS_AS(pfq_series({R("1")}, {R("0")}, 1, 5), PreconditionError);
    // 2F1 agrees with (3l)!/(l!)^3 to high order
    CHECK(pfq_series({R("1/3"), R("2/3")}, {R("1")}, 27, 40) == frobenius_analytic_parts(3, 40)[0]);
}

TEST_CASE("symmetric square")
{
    CHECK(symmetric_square_check(12).is_zero());
    CHECK(symmetric_square_check(1).is_zero());
    CHECK(symmetric_square_check(20).order() == 20);
    // 1/7 instead of 1/8: [z^1] = 24 - 2 * (1/7)(3/8)(256) = -24/7
    const auto bad = symmetric_square_check(5, R("1/7"), R("3/8"));
    CHECK(bad.valuation() == 1);
    CHECK(bad.coeff(1) == R("-24/7"));
}

TEST_CASE("second-order normal form")
{
    // delta^2:  p = 1/z, r = 0  =>  Q = 1/(4 z^2)
    const DeltaOperator euler({Polynomial(), Polynomial(), Polynomial::constant(1)});
    CHECK(second_order_normal_form(euler) ==
          RationalFunction(Polynomial::constant(R("1/4")), Polynomial::monomial(2, 1)));
    // delta^2 - delta = z^2 d^2/dz^2
    const DeltaOperator plain({Polynomial(), Polynomial::constant(-1), Polynomial::constant(1)});
    CHECK(second_order_normal_form(plain).is_zero());

    const auto q = second_order_normal_form(build_operator(OperatorKind::eq1));
    CHECK(q.pole_order(0) == 2);
    CHECK(q.pole_order(R("1/27")) == 2);
    CHECK(q.denominator().degree() == 4);

    CHECK_THROWS_AS(second_order_normal_form(build_operator(OperatorKind::eq4)), PreconditionError);
}

TEST_CASE("property: Schwarzian of a solution ratio equals 2Q")
{
    std::mt19937_64 rng(99);
    const int order = 24;
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> p{picard::testing::small_rational(rng), picard::testing::small_rational(rng),
                                picard::testing::small_rational(rng)};
        if (p[0] == 0) {
            p[0] = 1;
        }
        // delta^2 - z (p2 delta^2 + p1 delta + p0)
        const DeltaOperator op({Polynomial({0, -p[0]}), Polynomial({0, -p[1]}), Polynomial({1, -p[2]})});
        const auto [f0, f1] = second_order_basis(p, order);
        REQUIRE(apply_operator(op, f0).is_zero());
        REQUIRE(apply_operator(op, f1).is_zero());
        const auto t1 = plain_derive(f1 / f0.as_power_series()).as_power_series();
        const auto lhs = schwarzian_from_first_derivative(t1);
        const auto q = second_order_normal_form(op);
        const auto rhs = q.laurent(Var::z, lhs.order()) * Rational(2);
        CHECK((lhs - rhs).is_zero());
        CHECK(lhs.order() > 10);
    }
}

TEST_CASE("Schwarzian of the s = 3 basis ratio equals 2Q")
{
    const auto basis = frobenius_basis(3, 30);
    const auto t1 = plain_derive(basis[1] / basis[0].as_power_series()).as_power_series();
    const auto lhs = schwarzian_from_first_derivative(t1);
    const auto q = second_order_normal_form(build_operator(OperatorKind::eq1));
    CHECK((lhs - q.laurent(Var::z, lhs.order()) * Rational(2)).is_zero());
}

TEST_CASE("fourth-order normal form")
{
    // z^4 d^4/dz^4 = delta(delta-1)(delta-2)(delta-3)
    const DeltaOperator d4({Polynomial(), Polynomial::constant(-6), Polynomial::constant(11),
                            Polynomial::constant(-6), Polynomial::constant(1)});
    const auto nf0 = fourth_order_normal_form(d4);
    CHECK(nf0.q2.is_zero());
    CHECK(nf0.q0.is_zero());

    const auto nf = fourth_order_normal_form(build_operator(OperatorKind::eq20));
    // Q(z) as printed: 5^8/4 (16/(5^5 z) + 16/(1-5^5 z) + 25/(5^5 z)^2 + 15/(1-5^5 z)^2)
    const Rational c = 3125;
    const RationalFunction x(Polynomial::monomial(1, c));
    const RationalFunction one(Polynomial::constant(1));
    const RationalFunction omx = one - x;
    const RationalFunction q17 = (RationalFunction(Polynomial::constant(16)) / x +
                                  RationalFunction(Polynomial::constant(16)) / omx +
                                  RationalFunction(Polynomial::constant(25)) / (x * x) +
                                  RationalFunction(Polynomial::constant(15)) / (omx * omx)) *
                                 R("390625/4");
    // second printed form: 5^8/4 (25 - 34 x + 24 x^2) / (x^2 (1-x)^2)
    const RationalFunction q17b =
        RationalFunction(Polynomial({R("25"), -34 * c, 24 * c * c}) * R("390625/4"),
                         (Polynomial::monomial(2, c * c) * Polynomial({1, -c}).pow(2)));
    CHECK(q17 == q17b);
    CHECK(nf.q2 == q17 * Rational(10));
    CHECK(nf.q1 == nf.q2.derivative());
    CHECK_THROWS_AS(fourth_order_normal_form(build_operator(OperatorKind::eq1)), PreconditionError);
}

TEST_CASE("reduced fourth-order equation annihilates the gauged basis")
{
    // v_j = f_j / w with u = 1/w satisfying u'/u = a_3/4 = alpha/z + (regular);
    // u = z^alpha h(z), and d/dz(z^alpha S) = z^alpha (S' + alpha S / z).
    const int order = 30;
    const auto op = build_operator(OperatorKind::eq20);
    const auto nf = fourth_order_normal_form(op);
    const auto lam = nf.gauge_log_derivative.laurent(Var::z, order);
    const Rational alpha = -lam.coeff(-1);
    CHECK(alpha == R("3/2"));
    const auto regular = -lam - PowerSeries::monomial(Var::z, -1, alpha, order);
    const auto h = exp(integrate(regular));
    const auto basis = frobenius_basis(5, order);
    const auto b2 = nf.q2.laurent(Var::z, order);
    const auto b1 = nf.q1.laurent(Var::z, order);
    const auto b0 = nf.q0.laurent(Var::z, order);
    for (const auto& f : basis) {
        std::vector<LogSeries> d{f * h};
        for (int k = 1; k <= 4; ++k) {
            const auto& prev = d.back();
            d.push_back(plain_derive(prev) + prev * PowerSeries::monomial(Var::z, -1, alpha, order));
        }
        const auto image = d[4] + d[2] * b2 + d[1] * b1 + d[0] * b0;
        CHECK(image.is_zero());
        CHECK(image.order() > 15);
    }
}

TEST_CASE("operator and series records round trip")
{
    const auto op = build_operator(OperatorKind::eq20);
    CHECK(operator_from_json(to_json(op)) == op);
    const auto j = to_json(op);
    CHECK(j["order"] == 4);
    CHECK(j["coeffs"][4]["coeffs"][1] == "-3125");

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = picard::testing::random_series(rng, Var::q, trial - 3, 6);
        CHECK(series_from_json(to_json(s)) == s);
    }
    const auto f = frobenius_basis(4, 6)[2];
    CHECK(log_series_from_json(to_json(f)) == f);
    CHECK_THROWS_AS(operator_from_json(Json{{"order", 1}, {"coeffs", Json::array()}}), PreconditionError);
}
