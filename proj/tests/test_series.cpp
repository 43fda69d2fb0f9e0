#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <picard/hjet.hpp>
#include <picard/log_series.hpp>
#include <picard/power_series.hpp>

#include "test_support.hpp"

using namespace picard;
using picard::testing::random_series;

namespace {

PowerSeries zs(int val, std::vector<long long> cs, int order)
{
    return PowerSeries::from_integers(Var::z, val, cs, order);
}

PowerSeries qs(int val, std::vector<long long> cs, int order)
{
    return PowerSeries::from_integers(Var::q, val, cs, order);
}

} // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_rational("3745679000/3") == Rational(Integer("3745679000"), 3));
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("x"), PreconditionError);
}

TEST_CASE("arith examples")
{
    const auto a = zs(0, {1, 1}, 6);
    const auto b = zs(0, {1, -1}, 6);
    CHECK(a * b == zs(0, {1, 0, -1}, 6));

    const auto f = zs(0, {1, 6, 90}, 3);
    CHECK(f * PowerSeries::constant(Var::z, 1, 3) == f);

    // Laurent: (q - 15 q^2) * q^-1 = 1 - 15q
    const auto laurent = qs(1, {1, -15}, 3) * PowerSeries::monomial(Var::q, -1, 1, 10);
    CHECK(laurent.valuation() == 0);
    CHECK(laurent == qs(0, {1, -15}, 2));

    CHECK_THROWS_AS(a / PowerSeries(Var::z, 6), PreconditionError);
    CHECK_THROWS_AS(a + PowerSeries::constant(Var::q, 1, 3), PreconditionError);
    CHECK(arith(a, b, SeriesOp::sub) == zs(0, {0, 2}, 6));
}

TEST_CASE("order tracking")
{
    const auto a = zs(0, {1, 2, 3}, 3);
    const auto b = zs(2, {1}, 5);
    CHECK((a * b).order() == 5);
    CHECK((a + b).order() == 3);
    // division by z^2(1 + ..) loses two orders of relative precision
    const auto c = zs(0, {1, 1, 1, 1, 1, 1}, 6) / zs(2, {1, 1, 1, 1}, 6);
    CHECK(c.valuation() == -2);
    CHECK(c.order() == 2);
    CHECK_THROWS_AS(a.coeff(3), PreconditionError);
    CHECK(a.coeff(-4) == 0);
}

TEST_CASE("compose examples")
{
    const auto f = zs(0, {1, 3, -2, 5}, 8);
    CHECK(compose(f, PowerSeries::variable(Var::z, 8)) == f);

    // 1/(1-x) at x = q + q^2 gives the Fibonacci numbers 1, 1, 2, 3, 5.
    const auto geo = PowerSeries::geometric(Var::z, 1, 4);
    const auto inner = qs(1, {1, 1}, 10);
    CHECK(compose(geo, inner) == qs(0, {1, 1, 2, 3}, 4));

    CHECK_THROWS_AS(compose(geo, qs(0, {1, 1}, 5)), PreconditionError);
}

TEST_CASE("compose with a Laurent outer series")
{
    // z^-1 + 1 at z = q + q^2:  1/(q(1+q)) + 1 = q^-1 - 1 + q - q^2 + ... + 1
    const auto outer = zs(-1, {1, 1}, 6);
    const auto inner = qs(1, {1, 1}, 12);
    const auto got = compose(outer, inner);
    CHECK(got.valuation() == -1);
    CHECK(got.coeff(-1) == 1);
    CHECK(got.coeff(0) == 0);
    CHECK(got.coeff(1) == 1);
    CHECK(got.coeff(2) == -1);
}

TEST_CASE("revert examples")
{
    CHECK(revert(PowerSeries::variable(Var::z, 9)) == PowerSeries::variable(Var::q, 9));
    // z + z^2  ->  q - q^2 + 2q^3 - 5q^4 (signed Catalan numbers)
    const auto g = revert(zs(1, {1, 1}, 5));
    CHECK(g == qs(1, {1, -1, 2, -5}, 5));
    CHECK_THROWS_AS(revert(zs(0, {1, 1}, 5)), PreconditionError);
    CHECK_THROWS_AS(revert(zs(2, {1, 1}, 5)), PreconditionError);

    // The s = 3 mirror-map pair, coefficient by coefficient.
    const auto qz = zs(1, {1, 15, 279, 5729, 124554, 2810718, 65114402}, 8);
    CHECK(revert(qz) == qs(1, {1, -15, 171, -1679, 15054, -126981, 1024952}, 8));
}

TEST_CASE("revert agrees with Lagrange inversion and naive substitution")
{
    std::mt19937_64 rng(20260101);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_series(rng, Var::z, 1, 12, true);
        const auto newton = revert(f);
        CHECK(newton == revert_naive(f, Var::q));
        std::vector<Rational> dense(12);
        for (int n = 1; n < 12; ++n) {
            dense[static_cast<std::size_t>(n)] = f.coeff(n);
        }
        const auto lagrange = picard::testing::lagrange_reversion(dense, 12);
        for (int n = 0; n < 12; ++n) {
            CHECK(newton.coeff(n) == lagrange[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("property: reversion round trip")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int order = 3 + trial % 14;
        auto f = random_series(rng, Var::z, 1, order);
        const auto g = revert(f);
        const auto id = compose(f, g);
        CHECK(id.order() == order);
        CHECK(id == PowerSeries::variable(Var::q, order));
        CHECK(compose(g, f) == PowerSeries::variable(Var::z, order));
    }
}

TEST_CASE("exp and log")
{
    CHECK(exp(PowerSeries(Var::q, 6)) == PowerSeries::constant(Var::q, 1, 6));
    const auto f = qs(1, {1, 3}, 9);
    CHECK(log(exp(f)) == f);
    CHECK_THROWS_AS(exp(qs(0, {1, 1}, 5)), PreconditionError);
    CHECK_THROWS_AS(log(qs(0, {2, 1}, 5)), PreconditionError);
    CHECK_THROWS_AS(log(qs(1, {1}, 5)), PreconditionError);
    // exp(q) = sum q^n/n!
    const auto e = exp(PowerSeries::variable(Var::q, 6));
    for (int n = 0; n < 6; ++n) {
        CHECK(e.coeff(n) == make_rational(1, factorial(static_cast<unsigned long>(n))));
    }
}

TEST_CASE("property: exp/log inverse pair")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int order = 2 + trial % 15;
        const auto f = random_series(rng, Var::q, 1 + trial % 2, order);
        CHECK(log(exp(f)) == f);
        const auto one_plus = f + Rational(1);
        CHECK(exp(log(one_plus)) == one_plus);
    }
}

TEST_CASE("derivations")
{
    CHECK(euler_derive(PowerSeries::variable(Var::q, 5)) == PowerSeries::variable(Var::q, 5));
    CHECK(euler_derive(PowerSeries::constant(Var::q, 1, 5)).is_zero());
    CHECK(euler_derive(qs(1, {1, -770}, 4)) == qs(1, {1, -1540}, 4));
    CHECK(euler_derive(qs(-2, {1}, 4), 3) == qs(-2, {-8}, 4));

    CHECK(plain_derive(zs(2, {1}, 5)) == zs(1, {2}, 4));
    CHECK(plain_derive(PowerSeries::constant(Var::z, 7, 5)).is_zero());
    CHECK(plain_derive(zs(0, {1, 6, 90}, 3)) == zs(0, {6, 180}, 2));
}

TEST_CASE("property: delta equals z d/dz")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = random_series(rng, Var::z, -3 + trial % 7, 8);
        const auto lhs = euler_derive(f);
        const auto rhs = plain_derive(f).shifted(1);
        CHECK((lhs - rhs).is_zero());
        CHECK(lhs.order() == rhs.order());
    }
}

TEST_CASE("property: ring laws")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_series(rng, Var::z, trial % 3 - 1, 7);
        const auto b = random_series(rng, Var::z, trial % 2, 6);
        const auto c = random_series(rng, Var::z, 0, 8);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a * b) / b == a.truncated((a * b / b).order()));
    }
}

TEST_CASE("H-jet arithmetic truncates")
{
    const std::size_t len = 4;  // s = 5
    const auto h = HJet::linear(len, 0, 1);
    CHECK(h.pow(3) * h == HJet(len));
    CHECK(h.pow(3) != HJet(len));
    const auto a = HJet::linear(len, 2, 3);
    CHECK(a * a.inverse() == HJet::constant(len, 1));
    CHECK_THROWS_AS(h.inverse(), PreconditionError);
}

TEST_CASE("log-series derivations")
{
    // delta(log z) = 1
    const auto lz = LogSeries::log_var(Var::z, 6);
    CHECK(euler_derive(lz) == LogSeries(PowerSeries::constant(Var::z, 1, 6)));
    // d/dz log z = 1/z
    CHECK(plain_derive(lz) == LogSeries(PowerSeries::monomial(Var::z, -1, 1, 5)));
    // (log z)^2 stored as 2 * log^2/2!
    const auto sq = lz * lz;
    CHECK(sq.log_degree() == 2);
    CHECK(sq.part(2) == PowerSeries::constant(Var::z, 2, 6));
    // delta(log^2 z) = 2 log z
    CHECK(euler_derive(sq) == lz * Rational(2));
}

TEST_CASE("property: log-series delta rule against a direct product rule")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p0 = random_series(rng, Var::z, 0, 7);
        const auto p1 = random_series(rng, Var::z, 1, 7);
        const auto f = LogSeries({p0, p1});
        // f = p0 + p1 log z  =>  delta f = delta p0 + p1 + (delta p1) log z
        const auto expect = LogSeries({euler_derive(p0) + p1, euler_derive(p1)});
        CHECK(euler_derive(f) == expect);
        // z d/dz agrees with delta on log-series too
        CHECK(euler_derive(f) == plain_derive(f) * PowerSeries::variable(Var::z, 10));
    }
}
