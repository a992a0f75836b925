#include <doctest.h>

#include <random>

#include "invhilb/series/dense_poly.hpp"
#include "invhilb/series/factored_series.hpp"
#include "invhilb/series/rational.hpp"
#include "invhilb/series/truncated_series.hpp"

using namespace invhilb;

namespace {

DensePoly poly(std::initializer_list<long> c)
{
    std::vector<BigRational> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return DensePoly(v);
}

std::vector<BigRational> q(std::initializer_list<long> c)
{
    std::vector<BigRational> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return v;
}

DensePoly random_poly(std::mt19937_64& rng, int max_deg)
{
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coef(-9, 9);
    std::vector<BigRational> v;
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k) {
        v.emplace_back(coef(rng), 1 + (k % 3));
    }
    for (auto& x : v) {
        x.canonicalize();
    }
    return DensePoly(v);
}

} // namespace

TEST_CASE("rationals are canonical and parse exactly")
{
    CHECK(make_rational(6, -4) == BigRational(-3, 2));
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(BigRational(0)) == "0");
    CHECK(parse_rational("-10/4") == BigRational(-5, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK(factorial(20).get_str() == "2432902008176640000");
}

TEST_CASE("polynomial arithmetic")
{
    CHECK(poly({1, -1}) * poly({1, 0, -1}) == poly({1, -1, -1, 1}));
    CHECK((poly({1, 2, 3}) * DensePoly()).is_zero());
    CHECK(poly({1, 1}).pow(2) == poly({1, 2, 1}));
    CHECK(poly({1, 1}) - poly({1, 1}) == DensePoly());
    CHECK(DensePoly().degree() == -1);
    CHECK(poly({0, 0, 0}).is_zero());
    CHECK(to_string(poly({1, -1, -1, 1})) == "1 - t - t^2 + t^3");

    const auto [quo, rem] = poly({-1, 0, 0, 1}).divmod(poly({-1, 1}));
    CHECK(quo == poly({1, 1, 1}));
    CHECK(rem.is_zero());
    CHECK_THROWS_AS(poly({1}).divmod(DensePoly()), std::domain_error);

    DensePoly p = poly({1, 0, 0, -1});
    CHECK(p.divisible_by_one_minus_t_pow(3));
    CHECK_FALSE(p.divisible_by_one_minus_t_pow(2));
    p.div_one_minus_t_pow(3);
    CHECK(p == poly({1}));
    CHECK_THROWS_AS(poly({1, 1}).div_one_minus_t_pow(1), std::domain_error);
}

TEST_CASE("polynomial ring axioms on random inputs")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_poly(rng, 6);
        const auto b = random_poly(rng, 6);
        const auto c = random_poly(rng, 6);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero() && !b.is_zero()) {
            CHECK((a * b).degree() == a.degree() + b.degree());
        }
        DensePoly m = a;
        m.mul_one_minus_t_pow(2);
        CHECK(m == a * DensePoly::one_minus_t_pow(2));
    }
}

TEST_CASE("phi")
{
    CHECK(phi(0) == poly({1}));
    CHECK(phi(1) == poly({1, -1}));
    CHECK(phi(2) == poly({1, -1, -1, 1}));
    CHECK(phi(3).degree() == 6);
    CHECK(phi(3).evaluate(1) == 0);
    // Direct product of the factors.
    DensePoly direct = poly({1});
    for (int k = 1; k <= 6; ++k) {
        direct = direct * DensePoly::one_minus_t_pow(static_cast<std::size_t>(k));
    }
    CHECK(phi(6) == direct);
    CHECK(phi(6).degree() == 21);
    CHECK_THROWS_AS(phi(-1), std::invalid_argument);
}

TEST_CASE("series inverse")
{
    CHECK(series_inv(TruncatedSeries(q({1, -1}), 3)) == TruncatedSeries(q({1, 1, 1, 1}), 3));
    CHECK(series_inv(TruncatedSeries::one(5)) == TruncatedSeries::one(5));
    // (1 + t + t^2 + ...)(1 + t^2 + t^4 + ...) through t^4.
    CHECK(series_inv(TruncatedSeries(q({1, -1, -1, 1}), 4)) == TruncatedSeries(q({1, 1, 2, 2, 3}), 4));
    CHECK_THROWS_WITH_AS(series_inv(TruncatedSeries(q({0, 1}), 3)), "non-unit series", std::domain_error);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<BigRational> c(8);
        for (auto& x : c) {
            x = coef(rng);
        }
        if (c[0] == 0) {
            c[0] = 3;
        }
        const TruncatedSeries s(c, 7);
        CHECK(s * series_inv(s) == TruncatedSeries::one(7));
    }
}

TEST_CASE("truncated arithmetic keeps the smaller order")
{
    const TruncatedSeries a(q({1, 2, 3, 4}), 3);
    const TruncatedSeries b(q({1, 1}), 1);
    CHECK((a + b).order() == 1);
    CHECK((a * b).order() == 1);
    CHECK((a * b) == TruncatedSeries(q({1, 3}), 1));
    CHECK(TruncatedSeries(q({1, 2, 3}), 5).coeffs().size() == 6);
    CHECK(TruncatedSeries(q({1, 2, 3}), 1) == TruncatedSeries(q({1, 2}), 1));
}

TEST_CASE("expanding factored series")
{
    CHECK(expand(FactoredSeries(poly({1}), {{1, 1}}), 2) == TruncatedSeries(q({1, 1, 1}), 2));
    CHECK(expand(FactoredSeries(poly({1, 0, 1}), {{1, 2}, {2, 2}}), 2) == TruncatedSeries(q({1, 2, 6}), 2));
    CHECK(expand(FactoredSeries(DensePoly(), {{1, 3}}), 4).is_zero());
    CHECK_THROWS_AS(FactoredSeries(poly({1}), {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(FactoredSeries(poly({1}), {{1, -1}}), std::invalid_argument);

    const FactoredSeries f(poly({1, 0, 1}), {{1, 2}, {2, 2}});
    const auto long_run = expand(f, 30);
    CHECK(long_run.truncated(12) == expand(f, 12));
    // 1 / (1-t)^4: binomial(d + 3, 3).
    const auto quartic = expand(FactoredSeries::reciprocal({{1, 4}}), 10);
    for (int d = 0; d <= 10; ++d) {
        CHECK(quartic[static_cast<std::size_t>(d)] == BigRational((d + 1) * (d + 2) * (d + 3) / 6));
    }
}

TEST_CASE("factored equality")
{
    const FactoredSeries a(poly({1}), {{1, 1}});
    const FactoredSeries b(poly({1, 1}), {{2, 1}});
    const FactoredSeries c(poly({1}), {{2, 1}});
    CHECK(factored_equal(a, b));
    CHECK_FALSE(factored_equal(a, c));
    // (1 + t) / (1 - t^2) is left alone: only whole (1 - t^i) factors cancel.
    CHECK(b.cancelled() == b);
    CHECK(FactoredSeries(poly({1, 0, -1}), {{1, 1}, {2, 1}}).cancelled() == a);
    CHECK(factored_equal(a.over_denominator({{1, 2}, {2, 1}}), a));
    CHECK_THROWS_AS(c.over_denominator({{1, 3}}), std::domain_error);
    CHECK(to_string(FactoredSeries(poly({1, 0, 1}), {{1, 2}, {2, 2}})) == "(1 + t^2) / ((1-t)^2 (1-t^2)^2)");
}

TEST_CASE("factored equality is an equivalence on random pairs")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> pick(1, 4);
    std::vector<FactoredSeries> items;
    for (int k = 0; k < 100; ++k) {
        // Either a rescaled copy of an earlier entry or something new.
        if (!items.empty() && k % 2 == 1) {
            const auto& base = items[static_cast<std::size_t>(k / 3) % items.size()];
            const int extra = pick(rng);
            DensePoly num = base.numerator();
            num.mul_one_minus_t_pow(static_cast<std::size_t>(extra));
            auto den = base.denominator();
            den[extra] += 1;
            items.emplace_back(num, den);
        } else {
            items.emplace_back(random_poly(rng, 4), DenominatorExponents{{pick(rng), pick(rng)}});
        }
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
        CHECK(factored_equal(items[i], items[i]));
        for (std::size_t j = 0; j < items.size(); ++j) {
            const bool ij = factored_equal(items[i], items[j]);
            CHECK(ij == factored_equal(items[j], items[i]));
            CHECK(ij == (expand(items[i], 25) == expand(items[j], 25)));
        }
    }
}
