#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "invhilb/molien/molien.hpp"
#include "invhilb/orbit/echelon.hpp"
#include "invhilb/orbit/orbit_ring.hpp"
#include "oracles.hpp"

using namespace invhilb;

namespace {

MultiPoly x(const GammaSpec& g, int i, int l) { return MultiPoly::x(g, i, l); }
MultiPoly y(const GammaSpec& g, int i, int l) { return MultiPoly::y(g, i, l); }

std::vector<Generator> without(std::vector<Generator> gens, int r, int s)
{
    std::erase_if(gens, [&](const Generator& g) { return g.r == r && g.s == s; });
    return gens;
}

Monomial random_monomial(const GammaSpec& g, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> e(0, 2);
    Monomial m(static_cast<std::size_t>(2 * g.total()));
    for (auto& v : m) {
        v = e(rng);
    }
    return m;
}

} // namespace

TEST_CASE("variable layout")
{
    const GammaSpec g({2, 3});
    CHECK(x_index(g, 1, 1) == 0);
    CHECK(x_index(g, 2, 3) == 4);
    CHECK(y_index(g, 1, 2) == 6);
    CHECK_THROWS_AS(x_index(g, 1, 3), std::out_of_range);
    CHECK_THROWS_AS(y_index(g, 3, 1), std::out_of_range);
    CHECK(x(g, 1, 1).nvars() == 10);
    CHECK_THROWS_AS(x(g, 1, 1) + x(GammaSpec({2}), 1, 1), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic in x and y")
{
    const GammaSpec g({2});
    const auto f = x(g, 1, 1) * x(g, 1, 1) * y(g, 1, 2) + x(g, 1, 2) * BigRational(3);
    CHECK(f.degree() == 3);
    CHECK(f.coefficient({0, 1, 0, 0}) == 3);
    CHECK(f.derivative(x_index(g, 1, 1)) == x(g, 1, 1) * y(g, 1, 2) * BigRational(2));
    CHECK(f.evaluate({2, 5, 7, 11}) == BigRational(4 * 11 + 15));
    CHECK((f - f).is_zero());
    CHECK(MultiPoly(g).degree() == -1);
    MultiPoly bad(g);
    CHECK_THROWS_AS(bad.add_term({1, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(bad.add_term({-1, 0, 0, 0}, 1), std::invalid_argument);
}

TEST_CASE("permutation action")
{
    const GammaSpec g({2});
    const GammaPerm swap(g, {Permutation({2, 1})});
    const auto f = x(g, 1, 1) * x(g, 1, 1) * y(g, 1, 2);
    CHECK(apply_perm(swap, f) == x(g, 1, 2) * x(g, 1, 2) * y(g, 1, 1));
    CHECK(apply_perm(swap, apply_perm(swap, f)) == f);
    CHECK_THROWS_AS(GammaPerm(g, {Permutation({1, 2, 3})}), std::invalid_argument);
    CHECK_THROWS_AS(apply_perm(GammaPerm::identity(GammaSpec({3})), f), std::invalid_argument);

    // (a b) f = a (b f)
    const GammaSpec h({3, 2});
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = GammaPerm::random(h, rng);
        const auto b = GammaPerm::random(h, rng);
        const auto p = MultiPoly::monomial(h, random_monomial(h, rng), 2) + MultiPoly::monomial(h, random_monomial(h, rng));
        CHECK(apply_perm(a * b, p) == apply_perm(a, apply_perm(b, p)));
    }
}

TEST_CASE("orbit sums")
{
    const GammaSpec g({2});
    // x11 y11 -> x11 y11 + x12 y12
    CHECK(orbit_sum(x(g, 1, 1) * y(g, 1, 1)) == power_invariant(1, 1, 1, g));

    const GammaSpec g3({3});
    // P10 P01 - P11 = sum over l != m of x_l y_m
    const auto lhs = power_invariant(1, 1, 0, g3) * power_invariant(1, 0, 1, g3) - power_invariant(1, 1, 1, g3);
    CHECK(lhs == orbit_sum(x(g3, 1, 1) * y(g3, 1, 2)));
    CHECK(lhs.terms().size() == 6);

    CHECK(canonical_monomial(g3, {0, 2, 1, 1, 0, 0}) == Monomial{0, 1, 2, 1, 0, 0});
    CHECK(monomial_orbit(g3, {1, 0, 0, 0, 0, 0}).size() == 3);
    CHECK(orbit_size(g3, {1, 1, 0, 1, 0, 0}) == 6);
    CHECK(orbit_size(g3, {1, 1, 1, 0, 0, 0}) == 1);
}

TEST_CASE("power invariants")
{
    const GammaSpec g({2, 3});
    CHECK(power_invariant(1, 2, 1, g) == x(g, 1, 1) * x(g, 1, 1) * y(g, 1, 1) + x(g, 1, 2) * x(g, 1, 2) * y(g, 1, 2));
    CHECK(left_power(2, 1, g) == x(g, 2, 1) + x(g, 2, 2) + x(g, 2, 3));
    CHECK(right_power(1, 2, g) == power_invariant(1, 0, 2, g));
    CHECK_THROWS_AS(power_invariant(1, 0, 0, g), std::invalid_argument);
    CHECK_THROWS_AS(power_invariant(1, -1, 2, g), std::invalid_argument);
    CHECK_THROWS_AS(power_invariant(3, 1, 0, g), std::out_of_range);

    std::mt19937_64 rng(23);
    const auto gens = fundamental_generators(g);
    for (int trial = 0; trial < 50; ++trial) {
        const auto sigma = GammaPerm::random(g, rng);
        for (const auto& gen : gens) {
            CHECK(apply_perm(sigma, gen.poly) == gen.poly);
        }
    }
}

TEST_CASE("generator lists")
{
    CHECK(fundamental_generators(GammaSpec({2})).size() == 5);
    CHECK(fundamental_generators(GammaSpec({3})).size() == 9);
    CHECK(fundamental_generators(GammaSpec({2, 2})).size() == 10);
    const auto gens = fundamental_generators(GammaSpec({2}));
    CHECK(gens[0].r == 1);
    CHECK(gens[0].s == 0);
    CHECK(gens[4].r == 0);
    CHECK(gens[4].s == 2);
}

TEST_CASE("orbit counts match the series")
{
    const GammaSpec g2({2});
    CHECK(invariant_dimension(g2, 0) == 1);
    CHECK(invariant_dimension(g2, 1) == 2);
    CHECK(invariant_dimension(g2, 2) == 6);
    const GammaSpec g3({3});
    const auto series = expand(hilbert_double_classsum(3), 8);
    for (int d = 0; d <= 8; ++d) {
        CHECK(BigRational(static_cast<unsigned long>(invariant_dimension(g3, d))) == series[static_cast<std::size_t>(d)]);
    }
    for (const auto& ns : std::vector<std::vector<int>>{{2, 2}, {1, 3}}) {
        for (int d = 0; d <= 5; ++d) {
            CHECK(invariant_dimension(GammaSpec(ns), d) == oracle::burnside_orbit_count(ns, d));
        }
    }
}

TEST_CASE("orbits partition the monomials")
{
    for (const auto& ns : std::vector<std::vector<int>>{{2}, {3}, {2, 2}}) {
        const GammaSpec g(ns);
        for (int d = 0; d <= 4; ++d) {
            BigInt total = 0;
            for (const auto& rep : orbit_representatives(g, d)) {
                CHECK(canonical_monomial(g, rep) == rep);
                total += orbit_size(g, rep);
            }
            CHECK(total == monomial_count(g, d));
            CHECK(BigInt(static_cast<unsigned long>(degree_monomials(g, d).size())) == monomial_count(g, d));
        }
    }

    // Monomials are in one orbit exactly when their canonical forms agree.
    const GammaSpec g({2, 2});
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = random_monomial(g, rng);
        const auto sigma = GammaPerm::random(g, rng);
        const auto image = apply_perm(sigma, MultiPoly::monomial(g, m));
        const auto& moved = image.terms().begin()->first;
        CHECK(canonical_monomial(g, moved) == canonical_monomial(g, m));
        const auto orbit = monomial_orbit(g, m);
        CHECK(std::binary_search(orbit.begin(), orbit.end(), moved));
        CHECK(BigInt(static_cast<unsigned long>(orbit.size())) == orbit_size(g, m));
        const auto other = random_monomial(g, rng);
        if (canonical_monomial(g, other) != canonical_monomial(g, m)) {
            CHECK_FALSE(std::binary_search(orbit.begin(), orbit.end(), other));
        }
    }
}

TEST_CASE("enumeration guard")
{
    CHECK(monomial_count(GammaSpec({4}), 25) > 1'000'000);
    CHECK_THROWS_AS(degree_monomials(GammaSpec({4}), 25), std::out_of_range);
    setenv("INVHILB_MAX_ENUM", "10", 1);
    CHECK_NOTHROW(degree_monomials(GammaSpec({2}), 2));
    CHECK_THROWS_AS(degree_monomials(GammaSpec({2}), 3), std::out_of_range);
    unsetenv("INVHILB_MAX_ENUM");
    CHECK(degree_monomials(GammaSpec({2}), 3).size() == 20);
}

TEST_CASE("the power invariants generate")
{
    const auto r2 = verify_generation(GammaSpec({2}), 6);
    CHECK(r2.generates);
    CHECK(r2.failing_degree == -1);
    CHECK(r2.span_dimension == r2.invariant_dimension);
    CHECK(verify_generation(GammaSpec({3}), 6).generates);
    CHECK(verify_generation(GammaSpec({2, 2}), 4).generates);

    const GammaSpec g2({2});
    const auto no_p11 = verify_generation(g2, 2, without(fundamental_generators(g2), 1, 1));
    CHECK_FALSE(no_p11.generates);
    CHECK(no_p11.failing_degree == 2);
    CHECK(no_p11.span_dimension[2] == 5);

    const GammaSpec g3({3});
    auto low = fundamental_generators(g3);
    std::erase_if(low, [](const Generator& g) { return g.degree() >= 3; });
    const auto r = verify_generation(g3, 4, low);
    CHECK_FALSE(r.generates);
    CHECK(r.failing_degree == 3);
}

TEST_CASE("algebraic independence of the power sums")
{
    const auto r2 = verify_algebraic_independence(GammaSpec({2}));
    CHECK(r2.independent);
    CHECK(r2.rank == 4);
    CHECK(r2.attempts == 1);
    CHECK(verify_algebraic_independence(GammaSpec({3})).rank == 6);
    CHECK(verify_algebraic_independence(GammaSpec({2, 2})).rank == 8);

    // All coordinates equal: the Jacobian collapses, so a second point is used.
    const auto retried = verify_algebraic_independence(GammaSpec({2}), std::vector<BigRational>(4, 1));
    CHECK(retried.independent);
    CHECK(retried.attempts == 2);
    CHECK(retried.expected == 4);
}

TEST_CASE("mixed power sums are independent modulo the ideal")
{
    for (int n = 2; n <= 4; ++n) {
        const auto r = verify_secondary_independence(GammaSpec({n}));
        CHECK(r.independent);
        CHECK(r.failing_degree == -1);
    }
    CHECK_THROWS_AS(verify_secondary_independence(GammaSpec({2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(verify_secondary_independence(GammaSpec({6})), std::out_of_range);
}

TEST_CASE("exact rank")
{
    using Rows = std::vector<std::vector<BigRational>>;
    CHECK(exact_rank(Rows{{1, 2}, {2, 4}}) == 1);
    CHECK(exact_rank(Rows{{1, 0}, {0, 1}, {1, 1}}) == 2);
    CHECK(exact_rank(Rows{{BigRational(1, 2), BigRational(1, 3)}, {3, 2}}) == 1);
    CHECK(exact_rank(Rows{{0, 0, 0}}) == 0);
    CHECK(exact_rank(Rows{}) == 0);

    EchelonBasis basis;
    CHECK(basis.insert(SparseRow{{0, 2}, {3, 4}}));
    CHECK_FALSE(basis.is_independent(SparseRow{{0, -1}, {3, -2}}));
    CHECK(basis.is_independent(SparseRow{{3, 1}}));
    CHECK(basis.insert(SparseRow{{3, 1}}));
    CHECK_FALSE(basis.insert(SparseRow{{0, 5}}));
    CHECK(basis.rank() == 2);
    CHECK(to_integer_row(SparseRationalRow{{1, BigRational(1, 2)}, {4, BigRational(2, 3)}}) == SparseRow{{1, 3}, {4, 4}});
}
