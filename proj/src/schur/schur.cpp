#include "invhilb/schur/schur.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "invhilb/partitions/character_table.hpp"

namespace invhilb {

Matrix<FiniteSymPoly> newton_matrix(int n, int m)
{
    Matrix<FiniteSymPoly> s(static_cast<std::size_t>(n), std::vector<FiniteSymPoly>(static_cast<std::size_t>(n), FiniteSymPoly(m)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            s[i][j] = power_sum(i - j + 1, m);
        }
        if (i + 1 < n) {
            s[i][i + 1] = FiniteSymPoly::constant(m, i + 1);
        }
    }
    return s;
}

FiniteSymPoly schur_finite(const Partition& lambda, int m)
{
    if (m < 1) {
        throw std::invalid_argument("schur_finite: m must be positive");
    }
    const int n = lambda.size();
    if (n > 7) {
        throw std::out_of_range("schur_finite: |lambda| exceeds 7");
    }
    if (n == 0) {
        return FiniteSymPoly::constant(m, 1);
    }
    return immanant(newton_matrix(n, m), lambda) * make_rational(1, factorial(static_cast<unsigned>(n)));
}

FiniteSymPoly schur_finite_via_characters(const Partition& lambda, int m)
{
    const int n = lambda.size();
    if (n == 0) {
        return FiniteSymPoly::constant(m, 1);
    }
    const auto table = CharacterTable::compute(n);
    const auto li = table.index_of(lambda);
    FiniteSymPoly total(m);
    for (std::size_t r = 0; r < table.partitions().size(); ++r) {
        const auto& rho = table.partitions()[r];
        const BigRational w = make_rational(static_cast<long>(table.value(li, r)), centralizer_order(rho));
        if (w != 0) {
            total += power_sum_product(rho.parts(), m) * w;
        }
    }
    return total;
}

int n_lambda(const Partition& lambda)
{
    int total = 0;
    for (int i = 1; i < lambda.length(); ++i) {
        total += i * lambda[static_cast<std::size_t>(i)];
    }
    return total;
}

FactoredSeries schur_q(const Partition& lambda)
{
    const int l = lambda.length();
    DenominatorExponents numerator_factors;
    for (int r = 0; r < l; ++r) {
        for (int s = r + 1; s < l; ++s) {
            ++numerator_factors[lambda[r] - lambda[s] - r + s];
        }
    }
    DenominatorExponents denominator;
    for (int r = 0; r < l; ++r) {
        for (int i = 1; i <= lambda[r] + l - 1 - r; ++i) {
            ++denominator[i];
        }
    }
    for (auto& [i, e] : numerator_factors) {
        auto it = denominator.find(i);
        if (it == denominator.end()) {
            continue;
        }
        const int common = std::min(e, it->second);
        e -= common;
        it->second -= common;
    }
    DensePoly numerator = DensePoly::monomial(1, static_cast<std::size_t>(n_lambda(lambda)));
    for (const auto& [i, e] : numerator_factors) {
        for (int k = 0; k < e; ++k) {
            numerator.mul_one_minus_t_pow(static_cast<std::size_t>(i));
        }
    }
    return FactoredSeries(std::move(numerator), std::move(denominator));
}

TruncatedSeries schur_q_via_characters(const Partition& lambda, int order)
{
    const int n = lambda.size();
    if (n == 0) {
        return TruncatedSeries::one(order);
    }
    const auto table = CharacterTable::compute(n);
    const auto li = table.index_of(lambda);
    TruncatedSeries total(order);
    for (std::size_t r = 0; r < table.partitions().size(); ++r) {
        const auto& rho = table.partitions()[r];
        const BigRational w = make_rational(static_cast<long>(table.value(li, r)), centralizer_order(rho));
        if (w == 0) {
            continue;
        }
        TruncatedSeries term = TruncatedSeries::one(order);
        for (int part : rho.parts()) {
            term.div_one_minus_t_pow(part);
        }
        total += term * w;
    }
    return total;
}

FiniteSymPoly power_sum_decomposition(const Partition& lambda, int m)
{
    const int n = lambda.size();
    if (n > 6 || m > 5) {
        throw std::out_of_range("power_sum_decomposition: needs |lambda| <= 6 and m <= 5");
    }
    if (n == 0) {
        return FiniteSymPoly::constant(m, 1);
    }
    const auto table = CharacterTable::compute(n);
    const auto ri = table.index_of(lambda);
    FiniteSymPoly total(m);
    for (std::size_t mu = 0; mu < table.partitions().size(); ++mu) {
        const auto chi = table.value(mu, ri);
        if (chi != 0) {
            total += schur_finite(table.partitions()[mu], m) * BigRational(static_cast<long>(chi));
        }
    }
    return total;
}

bool cauchy_check(int n, int k, int l)
{
    if (n < 0 || n > 4 || k < 1 || k > 3 || l < 1 || l > 3) {
        throw std::out_of_range("cauchy_check: needs 0 <= n <= 4 and 1 <= k, l <= 3");
    }
    const int vars = k + l;
    FiniteSymPoly lhs(vars);
    for (const auto& lambda : enumerate_partitions(n)) {
        const auto a = schur_finite(lambda, k).embedded(vars, 0);
        const auto b = schur_finite(lambda, l).embedded(vars, k);
        lhs += a * b;
    }

    // h_n(z_{ij}) with z_{ij} = alpha_i beta_j, variable index i * l + j.
    FiniteSymPoly rhs(vars);
    const auto h = homogeneous(n, k * l);
    for (const auto& [u, c] : h.terms()) {
        ExponentVector e(static_cast<std::size_t>(vars), 0);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < l; ++j) {
                const int ex = u[static_cast<std::size_t>(i * l + j)];
                e[static_cast<std::size_t>(i)] += ex;
                e[static_cast<std::size_t>(k + j)] += ex;
            }
        }
        rhs.add_term(e, c);
    }
    return lhs == rhs;
}

} // namespace invhilb
