#include "invhilb/molien/molien.hpp"

#include <map>
#include <stdexcept>

#include "invhilb/schur/schur.hpp"

namespace invhilb {

GammaSpec::GammaSpec(std::vector<int> ns) : ns_(std::move(ns))
{
    if (ns_.empty()) {
        throw std::invalid_argument("composition must be nonempty");
    }
    for (int n : ns_) {
        if (n < 1) {
            throw std::invalid_argument("composition entries must be positive");
        }
    }
}

int GammaSpec::total() const
{
    int t = 0;
    for (int n : ns_) {
        t += n;
    }
    return t;
}

std::string to_string(const GammaSpec& spec)
{
    std::string s;
    for (std::size_t i = 0; i < spec.ns().size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += std::to_string(spec.ns()[i]);
    }
    return s;
}

namespace {

void require_range(int n, int hi, const char* what)
{
    if (n < 1 || n > hi) {
        throw std::out_of_range(std::string(what) + ": n must lie in [1, " + std::to_string(hi) + "]");
    }
}

// sum_rho (1/z_rho) / det(1 - t sigma_rho)^power, over phi_n^power.
FactoredSeries molien_class_sum(int n, int power)
{
    const auto classes = enumerate_partitions(n);
    DenominatorExponents common;
    for (const auto& rho : classes) {
        for (const auto& [i, r] : rho.multiplicities()) {
            common[i] = std::max(common[i], power * r);
        }
    }
    DensePoly numerator;
    for (const auto& rho : classes) {
        DensePoly term = DensePoly::constant(make_rational(1, centralizer_order(rho)));
        const auto r = rho.multiplicities();
        for (const auto& [i, e] : common) {
            const auto it = r.find(i);
            const int have = it == r.end() ? 0 : power * it->second;
            for (int k = have; k < e; ++k) {
                term.mul_one_minus_t_pow(static_cast<std::size_t>(i));
            }
        }
        numerator += term;
    }
    return FactoredSeries(std::move(numerator), common).over_denominator(phi_exponents(n, power));
}

} // namespace

FactoredSeries cycle_type_det(const Partition& rho) { return FactoredSeries::reciprocal(rho.multiplicities()); }

FactoredSeries hilbert_single(int n)
{
    require_range(n, kMaxSingleN, "hilbert_single");
    return molien_class_sum(n, 1);
}

FactoredSeries hilbert_double_classsum(int n)
{
    require_range(n, kMaxDoubleN, "hilbert_double_classsum");
    return molien_class_sum(n, 2);
}

FactoredSeries hilbert_double_schur(int n)
{
    require_range(n, kMaxDoubleN, "hilbert_double_schur");
    FactoredSeries total(DensePoly{}, {});
    for (const auto& lambda : enumerate_partitions(n)) {
        const auto s = schur_q(lambda);
        total = total + s * s;
    }
    return total.over_denominator(phi_exponents(n, 2));
}

FactoredSeries hilbert_double_maj(int n, const FMajOptions& options)
{
    require_range(n, kMaxDoubleN, "hilbert_double_maj");
    return FactoredSeries(f_maj(n, options), phi_exponents(n, 2));
}

TruncatedSeries carlitz_coefficient(int n, int order)
{
    if (n < 0 || order < 0) {
        throw std::invalid_argument("carlitz_coefficient: n and order must be nonnegative");
    }
    // table[j][d] = coefficient of x^j t^d in the partial product.
    std::vector<std::vector<BigInt>> table(static_cast<std::size_t>(n) + 1, std::vector<BigInt>(static_cast<std::size_t>(order) + 1, 0));
    table[0][0] = 1;
    // Taking x from the factor with index k costs at least t^k, so factors with
    // k > order cannot reach degree <= order.
    for (int k = 0; k <= order; ++k) {
        for (int rep = 0; rep <= k; ++rep) {
            // Multiply by 1/(1 - t^k x); ascending j makes the update geometric.
            for (int j = 1; j <= n; ++j) {
                for (int d = order; d >= k; --d) {
                    table[j][d] += table[j - 1][d - k];
                }
            }
        }
    }
    std::vector<BigRational> coeffs;
    for (const auto& c : table[static_cast<std::size_t>(n)]) {
        coeffs.emplace_back(c);
    }
    return TruncatedSeries(std::move(coeffs), order);
}

FactoredSeries hilbert_gamma(const GammaSpec& spec, const FMajOptions& options)
{
    std::map<int, DensePoly> cache;
    DensePoly numerator = DensePoly::constant(1);
    DenominatorExponents denominator;
    for (int n : spec.ns()) {
        require_range(n, kMaxDoubleN, "hilbert_gamma");
        auto it = cache.find(n);
        if (it == cache.end()) {
            it = cache.emplace(n, f_maj(n, options)).first;
        }
        numerator *= it->second;
        for (int i = 1; i <= n; ++i) {
            denominator[i] += 2;
        }
    }
    return FactoredSeries(std::move(numerator), std::move(denominator));
}

HironakaStats hironaka_stats(int n, const FMajOptions& options)
{
    require_range(n, kMaxDoubleN, "hironaka_stats");
    const auto counts = f_maj_counts(n, options);
    HironakaStats stats;
    stats.secondary_count = 0;
    for (std::size_t d = 0; d < counts.size(); ++d) {
        const BigInt c(std::to_string(counts[d]));
        stats.degree_histogram.push_back(c);
        stats.secondary_count += c;
        if (counts[d] != 0) {
            stats.max_secondary_degree = static_cast<int>(d);
        }
    }
    return stats;
}

} // namespace invhilb
