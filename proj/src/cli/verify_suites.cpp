#include "invhilb/cli/verify_suites.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "invhilb/molien/major_index.hpp"
#include "invhilb/molien/molien.hpp"
#include "invhilb/orbit/orbit_ring.hpp"
#include "invhilb/partitions/character_table.hpp"
#include "invhilb/schur/schur.hpp"

namespace invhilb::cli {

namespace {

std::string tag(const std::string& what, int n) { return what + " n=" + std::to_string(n); }

std::string tag(const std::string& what, const GammaSpec& spec) { return what + " (" + to_string(spec) + ")"; }

BigInt hook_dimension(const Partition& lambda)
{
    const Partition conj = conjugate(lambda);
    BigInt hooks = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
            hooks *= lambda[static_cast<std::size_t>(i)] - j + conj[static_cast<std::size_t>(j)] - i - 1;
        }
    }
    return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

void check_range(const std::string& suite, int n_max, int lo, int hi)
{
    if (n_max < lo || n_max > hi) {
        throw std::invalid_argument("suite " + suite + " needs " + std::to_string(lo) + " <= n-max <= " + std::to_string(hi));
    }
}

} // namespace

std::vector<CheckResult> identities_suite(int n_max)
{
    check_range("identities", n_max, 1, kMaxIdentitiesN);
    std::vector<CheckResult> out;
    for (int n = 1; n <= n_max; ++n) {
        const auto a = hilbert_double_classsum(n);
        const auto b = hilbert_double_schur(n);
        const auto c = hilbert_double_maj(n);
        out.push_back({tag("three routes agree", n), factored_equal(a, b) && factored_equal(b, c)});

        const DensePoly f = f_maj(n);
        out.push_back({tag("f_n(1) = n!", n), f.evaluate(1) == BigRational(factorial(static_cast<unsigned>(n)))});
        out.push_back({tag("deg f_n = n(n-1)", n), f.degree() == n * (n - 1)});
        out.push_back({tag("f_n palindromic", n), f.is_palindromic()});
        out.push_back({tag("single copy is 1/phi_n", n),
                       factored_equal(hilbert_single(n), FactoredSeries::reciprocal(phi_exponents(n)))});
        if (n <= 6) {
            out.push_back({tag("Carlitz product through t^40", n), carlitz_coefficient(n, 40) == expand(c, 40)});
        }
        if (n <= 3) {
            out.push_back({tag("Cauchy identity k=l=3", n), cauchy_check(n, 3, 3)});
        }
    }
    return out;
}

std::vector<CheckResult> orbit_suite(int n_max)
{
    check_range("orbit", n_max, 1, kMaxOrbitN);
    std::vector<CheckResult> out;
    std::vector<GammaSpec> specs;
    for (int n = 1; n <= n_max; ++n) {
        specs.emplace_back(std::vector<int>{n});
    }
    if (n_max >= 2) {
        specs.emplace_back(std::vector<int>{2, 2});
    }
    std::mt19937_64 rng(20240601);
    for (const auto& spec : specs) {
        const auto series = expand(hilbert_gamma(spec), 6);
        bool counts = true;
        for (int d = 0; d <= 6; ++d) {
            counts = counts && BigRational(static_cast<unsigned long>(invariant_dimension(spec, d))) == series[static_cast<std::size_t>(d)];
        }
        out.push_back({tag("orbit counts match series through degree 6", spec), counts});

        bool invariant = true;
        for (const auto& g : fundamental_generators(spec)) {
            for (int trial = 0; trial < 5; ++trial) {
                invariant = invariant && apply_perm(GammaPerm::random(spec, rng), g.poly) == g.poly;
            }
        }
        out.push_back({tag("generators are invariant", spec), invariant});

        out.push_back({tag("primary invariants algebraically independent", spec), verify_algebraic_independence(spec).independent});

        if (spec.components() > 1) {
            continue;
        }
        const int n = spec.n(0);
        const int d_max = n <= 3 ? 6 : 5;
        out.push_back({tag("generation through degree " + std::to_string(d_max), spec), verify_generation(spec, d_max).generates});
        if (n >= 2) {
            std::vector<Generator> low;
            for (const auto& g : fundamental_generators(spec)) {
                if (g.degree() < n) {
                    low.push_back(g);
                }
            }
            const auto report = verify_generation(spec, n, low);
            out.push_back({tag("generators of degree < n fall short at degree n", spec), !report.generates && report.failing_degree == n});
        }
        out.push_back({tag("mixed generators independent modulo (L, R)", spec), verify_secondary_independence(spec).independent});
    }
    return out;
}

std::vector<CheckResult> characters_suite(int n_max)
{
    check_range("characters", n_max, 1, kMaxCharactersN);
    std::vector<CheckResult> out;
    for (int n = 1; n <= n_max; ++n) {
        const auto table = CharacterTable::compute(n);
        out.push_back({tag("column orthogonality", n), orthogonality_check(table)});
        out.push_back({tag("row orthogonality", n), row_orthogonality_check(table)});

        const auto& parts = table.partitions();
        const std::size_t identity_class = table.index_of(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
        bool hooks = true;
        bool twist = true;
        for (std::size_t l = 0; l < parts.size(); ++l) {
            hooks = hooks && BigInt(std::to_string(table.value(l, identity_class))) == hook_dimension(parts[l]);
            const std::size_t lc = table.index_of(conjugate(parts[l]));
            for (std::size_t r = 0; r < parts.size(); ++r) {
                twist = twist && table.value(lc, r) == class_sign(parts[r]) * table.value(l, r);
            }
        }
        out.push_back({tag("hook-length dimensions", n), hooks});
        out.push_back({tag("sign twist is conjugation", n), twist});

        if (n <= 6) {
            bool schur = true;
            for (const auto& lambda : parts) {
                schur = schur && expand(schur_q(lambda), 30) == schur_q_via_characters(lambda, 30);
            }
            out.push_back({tag("closed-form {lambda:t} matches character sum", n), schur});
        }
    }
    return out;
}

std::vector<CheckResult> run_suite(const std::string& suite, int n_max)
{
    if (suite == "identities") {
        return identities_suite(n_max);
    }
    if (suite == "orbit") {
        return orbit_suite(n_max);
    }
    if (suite == "characters") {
        return characters_suite(n_max);
    }
    if (suite == "all") {
        if (n_max < 1) {
            throw std::invalid_argument("n-max must be positive");
        }
        auto out = identities_suite(std::min(n_max, kMaxIdentitiesN));
        for (auto&& r : orbit_suite(std::min(n_max, kMaxOrbitN))) {
            out.push_back(std::move(r));
        }
        for (auto&& r : characters_suite(std::min(n_max, kMaxCharactersN))) {
            out.push_back(std::move(r));
        }
        return out;
    }
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

} // namespace invhilb::cli
