#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "invhilb/molien/permutation.hpp"
#include "invhilb/orbit/multipoly.hpp"

namespace invhilb {

/// sigma = (sigma_1, ..., sigma_k) in S_Gamma = S_{n_1} x ... x S_{n_k}.
class GammaPerm {
public:
    /// Throws std::invalid_argument unless component i permutes 1..n_i.
    GammaPerm(const GammaSpec& spec, std::vector<Permutation> components);

    static GammaPerm identity(const GammaSpec& spec);
    static GammaPerm random(const GammaSpec& spec, std::mt19937_64& rng);

    const GammaSpec& spec() const { return spec_; }
    const std::vector<Permutation>& components() const { return components_; }

    friend GammaPerm operator*(const GammaPerm& a, const GammaPerm& b);
    friend bool operator==(const GammaPerm&, const GammaPerm&) = default;

private:
    GammaSpec spec_;
    std::vector<Permutation> components_;
};

/// Relabels x_{il} -> x_{i sigma_i(l)} and y_{il} -> y_{i sigma_i(l)}.
/// Throws std::invalid_argument when the specs differ.
MultiPoly apply_perm(const GammaPerm& sigma, const MultiPoly& f);

/// Lexicographically smallest relabeling of m under S_Gamma.
Monomial canonical_monomial(const GammaSpec& spec, const Monomial& m);

/// Distinct monomials in the orbit of m, sorted.
std::vector<Monomial> monomial_orbit(const GammaSpec& spec, const Monomial& m);

/// Size of the orbit of m without listing it.
BigInt orbit_size(const GammaSpec& spec, const Monomial& m);

/// Each monomial of f is replaced by the sum of the distinct members of its
/// orbit, keeping its coefficient.
MultiPoly orbit_sum(const MultiPoly& f);

/// P^{(i)}_{r,s} = sum_l x_{il}^r y_{il}^s, with i 1-based.
MultiPoly power_invariant(int i, int r, int s, const GammaSpec& spec);
/// L_{im} = P^{(i)}_{m,0}
MultiPoly left_power(int i, int m, const GammaSpec& spec);
/// R_{im} = P^{(i)}_{0,m}
MultiPoly right_power(int i, int m, const GammaSpec& spec);

struct Generator {
    int component; // 1-based
    int r;
    int s;
    MultiPoly poly;

    int degree() const { return r + s; }
};

/// All P^{(i)}_{r,s} with 1 <= r + s <= n_i, by component, then degree, then
/// decreasing r.
std::vector<Generator> fundamental_generators(const GammaSpec& spec);

/// Number of degree-d monomials in the 2 (n_1 + ... + n_k) variables.
BigInt monomial_count(const GammaSpec& spec, int d);

/// Every degree-d monomial, in lexicographic order. Throws std::out_of_range
/// when the count exceeds the monomial guard.
std::vector<Monomial> degree_monomials(const GammaSpec& spec, int d);

/// Canonical representatives of the orbits on degree-d monomials, sorted.
std::vector<Monomial> orbit_representatives(const GammaSpec& spec, int d);

/// dim of the degree-d invariants = number of orbits on degree-d monomials.
std::uint64_t invariant_dimension(const GammaSpec& spec, int d);

struct GenerationReport {
    bool generates = true;
    /// First degree where the span falls short, or -1.
    int failing_degree = -1;
    /// Indexed by degree 0..dMax.
    std::vector<std::uint64_t> span_dimension;
    std::vector<std::uint64_t> invariant_dimension;
};

/// Compares, for each d <= dMax, the span of all degree-d products of the
/// generators against the degree-d invariants. Invariants are determined by
/// their coefficients on orbit representatives, so rows are restricted to
/// those coordinates.
GenerationReport verify_generation(const GammaSpec& spec, int d_max);
GenerationReport verify_generation(const GammaSpec& spec, int d_max, const std::vector<Generator>& generators);

struct IndependenceReport {
    bool independent = false;
    std::size_t rank = 0;
    std::size_t expected = 0;
    int attempts = 0;
};

/// Jacobian rank of {L_{im}, R_{im}} at a point with distinct prime
/// coordinates. `first_point` replaces the first evaluation point; a rank drop
/// is retried at up to 3 further prime points.
IndependenceReport verify_algebraic_independence(const GammaSpec& spec,
                                                 const std::optional<std::vector<BigRational>>& first_point = std::nullopt);

inline constexpr int kMaxSecondaryN = 5;

struct SecondaryReport {
    bool independent = true;
    int failing_degree = -1;
    /// Per degree 0..n: rank of the ideal slice, and of slice + mixed set.
    std::vector<std::size_t> ideal_rank;
    std::vector<std::size_t> combined_rank;
};

/// Single component n <= 5: for d = 2..n, are {P_{r,s} : r, s >= 1, r + s = d}
/// independent modulo the degree-d slice of the ideal (L_m, R_m)?
SecondaryReport verify_secondary_independence(const GammaSpec& spec);

} // namespace invhilb
