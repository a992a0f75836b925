#pragma once

#include <string>
#include <vector>

#include "invhilb/molien/major_index.hpp"
#include "invhilb/partitions/partition.hpp"
#include "invhilb/series/factored_series.hpp"
#include "invhilb/series/truncated_series.hpp"

namespace invhilb {

/// Composition (n_1, ..., n_k) naming S_Gamma = S_{n_1} x ... x S_{n_k}.
class GammaSpec {
public:
    /// Throws std::invalid_argument on an empty list or a nonpositive entry.
    explicit GammaSpec(std::vector<int> ns);

    const std::vector<int>& ns() const { return ns_; }
    int components() const { return static_cast<int>(ns_.size()); }
    int n(int i) const { return ns_[static_cast<std::size_t>(i)]; }
    /// n_1 + ... + n_k
    int total() const;

    friend bool operator==(const GammaSpec&, const GammaSpec&) = default;

private:
    std::vector<int> ns_;
};

/// "2,3"
std::string to_string(const GammaSpec& spec);

inline constexpr int kMaxSingleN = 12;
inline constexpr int kMaxDoubleN = 10;

/// 1 / det(1 - t sigma) on the permutation module for sigma of cycle type rho:
/// denominator exponents e_i = r_i(rho), numerator 1.
FactoredSeries cycle_type_det(const Partition& rho);

/// H(K[V]^{S_n}, t) by the class-weighted Molien average, over phi_n(t).
FactoredSeries hilbert_single(int n);

/// H(K[V+V]^{S_n}, t) over phi_n(t)^2, three ways:
/// class sum  sum_rho (1/z_rho) / det(1 - t sigma_rho)^2,
FactoredSeries hilbert_double_classsum(int n);
/// Schur route  sum_lambda {lambda : t}^2,
FactoredSeries hilbert_double_schur(int n);
/// permutation statistics  f_n(t) / phi_n(t)^2.
FactoredSeries hilbert_double_maj(int n, const FMajOptions& options = {});

/// Coefficient of x^n in prod_{k >= 0} (1 - t^k x)^{-(k+1)} through t^order.
TruncatedSeries carlitz_coefficient(int n, int order);

/// prod_i f_{n_i}(t) / prod_i phi_{n_i}(t)^2
FactoredSeries hilbert_gamma(const GammaSpec& spec, const FMajOptions& options = {});

struct HironakaStats {
    BigInt secondary_count;
    int max_secondary_degree = 0;
    /// Entry d counts secondary invariants of degree d.
    std::vector<BigInt> degree_histogram;
};

HironakaStats hironaka_stats(int n, const FMajOptions& options = {});

} // namespace invhilb
