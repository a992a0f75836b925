#pragma once

#include <cstdint>
#include <vector>

#include "invhilb/molien/permutation.hpp"
#include "invhilb/series/dense_poly.hpp"

namespace invhilb {

/// Sum of the positions i with sigma(i) > sigma(i+1).
int major_index(const Permutation& sigma);

struct FMajOptions {
    int jobs = 1;
    /// Raises the permutation guard from 10! to 12!.
    bool allow_large = false;
};

/// Coefficients of f_n(t) = sum over S_n of t^{maj(sigma) + maj(sigma^-1)},
/// length n(n-1)+1. The permutation range is split by sigma(1) across
/// `jobs` workers with private accumulators, so the result does not depend
/// on the worker count. Throws std::out_of_range past the enumeration guard.
std::vector<std::uint64_t> f_maj_counts(int n, const FMajOptions& options = {});
DensePoly f_maj(int n, const FMajOptions& options = {});

} // namespace invhilb
