#include "invhilb/molien/major_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "invhilb/limits.hpp"

namespace invhilb {

int major_index(const Permutation& sigma)
{
    int maj = 0;
    for (int i = 1; i < sigma.size(); ++i) {
        if (sigma(i) > sigma(i + 1)) {
            maj += i;
        }
    }
    return maj;
}

namespace {

// All permutations with sigma(1) = first (0-based values), in lexicographic order.
void accumulate_block(int n, int first, std::vector<std::uint64_t>& counts)
{
    std::vector<int> sigma;
    sigma.push_back(first);
    for (int v = 0; v < n; ++v) {
        if (v != first) {
            sigma.push_back(v);
        }
    }
    std::vector<int> position(static_cast<std::size_t>(n));
    do {
        int maj = 0;
        for (int i = 0; i + 1 < n; ++i) {
            position[static_cast<std::size_t>(sigma[i])] = i;
            if (sigma[i] > sigma[i + 1]) {
                maj += i + 1;
            }
        }
        position[static_cast<std::size_t>(sigma[n - 1])] = n - 1;
        // i is a descent of sigma^-1 iff i+1 sits left of i in sigma.
        int maj_inv = 0;
        for (int v = 0; v + 1 < n; ++v) {
            if (position[static_cast<std::size_t>(v)] > position[static_cast<std::size_t>(v + 1)]) {
                maj_inv += v + 1;
            }
        }
        ++counts[static_cast<std::size_t>(maj + maj_inv)];
    } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
}

} // namespace

std::vector<std::uint64_t> f_maj_counts(int n, const FMajOptions& options)
{
    if (n < 1) {
        throw std::out_of_range("f_maj: n must be at least 1");
    }
    if (options.jobs < 1) {
        throw std::invalid_argument("f_maj: jobs must be positive");
    }
    const std::uint64_t limit = permutation_limit(options.allow_large);
    std::uint64_t count = 1;
    for (int k = 2; k <= n; ++k) {
        count *= static_cast<std::uint64_t>(k);
        if (count > limit || k > 20) {
            throw std::out_of_range("f_maj: n = " + std::to_string(n) + " exceeds the permutation enumeration guard");
        }
    }

    const auto len = static_cast<std::size_t>(n * (n - 1) + 1);
    const int workers = std::min(options.jobs, n);
    std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(workers), std::vector<std::uint64_t>(len, 0));
    auto work = [&](int w) {
        for (int first = w; first < n; first += workers) {
            accumulate_block(n, first, partial[static_cast<std::size_t>(w)]);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            threads.emplace_back(work, w);
        }
        for (auto& t : threads) {
            t.join();
        }
    }

    std::vector<std::uint64_t> counts(len, 0);
    for (const auto& p : partial) {
        std::transform(counts.begin(), counts.end(), p.begin(), counts.begin(), std::plus<>());
    }
    return counts;
}

DensePoly f_maj(int n, const FMajOptions& options)
{
    const auto counts = f_maj_counts(n, options);
    std::vector<BigRational> coeffs;
    coeffs.reserve(counts.size());
    for (auto c : counts) {
        coeffs.emplace_back(BigInt(std::to_string(c)));
    }
    return DensePoly(std::move(coeffs));
}

} // namespace invhilb
