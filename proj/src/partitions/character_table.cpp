#include "invhilb/partitions/character_table.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace invhilb {

namespace {

using Memo = std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t>;

// Beta numbers lambda_i + (l - 1 - i); strictly decreasing.
std::vector<int> beta_set(const std::vector<int>& lambda)
{
    const int l = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < l; ++i) {
        beta[i] = lambda[i] + (l - 1 - i);
    }
    return beta;
}

std::vector<int> from_beta_set(std::vector<int> beta)
{
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int l = static_cast<int>(beta.size());
    std::vector<int> lambda;
    for (int i = 0; i < l; ++i) {
        const int part = beta[i] - (l - 1 - i);
        if (part > 0) {
            lambda.push_back(part);
        }
    }
    return lambda;
}

// cycles is sorted decreasing; the first cycle is stripped as a rim hook.
std::int64_t mn_recursive(const std::vector<int>& lambda, const std::vector<int>& cycles, Memo& memo)
{
    if (cycles.empty()) {
        return lambda.empty() ? 1 : 0;
    }
    auto key = std::make_pair(lambda, cycles);
    if (const auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    const int k = cycles.front();
    const std::vector<int> rest(cycles.begin() + 1, cycles.end());
    const auto beta = beta_set(lambda);
    std::int64_t total = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
        const int target = beta[j] - k;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) {
            continue;
        }
        // Leg length = number of beta numbers jumped over.
        int height = 0;
        for (int b : beta) {
            if (b > target && b < beta[j]) {
                ++height;
            }
        }
        auto moved = beta;
        moved[j] = target;
        const std::int64_t sub = mn_recursive(from_beta_set(std::move(moved)), rest, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& rho)
{
    if (lambda.size() != rho.size()) {
        throw std::invalid_argument("character and class must partition the same n");
    }
    Memo memo;
    return mn_recursive(lambda.parts(), rho.parts(), memo);
}

CharacterTable::CharacterTable(int n, std::vector<Partition> partitions, std::vector<std::vector<std::int64_t>> values)
    : n_(n), partitions_(std::move(partitions)), values_(std::move(values))
{
}

CharacterTable CharacterTable::compute(int n)
{
    if (n < 1 || n > kMaxCharacterTableN) {
        throw std::out_of_range("character_table: n must lie in [1, 12]");
    }
    auto parts = enumerate_partitions(n);
    Memo memo;
    std::vector<std::vector<std::int64_t>> values(parts.size(), std::vector<std::int64_t>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = 0; j < parts.size(); ++j) {
            values[i][j] = mn_recursive(parts[i].parts(), parts[j].parts(), memo);
        }
    }
    return CharacterTable(n, std::move(parts), std::move(values));
}

std::size_t CharacterTable::index_of(const Partition& p) const
{
    const auto it = std::find(partitions_.begin(), partitions_.end(), p);
    if (it == partitions_.end()) {
        throw std::invalid_argument("partition " + to_string(p) + " is not a partition of " + std::to_string(n_));
    }
    return static_cast<std::size_t>(it - partitions_.begin());
}

std::int64_t CharacterTable::value(const Partition& lambda, const Partition& rho) const
{
    return values_[index_of(lambda)][index_of(rho)];
}

CharacterTable CharacterTable::with_entry(std::size_t lambda, std::size_t rho, std::int64_t v) const
{
    auto copy = *this;
    copy.values_.at(lambda).at(rho) = v;
    return copy;
}

bool orthogonality_check(const CharacterTable& table)
{
    const auto& parts = table.partitions();
    for (std::size_t a = 0; a < parts.size(); ++a) {
        const BigInt z = centralizer_order(parts[a]);
        for (std::size_t b = 0; b < parts.size(); ++b) {
            BigInt sum = 0;
            for (std::size_t lambda = 0; lambda < parts.size(); ++lambda) {
                sum += BigInt(static_cast<long>(table.value(lambda, a))) * static_cast<long>(table.value(lambda, b));
            }
            if (sum != (a == b ? z : BigInt(0))) {
                return false;
            }
        }
    }
    return true;
}

bool row_orthogonality_check(const CharacterTable& table)
{
    const auto& parts = table.partitions();
    std::vector<BigRational> weight;
    for (const auto& rho : parts) {
        weight.push_back(make_rational(1, centralizer_order(rho)));
    }
    for (std::size_t l = 0; l < parts.size(); ++l) {
        for (std::size_t m = 0; m < parts.size(); ++m) {
            BigRational sum = 0;
            for (std::size_t r = 0; r < parts.size(); ++r) {
                sum += weight[r] * static_cast<long>(table.value(l, r) * table.value(m, r));
            }
            if (sum != (l == m ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace invhilb
