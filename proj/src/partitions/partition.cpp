#include "invhilb/partitions/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace invhilb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::from_multiplicities(const std::map<int, int>& r)
{
    std::vector<int> parts;
    for (auto it = r.rbegin(); it != r.rend(); ++it) {
        if (it->second < 0) {
            throw std::invalid_argument("negative multiplicity");
        }
        parts.insert(parts.end(), static_cast<std::size_t>(it->second), it->first);
    }
    return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::map<int, int> Partition::multiplicities() const
{
    std::map<int, int> r;
    for (int p : parts_) {
        ++r[p];
    }
    return r;
}

namespace {

void partitions_bounded(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_bounded(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0) {
        throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    }
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_bounded(n, n, prefix, out);
    return out;
}

Partition conjugate(const Partition& lambda)
{
    std::vector<int> parts;
    const int first = lambda.empty() ? 0 : lambda[0];
    for (int j = 1; j <= first; ++j) {
        int count = 0;
        for (int p : lambda.parts()) {
            if (p >= j) {
                ++count;
            }
        }
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

BigInt centralizer_order(const Partition& lambda)
{
    BigInt z = 1;
    for (const auto& [i, r] : lambda.multiplicities()) {
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(r));
        z *= power * factorial(static_cast<unsigned>(r));
    }
    return z;
}

BigInt class_size(const Partition& lambda)
{
    return factorial(static_cast<unsigned>(lambda.size())) / centralizer_order(lambda);
}

Partition partition_union(const Partition& mu, const Partition& nu)
{
    std::vector<int> parts = mu.parts();
    parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
    return Partition::from_unsorted(std::move(parts));
}

int class_sign(const Partition& rho) { return (rho.size() - rho.length()) % 2 == 0 ? 1 : -1; }

std::string to_string(const Partition& lambda)
{
    std::string s = "(";
    for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += std::to_string(lambda[i]);
    }
    return s + ")";
}

} // namespace invhilb
