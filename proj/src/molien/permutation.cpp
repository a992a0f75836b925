#include "invhilb/molien/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace invhilb {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > size() || seen[static_cast<std::size_t>(v - 1)]) {
            throw std::invalid_argument("not a permutation of 1..n");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(inv));
}

Partition Permutation::cycle_type() const
{
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> lengths;
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        int len = 0;
        for (std::size_t j = start; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition::from_unsorted(std::move(lengths));
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("composing permutations of different degree");
    }
    std::vector<int> out(static_cast<std::size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i) {
        out[static_cast<std::size_t>(i - 1)] = a(b(i));
    }
    return Permutation(std::move(out));
}

} // namespace invhilb
