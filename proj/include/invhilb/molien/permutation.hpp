#pragma once

#include <vector>

#include "invhilb/partitions/partition.hpp"

namespace invhilb {

/// Permutation of {1..n} in one-line notation: images()[i-1] = sigma(i).
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless `images` is a bijection on 1..n.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    const std::vector<int>& images() const { return images_; }
    /// sigma(i), 1-based.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

    Permutation inverse() const;
    Partition cycle_type() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// (a * b)(i) = a(b(i))
Permutation operator*(const Permutation& a, const Permutation& b);

} // namespace invhilb
