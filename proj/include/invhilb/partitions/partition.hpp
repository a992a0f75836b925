#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "invhilb/series/rational.hpp"

namespace invhilb {

/// Integer partition, parts weakly decreasing and positive. Doubles as a
/// conjugacy class (cycle type) and an irreducible character label of S_n.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    /// Sorts the parts first; still rejects non-positive entries.
    static Partition from_unsorted(std::vector<int> parts);
    /// From multiplicities r_i (i -> number of parts equal to i).
    static Partition from_multiplicities(const std::map<int, int>& r);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    int multiplicity(int i) const;
    std::map<int, int> multiplicities() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n, reverse lexicographic: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);

Partition conjugate(const Partition& lambda);

/// z_lambda = prod_i i^{r_i} r_i!, the centralizer order of the class.
BigInt centralizer_order(const Partition& lambda);
/// n! / z_lambda
BigInt class_size(const Partition& lambda);

/// Multiplicity-wise union, written mu + nu in the multiplicity notation.
Partition partition_union(const Partition& mu, const Partition& nu);

/// Sign of any permutation with this cycle type: (-1)^{n - length}.
int class_sign(const Partition& rho);

/// "(2,1)"; the empty partition prints as "()".
std::string to_string(const Partition& lambda);

} // namespace invhilb
