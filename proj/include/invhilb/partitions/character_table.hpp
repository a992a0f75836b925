#pragma once

#include <cstdint>
#include <vector>

#include "invhilb/partitions/partition.hpp"

namespace invhilb {

inline constexpr int kMaxCharacterTableN = 12;

/// Irreducible characters chi^lambda_rho of S_n. Rows are characters and
/// columns are classes, both in enumerate_partitions(n) order.
class CharacterTable {
public:
    /// Murnaghan-Nakayama; throws std::out_of_range unless 1 <= n <= 12.
    static CharacterTable compute(int n);

    /// Raw constructor (no validation) so callers can build altered tables.
    CharacterTable(int n, std::vector<Partition> partitions, std::vector<std::vector<std::int64_t>> values);

    int n() const { return n_; }
    const std::vector<Partition>& partitions() const { return partitions_; }
    std::size_t index_of(const Partition& p) const;

    std::int64_t value(std::size_t lambda, std::size_t rho) const { return values_[lambda][rho]; }
    std::int64_t value(const Partition& lambda, const Partition& rho) const;
    const std::vector<std::vector<std::int64_t>>& values() const { return values_; }

    CharacterTable with_entry(std::size_t lambda, std::size_t rho, std::int64_t v) const;

private:
    int n_;
    std::vector<Partition> partitions_;
    std::vector<std::vector<std::int64_t>> values_;
};

/// chi^lambda at the class rho (|lambda| = |rho|), by removing rim hooks of
/// the cycle lengths in rho.
std::int64_t mn_character(const Partition& lambda, const Partition& rho);

/// Column relation: sum_lambda chi^lambda_rho chi^lambda_rho' = z_rho [rho = rho'].
bool orthogonality_check(const CharacterTable& table);
/// Row relation: sum_rho chi^lambda_rho chi^mu_rho / z_rho = [lambda = mu].
bool row_orthogonality_check(const CharacterTable& table);

} // namespace invhilb
