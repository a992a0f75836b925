#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "invhilb/series/rational.hpp"

namespace invhilb {

/// Sparse integer row, entries sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, BigInt>>;
using SparseRationalRow = std::vector<std::pair<std::size_t, BigRational>>;

/// Row echelon basis grown one vector at a time by fraction-free
/// elimination: a row is reduced by cross-multiplying with the pivot row
/// sharing its leading column and then divided by its content, so entries
/// stay integral and small.
class EchelonBasis {
public:
    /// True when the row was independent of the rows already inserted.
    bool insert(SparseRow row);
    bool insert(const SparseRationalRow& row);
    bool insert_dense(const std::vector<BigRational>& row);

    /// Would inserting this row raise the rank? Leaves the basis unchanged.
    bool is_independent(SparseRow row) const;

    std::size_t rank() const { return pivots_.size(); }

private:
    SparseRow reduce(SparseRow row) const;

    std::map<std::size_t, SparseRow> pivots_;
};

SparseRow to_integer_row(const SparseRationalRow& row);

std::size_t exact_rank(const std::vector<std::vector<BigRational>>& rows);

} // namespace invhilb
