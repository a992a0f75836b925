#include "invhilb/orbit/echelon.hpp"

namespace invhilb {

namespace {

void make_primitive(SparseRow& row)
{
    if (row.empty()) {
        return;
    }
    BigInt g = 0;
    for (const auto& [col, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    if (row.front().second < 0) {
        g = -g;
    }
    if (g != 1) {
        for (auto& [col, v] : row) {
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        }
    }
}

// a * row - b * pivot, with matching leading columns cancelling.
SparseRow combine(const SparseRow& row, const BigInt& a, const SparseRow& pivot, const BigInt& b)
{
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.emplace_back(row[i].first, a * row[i].second);
            ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -b * pivot[j].second);
            ++j;
        } else {
            BigInt v = a * row[i].second - b * pivot[j].second;
            if (v != 0) {
                out.emplace_back(row[i].first, std::move(v));
            }
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

SparseRow EchelonBasis::reduce(SparseRow row) const
{
    make_primitive(row);
    while (!row.empty()) {
        const auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) {
            break;
        }
        const SparseRow& pivot = it->second;
        const BigInt g = gcd(pivot.front().second, row.front().second);
        const BigInt a = pivot.front().second / g;
        const BigInt b = row.front().second / g;
        row = combine(row, a, pivot, b);
        make_primitive(row);
    }
    return row;
}

bool EchelonBasis::insert(SparseRow row)
{
    row = reduce(std::move(row));
    if (row.empty()) {
        return false;
    }
    const auto lead = row.front().first;
    pivots_.emplace(lead, std::move(row));
    return true;
}

bool EchelonBasis::is_independent(SparseRow row) const { return !reduce(std::move(row)).empty(); }

SparseRow to_integer_row(const SparseRationalRow& row)
{
    BigInt l = 1;
    for (const auto& [col, v] : row) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    SparseRow out;
    out.reserve(row.size());
    for (const auto& [col, v] : row) {
        if (v != 0) {
            out.emplace_back(col, v.get_num() * (l / v.get_den()));
        }
    }
    return out;
}

bool EchelonBasis::insert(const SparseRationalRow& row) { return insert(to_integer_row(row)); }

bool EchelonBasis::insert_dense(const std::vector<BigRational>& row)
{
    SparseRationalRow sparse;
    for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] != 0) {
            sparse.emplace_back(c, row[c]);
        }
    }
    return insert(sparse);
}

std::size_t exact_rank(const std::vector<std::vector<BigRational>>& rows)
{
    EchelonBasis basis;
    for (const auto& r : rows) {
        basis.insert_dense(r);
    }
    return basis.rank();
}

} // namespace invhilb
