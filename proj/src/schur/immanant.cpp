#include "invhilb/schur/immanant.hpp"

#include <map>
#include <optional>
#include <stdexcept>

#include "invhilb/partitions/character_table.hpp"

namespace invhilb {

namespace {

bool is_zero(const BigRational& x) { return x == 0; }
bool is_zero(const FiniteSymPoly& x) { return x.is_zero(); }

Partition cycle_type_of(const std::vector<int>& sigma)
{
    std::vector<bool> seen(sigma.size(), false);
    std::vector<int> lengths;
    for (std::size_t start = 0; start < sigma.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        int len = 0;
        for (std::size_t j = start; !seen[j]; j = static_cast<std::size_t>(sigma[j])) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition::from_unsorted(std::move(lengths));
}

template <typename T>
T immanant_impl(const Matrix<T>& a, const Partition& lambda, const T& zero, const T& one)
{
    const int n = lambda.size();
    if (static_cast<int>(a.size()) != n) {
        throw std::invalid_argument("immanant: matrix size must equal |lambda|");
    }
    for (const auto& row : a) {
        if (static_cast<int>(row.size()) != n) {
            throw std::invalid_argument("immanant: matrix must be square");
        }
    }
    if (n == 0) {
        return one;
    }
    if (n > kMaxImmanantN) {
        throw std::out_of_range("immanant: n exceeds 8");
    }

    // Products grouped by cycle type; the character is applied once per class.
    std::map<Partition, T> by_class;
    std::vector<int> sigma(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto rec = [&](auto&& self, int row, const T& partial) -> void {
        if (row == n) {
            auto [it, inserted] = by_class.try_emplace(cycle_type_of(sigma), partial);
            if (!inserted) {
                it->second += partial;
            }
            return;
        }
        for (int col = 0; col < n; ++col) {
            const auto& entry = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (used[static_cast<std::size_t>(col)] || is_zero(entry)) {
                continue;
            }
            used[static_cast<std::size_t>(col)] = true;
            sigma[static_cast<std::size_t>(row)] = col;
            self(self, row + 1, partial * entry);
            used[static_cast<std::size_t>(col)] = false;
        }
    };
    rec(rec, 0, one);

    const auto table = CharacterTable::compute(n);
    const auto li = table.index_of(lambda);
    T total = zero;
    for (const auto& [rho, sum] : by_class) {
        total += sum * BigRational(static_cast<long>(table.value(li, table.index_of(rho))));
    }
    return total;
}

} // namespace

BigRational immanant(const Matrix<BigRational>& a, const Partition& lambda)
{
    return immanant_impl<BigRational>(a, lambda, BigRational(0), BigRational(1));
}

FiniteSymPoly immanant(const Matrix<FiniteSymPoly>& a, const Partition& lambda)
{
    if (a.empty() || a.front().empty()) {
        return immanant_impl<FiniteSymPoly>(a, lambda, FiniteSymPoly(0), FiniteSymPoly::constant(0, 1));
    }
    const int m = a.front().front().nvars();
    return immanant_impl<FiniteSymPoly>(a, lambda, FiniteSymPoly(m), FiniteSymPoly::constant(m, 1));
}

BigRational determinant(const Matrix<BigRational>& a)
{
    auto m = a;
    const std::size_t n = m.size();
    BigRational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::optional<std::size_t> pivot;
        for (std::size_t r = col; r < n; ++r) {
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (!pivot) {
            return 0;
        }
        if (*pivot != col) {
            std::swap(m[*pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) {
                continue;
            }
            const BigRational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    return det;
}

} // namespace invhilb
