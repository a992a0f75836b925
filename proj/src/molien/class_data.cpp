#include "invhilb/molien/class_data.hpp"

#include <optional>

#include "invhilb/partitions/character_table.hpp"
#include "invhilb/series/dense_poly.hpp"

namespace invhilb {

namespace {

int det_degree(const ClassRecord& c)
{
    int deg = 0;
    for (const auto& [i, m] : c.det_factors) {
        deg += i * m;
    }
    return deg;
}

bool det_is_polynomial(const ClassRecord& c)
{
    DensePoly p = DensePoly::constant(1);
    for (const auto& [i, m] : c.det_factors) {
        if (i < 1) {
            return false;
        }
        for (int k = 0; k < m; ++k) {
            p.mul_one_minus_t_pow(static_cast<std::size_t>(i));
        }
    }
    for (const auto& [i, m] : c.det_factors) {
        for (int k = 0; k < -m; ++k) {
            if (!p.divisible_by_one_minus_t_pow(static_cast<std::size_t>(i))) {
                return false;
            }
            p.div_one_minus_t_pow(static_cast<std::size_t>(i));
        }
    }
    return true;
}

} // namespace

void validate(const GroupClassData& data)
{
    const std::size_t k = data.classes.size();
    if (data.order <= 0) {
        throw ClassDataError("group order must be positive");
    }
    if (k == 0) {
        throw ClassDataError("at least one class is required");
    }
    BigInt total = 0;
    for (const auto& c : data.classes) {
        if (c.size <= 0) {
            throw ClassDataError("class sizes must be positive");
        }
        total += c.size;
    }
    if (total != data.order) {
        throw ClassDataError("class sizes must sum to |G|");
    }
    std::optional<int> dim;
    for (const auto& c : data.classes) {
        if (!det_is_polynomial(c)) {
            throw ClassDataError("det factors must multiply to a polynomial");
        }
        const int d = det_degree(c);
        if (dim && *dim != d) {
            throw ClassDataError("det degrees must equal dim W in every class");
        }
        dim = d;
    }
    if (data.characters.size() != k) {
        throw ClassDataError("number of characters must equal number of classes");
    }
    for (const auto& row : data.characters) {
        if (row.size() != k) {
            throw ClassDataError("each character needs one value per class");
        }
    }
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            BigRational row_sum = 0;
            BigRational col_sum = 0;
            for (std::size_t j = 0; j < k; ++j) {
                row_sum += BigRational(data.classes[j].size) * data.characters[a][j] * data.characters[b][j];
                col_sum += data.characters[j][a] * data.characters[j][b];
            }
            if (row_sum != (a == b ? BigRational(data.order) : BigRational(0))) {
                throw ClassDataError("character rows must be orthonormal under the class-size inner product");
            }
            const BigRational centralizer = a == b ? BigRational(data.order) / BigRational(data.classes[a].size) : BigRational(0);
            if (col_sum != centralizer) {
                throw ClassDataError("character columns must satisfy column orthogonality");
            }
        }
    }
}

int representation_dimension(const GroupClassData& data)
{
    validate(data);
    return det_degree(data.classes.front());
}

GroupClassData symmetric_group_class_data(int n)
{
    const auto table = CharacterTable::compute(n);
    GroupClassData data;
    data.order = factorial(static_cast<unsigned>(n));
    for (const auto& rho : table.partitions()) {
        data.classes.push_back({class_size(rho), rho.multiplicities()});
    }
    for (const auto& row : table.values()) {
        std::vector<BigRational> chars;
        for (auto v : row) {
            chars.emplace_back(static_cast<long>(v));
        }
        data.characters.push_back(std::move(chars));
    }
    return data;
}

TruncatedSeries schur_analogue_general(const GroupClassData& data, std::size_t chi_index, int order)
{
    validate(data);
    if (chi_index >= data.characters.size()) {
        throw std::out_of_range("character index out of range");
    }
    TruncatedSeries total(order);
    for (std::size_t j = 0; j < data.classes.size(); ++j) {
        const BigRational weight = BigRational(data.classes[j].size) * data.characters[chi_index][j] / BigRational(data.order);
        if (weight == 0) {
            continue;
        }
        TruncatedSeries term = TruncatedSeries::one(order);
        for (const auto& [i, m] : data.classes[j].det_factors) {
            for (int r = 0; r < m; ++r) {
                term.div_one_minus_t_pow(i);
            }
            for (int r = 0; r < -m; ++r) {
                term.mul_one_minus_t_pow(i);
            }
        }
        total += term * weight;
    }
    return total;
}

TruncatedSeries hilbert_double_general(const GroupClassData& data, int order)
{
    validate(data);
    TruncatedSeries total(order);
    for (std::size_t c = 0; c < data.characters.size(); ++c) {
        const auto s = schur_analogue_general(data, c, order);
        total += s * s;
    }
    return total;
}

} // namespace invhilb
