#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "invhilb/series/rational.hpp"
#include "invhilb/series/truncated_series.hpp"

namespace invhilb {

/// One conjugacy class g^G of a finite group acting on W.
struct ClassRecord {
    BigInt size;
    /// det(1 - t g) = prod_i (1 - t^i)^{m_i}. Multiplicities may be negative:
    /// eigenvalue -1 alone gives 1 + t = (1 - t^2)(1 - t)^{-1}.
    std::map<int, int> det_factors;
};

/// Class data of a finite group G with a representation W. characters[c][j]
/// is the value of the c-th irreducible character on class j; only
/// rational-valued character tables can be expressed.
struct GroupClassData {
    BigInt order;
    std::vector<ClassRecord> classes;
    std::vector<std::vector<BigRational>> characters;
};

class ClassDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws ClassDataError naming the violated invariant.
void validate(const GroupClassData& data);

/// dim W, read off the determinant degrees (validated to agree on every class).
int representation_dimension(const GroupClassData& data);

/// S_n on its permutation module, classes and characters in partition order.
GroupClassData symmetric_group_class_data(int n);

/// S_chi^W(t) = (1/|G|) sum_g chi(g) / det(1 - t g), through t^order.
TruncatedSeries schur_analogue_general(const GroupClassData& data, std::size_t chi_index, int order);

/// sum_chi S_chi^W(t)^2, which is H(K[W+W]^G, t).
TruncatedSeries hilbert_double_general(const GroupClassData& data, int order);

} // namespace invhilb
