#pragma once

#include <vector>

#include "invhilb/partitions/partition.hpp"
#include "invhilb/schur/sym_poly.hpp"
#include "invhilb/series/rational.hpp"

namespace invhilb {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

inline constexpr int kMaxImmanantN = 8;

// |A|^(lambda) = sum over sigma in S_n of chi^lambda(sigma) a_{1,sigma(1)} ... a_{n,sigma(n)}.
// Zero entries prune the permutation search. Throws std::invalid_argument when
// A is not square of size |lambda|, std::out_of_range when n > 8.
BigRational immanant(const Matrix<BigRational>& a, const Partition& lambda);
FiniteSymPoly immanant(const Matrix<FiniteSymPoly>& a, const Partition& lambda);

BigRational determinant(const Matrix<BigRational>& a);

} // namespace invhilb
