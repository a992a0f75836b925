#pragma once

#include <map>
#include <vector>

#include "invhilb/series/dense_poly.hpp"
#include "invhilb/series/rational.hpp"

namespace invhilb {

using ExponentVector = std::vector<int>;

/// Polynomial in m ordered variables alpha_1..alpha_m with rational
/// coefficients. Terms iterate in lexicographic exponent order.
class FiniteSymPoly {
public:
    explicit FiniteSymPoly(int nvars);

    static FiniteSymPoly constant(int nvars, const BigRational& c);
    /// alpha_{index+1}
    static FiniteSymPoly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    const std::map<ExponentVector, BigRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigRational coefficient(const ExponentVector& e) const;

    void add_term(const ExponentVector& e, const BigRational& c);

    FiniteSymPoly& operator+=(const FiniteSymPoly& rhs);
    FiniteSymPoly& operator-=(const FiniteSymPoly& rhs);
    FiniteSymPoly& operator*=(const BigRational& c);

    friend FiniteSymPoly operator+(FiniteSymPoly a, const FiniteSymPoly& b) { return a += b; }
    friend FiniteSymPoly operator-(FiniteSymPoly a, const FiniteSymPoly& b) { return a -= b; }
    friend FiniteSymPoly operator*(const FiniteSymPoly& a, const FiniteSymPoly& b);
    friend FiniteSymPoly operator*(FiniteSymPoly a, const BigRational& c) { return a *= c; }
    friend bool operator==(const FiniteSymPoly& a, const FiniteSymPoly& b) = default;

    /// Renames alpha_i to alpha_{perm[i]} (0-based).
    FiniteSymPoly permuted(const std::vector<int>& perm) const;
    /// Places the variables at positions offset..offset+nvars-1 of a larger ring.
    FiniteSymPoly embedded(int total_vars, int offset) const;
    /// alpha_i -> t^{i-1}
    DensePoly specialize_geometric() const;

private:
    int nvars_;
    std::map<ExponentVector, BigRational> terms_;
};

/// s_i = alpha_1^i + ... + alpha_m^i (s_0 = m).
FiniteSymPoly power_sum(int i, int m);
FiniteSymPoly elementary(int i, int m);
/// Complete homogeneous sum over exponents u_j >= 0 with u_1 + ... + u_m = r.
FiniteSymPoly homogeneous(int r, int m);
/// s_rho = s_{rho_1} s_{rho_2} ...
FiniteSymPoly power_sum_product(const std::vector<int>& parts, int m);

} // namespace invhilb
