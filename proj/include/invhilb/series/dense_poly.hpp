#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "invhilb/series/rational.hpp"

namespace invhilb {

/// Univariate polynomial in t with exact rational coefficients, stored densely
/// by degree. The zero polynomial has an empty coefficient list; otherwise the
/// leading coefficient is nonzero.
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<BigRational> coeffs);

    static DensePoly constant(const BigRational& c);
    static DensePoly monomial(const BigRational& c, std::size_t degree);
    /// 1 - t^i
    static DensePoly one_minus_t_pow(std::size_t i);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    BigRational coeff(std::size_t d) const;

    BigRational evaluate(const BigRational& t) const;
    bool is_palindromic() const;

    DensePoly& operator+=(const DensePoly& rhs);
    DensePoly& operator-=(const DensePoly& rhs);
    DensePoly& operator*=(const DensePoly& rhs);
    DensePoly& operator*=(const BigRational& c);

    // In-place multiplication / exact division by (1 - t^i), both O(degree).
    void mul_one_minus_t_pow(std::size_t i);
    /// Throws std::domain_error if (1 - t^i) does not divide this polynomial.
    void div_one_minus_t_pow(std::size_t i);
    bool divisible_by_one_minus_t_pow(std::size_t i) const;

    DensePoly pow(unsigned e) const;

    /// Quotient and remainder; throws std::domain_error on a zero divisor.
    std::pair<DensePoly, DensePoly> divmod(const DensePoly& divisor) const;

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator*(DensePoly a, const BigRational& c) { return a *= c; }
    friend DensePoly operator-(DensePoly a);
    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<BigRational> coeffs_;
};

/// (1-t)(1-t^2)...(1-t^n); phi(0) is the empty product 1.
DensePoly phi(int n);

/// "1 - t - t^2 + t^3" style rendering, lowest degree first.
std::string to_string(const DensePoly& p);

} // namespace invhilb
