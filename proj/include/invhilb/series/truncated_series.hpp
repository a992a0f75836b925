#pragma once

#include <vector>

#include "invhilb/series/dense_poly.hpp"
#include "invhilb/series/rational.hpp"

namespace invhilb {

/// Power series in t known exactly through degree order(); nothing is claimed
/// about higher coefficients. Binary operations truncate to the smaller order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    /// Pads with zeros or drops coefficients so that exactly order + 1 remain.
    TruncatedSeries(std::vector<BigRational> coeffs, int order);

    static TruncatedSeries from_poly(const DensePoly& p, int order);
    static TruncatedSeries one(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    const BigRational& operator[](std::size_t d) const { return coeffs_[d]; }

    TruncatedSeries truncated(int order) const;
    bool is_zero() const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const BigRational& c);

    // In place: multiply by 1/(1 - t^i) or by (1 - t^i).
    void div_one_minus_t_pow(int i);
    void mul_one_minus_t_pow(int i);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const BigRational& c) { return a *= c; }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<BigRational> coeffs_;
};

/// Multiplicative inverse to the same order. Throws std::domain_error
/// ("non-unit series") when the constant term vanishes.
TruncatedSeries series_inv(const TruncatedSeries& s);

} // namespace invhilb
