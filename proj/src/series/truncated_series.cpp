#include "invhilb/series/truncated_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace invhilb {

namespace {

int checked_order(int order)
{
    if (order < 0) {
        throw std::invalid_argument("truncation order must be nonnegative");
    }
    return order;
}

} // namespace

TruncatedSeries::TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(checked_order(order)) + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<BigRational> coeffs, int order) : coeffs_(std::move(coeffs))
{
    coeffs_.resize(static_cast<std::size_t>(checked_order(order)) + 1);
}

TruncatedSeries TruncatedSeries::from_poly(const DensePoly& p, int order) { return TruncatedSeries(p.coeffs(), order); }

TruncatedSeries TruncatedSeries::one(int order)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const
{
    if (order > this->order()) {
        throw std::invalid_argument("cannot extend a truncated series beyond its known order");
    }
    return TruncatedSeries(std::vector<BigRational>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
}

bool TruncatedSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c == 0; });
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigRational& c)
{
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int order = std::min(a.order(), b.order());
    TruncatedSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (int j = 0; i + j <= order; ++j) {
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

void TruncatedSeries::div_one_minus_t_pow(int i)
{
    if (i <= 0) {
        throw std::invalid_argument("1 - t^0 is not invertible");
    }
    for (std::size_t k = static_cast<std::size_t>(i); k < coeffs_.size(); ++k) {
        coeffs_[k] += coeffs_[k - i];
    }
}

void TruncatedSeries::mul_one_minus_t_pow(int i)
{
    if (i <= 0) {
        throw std::invalid_argument("exponent must be positive");
    }
    for (std::size_t k = coeffs_.size(); k-- > static_cast<std::size_t>(i);) {
        coeffs_[k] -= coeffs_[k - i];
    }
}

TruncatedSeries series_inv(const TruncatedSeries& s)
{
    if (s[0] == 0) {
        throw std::domain_error("non-unit series");
    }
    const int order = s.order();
    std::vector<BigRational> inv(static_cast<std::size_t>(order) + 1);
    const BigRational c0_inv = 1 / s[0];
    inv[0] = c0_inv;
    for (int n = 1; n <= order; ++n) {
        BigRational acc = 0;
        for (int k = 1; k <= n; ++k) {
            if (s[k] != 0) {
                acc += s[k] * inv[n - k];
            }
        }
        inv[n] = -acc * c0_inv;
    }
    return TruncatedSeries(std::move(inv), order);
}

} // namespace invhilb
