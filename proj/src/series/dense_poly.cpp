#include "invhilb/series/dense_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace invhilb {

DensePoly::DensePoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

DensePoly DensePoly::constant(const BigRational& c) { return DensePoly(std::vector<BigRational>{c}); }

DensePoly DensePoly::monomial(const BigRational& c, std::size_t degree)
{
    std::vector<BigRational> coeffs(degree + 1);
    coeffs[degree] = c;
    return DensePoly(std::move(coeffs));
}

DensePoly DensePoly::one_minus_t_pow(std::size_t i)
{
    if (i == 0) {
        return {};
    }
    std::vector<BigRational> coeffs(i + 1);
    coeffs[0] = 1;
    coeffs[i] = -1;
    return DensePoly(std::move(coeffs));
}

void DensePoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

BigRational DensePoly::coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : BigRational(0); }

BigRational DensePoly::evaluate(const BigRational& t) const
{
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

bool DensePoly::is_palindromic() const
{
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

DensePoly& DensePoly::operator+=(const DensePoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

DensePoly operator*(const DensePoly& a, const DensePoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return DensePoly(std::move(out));
}

DensePoly& DensePoly::operator*=(const DensePoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

DensePoly& DensePoly::operator*=(const BigRational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

DensePoly operator-(DensePoly a)
{
    for (auto& x : a.coeffs_) {
        x = -x;
    }
    return a;
}

void DensePoly::mul_one_minus_t_pow(std::size_t i)
{
    if (i == 0) {
        coeffs_.clear();
        return;
    }
    if (is_zero()) {
        return;
    }
    const std::size_t old = coeffs_.size();
    coeffs_.resize(old + i);
    for (std::size_t k = old + i; k-- > i;) {
        coeffs_[k] -= coeffs_[k - i];
    }
    trim();
}

namespace {

// Coefficients of p / (1 - t^i) as a power series, through degree deg p.
std::vector<BigRational> geometric_quotient(const std::vector<BigRational>& p, std::size_t i)
{
    std::vector<BigRational> q(p);
    for (std::size_t k = i; k < q.size(); ++k) {
        q[k] += q[k - i];
    }
    return q;
}

} // namespace

bool DensePoly::divisible_by_one_minus_t_pow(std::size_t i) const
{
    if (i == 0) {
        return false;
    }
    if (is_zero()) {
        return true;
    }
    if (coeffs_.size() <= i) {
        return false;
    }
    const auto q = geometric_quotient(coeffs_, i);
    return std::all_of(q.end() - static_cast<std::ptrdiff_t>(i), q.end(), [](const BigRational& c) { return c == 0; });
}

void DensePoly::div_one_minus_t_pow(std::size_t i)
{
    if (!divisible_by_one_minus_t_pow(i)) {
        throw std::domain_error("polynomial not divisible by (1 - t^" + std::to_string(i) + ")");
    }
    if (is_zero()) {
        return;
    }
    coeffs_ = geometric_quotient(coeffs_, i);
    trim();
}

DensePoly DensePoly::pow(unsigned e) const
{
    DensePoly result = constant(1);
    DensePoly base = *this;
    while (e > 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

std::pair<DensePoly, DensePoly> DensePoly::divmod(const DensePoly& divisor) const
{
    if (divisor.is_zero()) {
        throw std::domain_error("division by the zero polynomial");
    }
    if (degree() < divisor.degree()) {
        return {DensePoly{}, *this};
    }
    std::vector<BigRational> rem = coeffs_;
    const auto dd = static_cast<std::size_t>(divisor.degree());
    std::vector<BigRational> quot(rem.size() - dd);
    const BigRational& lead = divisor.coeffs_.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const BigRational c = rem[k + dd] / lead;
        quot[k] = c;
        if (c == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[k + j] -= c * divisor.coeffs_[j];
        }
    }
    return {DensePoly(std::move(quot)), DensePoly(std::move(rem))};
}

DensePoly phi(int n)
{
    if (n < 0) {
        throw std::invalid_argument("phi: n must be nonnegative");
    }
    DensePoly p = DensePoly::constant(1);
    for (int k = 1; k <= n; ++k) {
        p.mul_one_minus_t_pow(static_cast<std::size_t>(k));
    }
    return p;
}

std::string to_string(const DensePoly& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
        const BigRational& c = p.coeffs()[d];
        if (c == 0) {
            continue;
        }
        BigRational mag = abs(c);
        if (first) {
            if (c < 0) {
                os << '-';
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (d == 0 || mag != 1) {
            os << mag.get_str();
        }
        if (d >= 1) {
            os << 't';
        }
        if (d >= 2) {
            os << '^' << d;
        }
    }
    return os.str();
}

} // namespace invhilb
