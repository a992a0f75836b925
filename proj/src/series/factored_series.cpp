#include "invhilb/series/factored_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace invhilb {

namespace {

DenominatorExponents normalized(DenominatorExponents d)
{
    for (auto it = d.begin(); it != d.end();) {
        if (it->first < 1 || it->second < 0) {
            throw std::invalid_argument("denominator needs i >= 1 and e_i >= 0");
        }
        it = it->second == 0 ? d.erase(it) : std::next(it);
    }
    return d;
}

int exponent_of(const DenominatorExponents& d, int i)
{
    const auto it = d.find(i);
    return it == d.end() ? 0 : it->second;
}

} // namespace

FactoredSeries::FactoredSeries() = default;

FactoredSeries::FactoredSeries(DensePoly numerator, DenominatorExponents denominator)
    : numerator_(std::move(numerator)), denominator_(normalized(std::move(denominator)))
{
}

FactoredSeries FactoredSeries::reciprocal(DenominatorExponents denominator)
{
    return FactoredSeries(DensePoly::constant(1), std::move(denominator));
}

DensePoly FactoredSeries::denominator_poly() const
{
    DensePoly p = DensePoly::constant(1);
    for (const auto& [i, e] : denominator_) {
        for (int k = 0; k < e; ++k) {
            p.mul_one_minus_t_pow(static_cast<std::size_t>(i));
        }
    }
    return p;
}

int FactoredSeries::denominator_degree() const
{
    int deg = 0;
    for (const auto& [i, e] : denominator_) {
        deg += i * e;
    }
    return deg;
}

FactoredSeries FactoredSeries::over_denominator(const DenominatorExponents& target) const
{
    const DenominatorExponents goal = normalized(target);
    DensePoly num = numerator_;
    // Multiply before dividing: only the full product is guaranteed divisible.
    for (const auto& [i, e] : goal) {
        for (int k = exponent_of(denominator_, i); k < e; ++k) {
            num.mul_one_minus_t_pow(static_cast<std::size_t>(i));
        }
    }
    for (const auto& [i, e] : denominator_) {
        for (int k = exponent_of(goal, i); k < e; ++k) {
            num.div_one_minus_t_pow(static_cast<std::size_t>(i));
        }
    }
    return FactoredSeries(std::move(num), goal);
}

FactoredSeries FactoredSeries::cancelled() const
{
    if (numerator_.is_zero()) {
        return FactoredSeries();
    }
    DensePoly num = numerator_;
    DenominatorExponents den = denominator_;
    for (auto it = den.rbegin(); it != den.rend(); ++it) {
        const auto i = static_cast<std::size_t>(it->first);
        while (it->second > 0 && num.divisible_by_one_minus_t_pow(i)) {
            num.div_one_minus_t_pow(i);
            --it->second;
        }
    }
    return FactoredSeries(std::move(num), std::move(den));
}

FactoredSeries FactoredSeries::scaled(const BigRational& c) const
{
    return FactoredSeries(numerator_ * c, denominator_);
}

FactoredSeries operator+(const FactoredSeries& a, const FactoredSeries& b)
{
    const auto common = max_exponents(a.denominator_, b.denominator_);
    auto lhs = a.over_denominator(common);
    const auto rhs = b.over_denominator(common);
    lhs.numerator_ += rhs.numerator_;
    return lhs;
}

FactoredSeries operator*(const FactoredSeries& a, const FactoredSeries& b)
{
    DenominatorExponents den = a.denominator_;
    for (const auto& [i, e] : b.denominator_) {
        den[i] += e;
    }
    return FactoredSeries(a.numerator_ * b.numerator_, std::move(den));
}

DenominatorExponents phi_exponents(int n, int power)
{
    DenominatorExponents d;
    if (power == 0) {
        return d;
    }
    for (int i = 1; i <= n; ++i) {
        d[i] = power;
    }
    return d;
}

DenominatorExponents max_exponents(const DenominatorExponents& a, const DenominatorExponents& b)
{
    DenominatorExponents out = a;
    for (const auto& [i, e] : b) {
        out[i] = std::max(out[i], e);
    }
    return out;
}

TruncatedSeries expand(const FactoredSeries& f, int order)
{
    TruncatedSeries s = TruncatedSeries::from_poly(f.numerator(), order);
    for (const auto& [i, e] : f.denominator()) {
        for (int k = 0; k < e; ++k) {
            s.div_one_minus_t_pow(i);
        }
    }
    return s;
}

bool factored_equal(const FactoredSeries& a, const FactoredSeries& b)
{
    const auto common = max_exponents(a.denominator(), b.denominator());
    return a.over_denominator(common).numerator() == b.over_denominator(common).numerator();
}

std::string to_string(const FactoredSeries& f)
{
    std::ostringstream os;
    os << '(' << to_string(f.numerator()) << ") / (";
    if (f.denominator().empty()) {
        os << '1';
    }
    bool first = true;
    for (const auto& [i, e] : f.denominator()) {
        if (!first) {
            os << ' ';
        }
        first = false;
        os << "(1-t";
        if (i > 1) {
            os << '^' << i;
        }
        os << ')';
        if (e > 1) {
            os << '^' << e;
        }
    }
    os << ')';
    return os.str();
}

} // namespace invhilb
