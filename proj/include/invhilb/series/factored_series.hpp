#pragma once

#include <map>
#include <string>

#include "invhilb/series/dense_poly.hpp"
#include "invhilb/series/truncated_series.hpp"

namespace invhilb {

/// Exponents e_i of a denominator prod_i (1 - t^i)^{e_i}; never stores zeros.
using DenominatorExponents = std::map<int, int>;

/// Rational function numerator / prod_i (1 - t^i)^{e_i}, the shape every
/// Hilbert series here takes. Equality of the represented functions is
/// decided by factored_equal(); operator== compares representations.
class FactoredSeries {
public:
    FactoredSeries();
    FactoredSeries(DensePoly numerator, DenominatorExponents denominator);

    /// 1 / prod_i (1 - t^i)^{e_i}
    static FactoredSeries reciprocal(DenominatorExponents denominator);

    const DensePoly& numerator() const { return numerator_; }
    const DenominatorExponents& denominator() const { return denominator_; }
    DensePoly denominator_poly() const;
    int denominator_degree() const;

    /// Same function over `target`; throws std::domain_error if the numerator
    /// would not be a polynomial.
    FactoredSeries over_denominator(const DenominatorExponents& target) const;

    /// Cancels (1 - t^i) factors that divide the numerator, largest i first.
    FactoredSeries cancelled() const;

    FactoredSeries scaled(const BigRational& c) const;

    friend FactoredSeries operator+(const FactoredSeries& a, const FactoredSeries& b);
    friend FactoredSeries operator*(const FactoredSeries& a, const FactoredSeries& b);
    friend bool operator==(const FactoredSeries& a, const FactoredSeries& b) = default;

private:
    DensePoly numerator_;
    DenominatorExponents denominator_;
};

/// Exponents of phi_n(t)^power = prod_{i<=n} (1 - t^i)^power.
DenominatorExponents phi_exponents(int n, int power = 1);
DenominatorExponents max_exponents(const DenominatorExponents& a, const DenominatorExponents& b);

TruncatedSeries expand(const FactoredSeries& f, int order);

bool factored_equal(const FactoredSeries& a, const FactoredSeries& b);

std::string to_string(const FactoredSeries& f);

} // namespace invhilb
