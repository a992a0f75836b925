#pragma once

#include <string>

#include "invhilb/molien/molien.hpp"
#include "invhilb/partitions/partition.hpp"
#include "invhilb/series/dense_poly.hpp"
#include "invhilb/series/factored_series.hpp"

namespace invhilb::cli {

/// 1+t^2+2t^3+t^{10}
std::string latex_poly(const DensePoly& p);
/// (1-t)^2(1-t^2)^2
std::string latex_denominator(const DenominatorExponents& e);
/// \dfrac{num}{den}
std::string latex_fraction(const FactoredSeries& f);

/// H(K[V\oplus V]^{S_n},t)=\dfrac{...}{...}, or the V_\Gamma form for
/// several components.
std::string latex_hilbert(const GammaSpec& spec, const FactoredSeries& f);
/// \{(2,1):t\}=\dfrac{...}{...}
std::string latex_schur(const Partition& lambda, const FactoredSeries& f);

} // namespace invhilb::cli
