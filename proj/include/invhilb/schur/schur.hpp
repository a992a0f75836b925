#pragma once

#include "invhilb/partitions/partition.hpp"
#include "invhilb/schur/immanant.hpp"
#include "invhilb/schur/sym_poly.hpp"
#include "invhilb/series/factored_series.hpp"
#include "invhilb/series/truncated_series.hpp"

namespace invhilb {

/// The n x n Newton-identity matrix in power sums: s_{i-j+1} on and below the
/// diagonal, 1, 2, ..., n-1 on the superdiagonal, zero elsewhere.
Matrix<FiniteSymPoly> newton_matrix(int n, int m);

/// Schur polynomial {lambda} on m variables as |s|^(lambda) / n!.
/// Requires |lambda| <= 7.
FiniteSymPoly schur_finite(const Partition& lambda, int m);

/// {lambda} = sum_rho chi^lambda_rho s_rho / z_rho on m variables.
FiniteSymPoly schur_finite_via_characters(const Partition& lambda, int m);

/// n_lambda = lambda_2 + 2 lambda_3 + ... + (l-1) lambda_l
int n_lambda(const Partition& lambda);

/// {lambda : t}, the Schur function at 1, t, t^2, ..., in closed product form:
/// t^{n_lambda} prod_{r<s} (1 - t^{lambda_r - lambda_s - r + s}) / prod_r phi_{lambda_r + l - r}(t).
/// Numerator factors are cancelled against the denominator before expansion.
FactoredSeries schur_q(const Partition& lambda);

/// Same specialization via sum_rho chi^lambda_rho / z_rho prod_i 1/(1 - t^{rho_i}).
TruncatedSeries schur_q_via_characters(const Partition& lambda, int order);

/// s_lambda rebuilt as sum_mu chi^mu_lambda {mu}; |lambda| <= 6, m <= 5.
FiniteSymPoly power_sum_decomposition(const Partition& lambda, int m);

/// sum_{|lambda| = n} {lambda}(alpha_1..alpha_k) {lambda}(beta_1..beta_l)
/// against h_n over the k*l products alpha_i beta_j. n <= 4, k, l <= 3.
bool cauchy_check(int n, int k, int l);

} // namespace invhilb
