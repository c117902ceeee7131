//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tcbm/special_functions.hpp
//---------------------------------------------------------------------------//
#pragma once

#include "tcbm/model.hpp"

namespace tcbm
{
//---------------------------------------------------------------------------//
/*!
 * I(nu, a, lambda) = int_0^inf x^{nu-1} exp(-a x - lambda x^2) dx.
 *
 * For a / sqrt(lambda) <= 4 the entire power series in a is summed.
 * Otherwise adaptive Gauss-Kronrod quadrature is used after mapping
 * x = w^{1/nu} (removes the x^{nu-1} endpoint singularity) and
 * w = L s / (1 - s) onto [0, 1), with L placed where the exponent reaches
 * one; that branch throws NumericalError if the relative error estimate
 * stays above \c rel_tol.
 */
double hermite_integral(double nu, double a, double lambda_q, double rel_tol = 1e-12);

/*!
 * E[exp(-y (B^2/2) g_{Y/2} / g_{1/2})] for independent unit-scale gammas.
 *
 * Closed form Gamma((Y+1)/2) / (Gamma(Y) Gamma(1/2)) 2^Y (B^2 y/2)^{Y/2}
 * I(Y, B^2 y, B^2 y / 2), computed as the equivalent
 * c 2^Y I(Y, 2 sqrt(B^2 y / 2), 1) so that the y -> 0 limit is stable.
 */
double cgmy_mixture_laplace(CgmyParams const& p, double y);

//! Same transform as a function of Y and lambda = B^2 y / 2 only.
double gamma_ratio_laplace(double Y, double lambda_arg);

//---------------------------------------------------------------------------//
//! Evaluation strategy for the alternating theta series.
struct ThetaSeriesConfig
{
    double abs_tol{1e-15};
    //! Series argument at which the direct sum takes over from the
    //! modular transform
    double crossover{1.0};

    void validate() const;
};

/*!
 * Sum over all integers n of (-1)^n exp(-n^2 x), x > 0.
 *
 * Direct series for x >= crossover; otherwise the Poisson-summation form
 * 2 sqrt(pi/x) sum_{k>=0} exp(-(k+1/2)^2 pi^2 / x).
 */
double alternating_theta(double x, ThetaSeriesConfig const& cfg = {});

//! Logarithm of alternating_theta, accurate where the value underflows.
double log_alternating_theta(double x, ThetaSeriesConfig const& cfg = {});

/*!
 * P(T_1 <= s) for the first hitting time of level 1 by a BES(3) process
 * started at 0, equal to alternating_theta(pi^2 s / 2).
 *
 * Equivalently P(max_{t<=1} R_t >= 1/sqrt(s)).
 */
double bessel3_barrier_cdf(double s, ThetaSeriesConfig const& cfg = {});
double bessel3_barrier_log_cdf(double s, ThetaSeriesConfig const& cfg = {});

//---------------------------------------------------------------------------//
//! Upper regularized incomplete gamma Q(k, x)
double regularized_gamma_q(double k, double x);
//! Lower regularized incomplete gamma P(k, x)
double regularized_gamma_p(double k, double x);

//! Standard normal quantile for u in (0, 1)
double standard_normal_quantile(double u);
//! Standard normal CDF
double standard_normal_cdf(double x);

//---------------------------------------------------------------------------//
}  // namespace tcbm
