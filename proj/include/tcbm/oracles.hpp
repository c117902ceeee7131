//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tcbm/oracles.hpp
//! Brute-force reference computations for checking the main path.
//!
//! Everything here uses Boost quadrature and std::mt19937_64 rather than
//! the library's own integrators and counter streams.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tcbm/density.hpp"
#include "tcbm/kernels.hpp"
#include "tcbm/model.hpp"

namespace tcbm::oracle
{
//---------------------------------------------------------------------------//
/*!
 * Subordination check: integrate the time-change Levy measure against the
 * N(A y, y) density and compare with the target Levy density at each x.
 *
 * The reconstruction uses exp-sinh quadrature; a second tanh-sinh pass
 * gives \c rule_disagreement.
 */
struct SubordinationCheck
{
    std::vector<double> x;
    std::vector<double> target;
    std::vector<double> reconstructed;
    std::vector<double> residual;
    double max_residual{0};
    double rule_disagreement{0};
};

//! 20 points: +-x for 10 log-spaced |x| in [0.01, 1]
std::vector<double> default_identity_points();

SubordinationCheck subordination_identity(CgmyKernel const& kernel,
                                          std::span<double const> xs);
SubordinationCheck subordination_identity(MeixnerKernel const& kernel,
                                          std::span<double const> xs);

template<class Kernel>
double subordination_identity_residual(Kernel const& kernel,
                                       std::span<double const> xs)
{
    return subordination_identity(kernel, xs).max_residual;
}

//---------------------------------------------------------------------------//
struct McEstimate
{
    double estimate{0};
    double std_error{0};
};

/*!
 * E[exp(-y (B^2/2) g_{Y/2} / g_{1/2})] by direct simulation of the two
 * gamma variates. Deterministic for a given seed regardless of thread
 * count.
 */
McEstimate gamma_ratio_mc(CgmyParams const& p, double y, std::size_t n, std::uint64_t seed);

//! Same expectation by quadrature over the beta-prime law of the ratio
double gamma_ratio_quadrature(CgmyParams const& p, double y);

//! I(nu, a, lambda) by exp-sinh quadrature
double hermite_integral_quadrature(double nu, double a, double lambda_q);

//---------------------------------------------------------------------------//
/*!
 * First \c order cumulants (order <= 4) of the law with characteristic
 * function cf(., t), by polynomial extrapolation to zero of the even and
 * odd parts of log cf sampled at h = step j / 6, j = 1..6.
 *
 * \c step must stay well inside the strip of analyticity of the cf.
 */
std::vector<double> cf_cumulants(CfHandle const& cf, double t, int order, double step = 0.5);

//! Closed-form cumulants 1..4 (see README for the derivations)
std::vector<double> cgmy_cumulants(CgmyParams const& p, double t);
std::vector<double> meixner_cumulants(MeixnerParams const& p, double t);

//---------------------------------------------------------------------------//
//! Density at x by Ooura's double-exponential Fourier quadrature
double fourier_density(CfHandle const& cf, double t, double x);
//! Gil-Pelaez CDF at x by Ooura's double-exponential Fourier quadrature
double gil_pelaez_cdf(CfHandle const& cf, double t, double x);

//---------------------------------------------------------------------------//
/*!
 * Fraction of discretized 3-d Brownian paths on [0, s] whose radius
 * reaches one: a coarse, low-biased estimate of P(T_1 <= s).
 */
double bessel3_hit_fraction(double s, std::size_t paths, std::size_t steps, std::uint64_t seed);

//---------------------------------------------------------------------------//
}  // namespace tcbm::oracle
