//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file special_functions.cpp
//---------------------------------------------------------------------------//
#include "tcbm/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "tcbm/errors.hpp"
#include "tcbm/quadrature.hpp"

namespace tcbm
{
using std::numbers::pi;

//---------------------------------------------------------------------------//
double hermite_integral(double nu, double a, double lambda_q, double rel_tol)
{
    detail::require(std::isfinite(nu) && nu > 0,
                    "hermite_integral: nu must be positive");
    detail::require(std::isfinite(a) && a >= 0,
                    "hermite_integral: a must be nonnegative");
    detail::require(std::isfinite(lambda_q) && lambda_q > 0,
                    "hermite_integral: lambda must be positive");

    // With x = s / sqrt(lambda) the linear coefficient becomes
    // b = a / sqrt(lambda); for moderate b the entire series
    // 1/2 sum_k (-b)^k / k! Gamma((nu + k)/2) converges without damaging
    // cancellation and is much cheaper than quadrature.
    double const b = a / std::sqrt(lambda_q);
    if (b <= 4)
    {
        double g_even = std::tgamma(nu / 2);
        double g_odd = std::tgamma((nu + 1) / 2);
        double coeff = 1;
        double sum = 0;
        for (int k = 0; k < 400; ++k)
        {
            double const g = (k % 2 == 0) ? g_even : g_odd;
            double const term = coeff * g;
            sum += term;
            if (k > b * b && std::abs(term) < 1e-17 * std::abs(sum))
            {
                break;
            }
            if (k % 2 == 0)
            {
                g_even *= (nu + k) / 2;
            }
            else
            {
                g_odd *= (nu + k) / 2;
            }
            coeff *= -b / (k + 1);
        }
        return 0.5 * sum * std::pow(lambda_q, -nu / 2);
    }

    // Root of lambda x^2 + a x = 1, written to avoid cancellation.
    double const x_unit = 2 / (a + std::sqrt(a * a + 4 * lambda_q));
    double const scale = std::pow(x_unit, nu);
    double const inv_nu = 1 / nu;

    auto integrand = [=](double s) {
        double const one_minus = 1 - s;
        double const w = scale * s / one_minus;
        double const x = std::pow(w, inv_nu);
        double const exponent = a * x + lambda_q * x * x;
        if (exponent > 745)
        {
            return 0.0;
        }
        return std::exp(-exponent) * scale / (one_minus * one_minus);
    };

    QuadratureOptions opts;
    opts.rel_tol = rel_tol;
    opts.max_intervals = 4000;
    auto const result = integrate_adaptive(integrand, 0.0, 1.0, opts);
    if (!result.converged)
    {
        std::ostringstream msg;
        msg << "hermite_integral(" << nu << ", " << a << ", " << lambda_q
            << "): relative error estimate "
            << result.error / std::abs(result.value) << " exceeds "
            << rel_tol;
        throw NumericalError(msg.str());
    }
    return result.value * inv_nu;
}

//---------------------------------------------------------------------------//
double gamma_ratio_laplace(double Y, double lambda_arg)
{
    detail::require(std::isfinite(Y) && Y > 0 && Y < 2,
                    "gamma_ratio_laplace: Y must lie in (0, 2)");
    detail::require(std::isfinite(lambda_arg) && lambda_arg >= 0,
                    "gamma_ratio_laplace: lambda must be nonnegative");
    double const prefactor = std::tgamma((Y + 1) / 2)
                             / (std::tgamma(Y) * std::sqrt(pi))
                             * std::pow(2.0, Y);
    double const value
        = prefactor * hermite_integral(Y, 2 * std::sqrt(lambda_arg), 1.0);
    // The closed form is a Laplace transform of a positive variable.
    return std::min(value, 1.0);
}

double cgmy_mixture_laplace(CgmyParams const& p, double y)
{
    detail::require(std::isfinite(y) && y > 0,
                    "cgmy_mixture_laplace: y must be positive");
    double const B = p.tempering();
    return gamma_ratio_laplace(p.Y(), B * B * y / 2);
}

//---------------------------------------------------------------------------//
void ThetaSeriesConfig::validate() const
{
    detail::require(abs_tol > 0 && abs_tol <= 1e-6,
                    "ThetaSeriesConfig: abs_tol must lie in (0, 1e-6]");
    detail::require(crossover > 0 && std::isfinite(crossover),
                    "ThetaSeriesConfig: crossover must be positive");
}

namespace
{
// 1 + 2 sum_{n>=1} (-1)^n e^{-n^2 x}
double theta_direct(double x, double abs_tol)
{
    double sum = 1;
    for (int n = 1;; ++n)
    {
        double const term = 2 * std::exp(-double(n) * n * x);
        if (term < abs_tol)
        {
            break;
        }
        sum += (n % 2 == 1) ? -term : term;
    }
    return sum;
}

// sum_{k>=0} e^{-((k+1/2)^2 - 1/4) pi^2 / x}, first term equal to one
double theta_transformed_tail(double x, double abs_tol)
{
    double sum = 1;
    for (int k = 1;; ++k)
    {
        double const h = k + 0.5;
        double const term = std::exp(-(h * h - 0.25) * pi * pi / x);
        if (term < abs_tol)
        {
            break;
        }
        sum += term;
    }
    return sum;
}
}  // namespace

double alternating_theta(double x, ThetaSeriesConfig const& cfg)
{
    cfg.validate();
    detail::require(std::isfinite(x) && x > 0,
                    "alternating_theta: argument must be positive");
    if (x >= cfg.crossover)
    {
        return theta_direct(x, cfg.abs_tol);
    }
    return std::exp(log_alternating_theta(x, cfg));
}

double log_alternating_theta(double x, ThetaSeriesConfig const& cfg)
{
    cfg.validate();
    detail::require(std::isfinite(x) && x > 0,
                    "log_alternating_theta: argument must be positive");
    if (x >= cfg.crossover)
    {
        return std::log(theta_direct(x, cfg.abs_tol));
    }
    return std::log(2 * std::sqrt(pi / x)) - pi * pi / (4 * x)
           + std::log(theta_transformed_tail(x, cfg.abs_tol));
}

double bessel3_barrier_cdf(double s, ThetaSeriesConfig const& cfg)
{
    detail::require(std::isfinite(s) && s > 0,
                    "bessel3_barrier_cdf: s must be positive");
    return std::clamp(alternating_theta(pi * pi * s / 2, cfg), 0.0, 1.0);
}

double bessel3_barrier_log_cdf(double s, ThetaSeriesConfig const& cfg)
{
    detail::require(std::isfinite(s) && s > 0,
                    "bessel3_barrier_log_cdf: s must be positive");
    return std::min(log_alternating_theta(pi * pi * s / 2, cfg), 0.0);
}

//---------------------------------------------------------------------------//
double regularized_gamma_q(double k, double x)
{
    detail::require(std::isfinite(k) && k > 0,
                    "regularized_gamma_q: k must be positive");
    detail::require(x >= 0, "regularized_gamma_q: x must be nonnegative");
    if (x == 0)
    {
        return 1;
    }
    if (std::isinf(x))
    {
        return 0;
    }
    return boost::math::gamma_q(k, x);
}

double regularized_gamma_p(double k, double x)
{
    detail::require(std::isfinite(k) && k > 0,
                    "regularized_gamma_p: k must be positive");
    detail::require(x >= 0, "regularized_gamma_p: x must be nonnegative");
    if (x == 0)
    {
        return 0;
    }
    if (std::isinf(x))
    {
        return 1;
    }
    return boost::math::gamma_p(k, x);
}

double standard_normal_quantile(double u)
{
    detail::require(u > 0 && u < 1,
                    "standard_normal_quantile: u must lie in (0, 1)");
    return -std::numbers::sqrt2 * boost::math::erfc_inv(2 * u);
}

double standard_normal_cdf(double x)
{
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

//---------------------------------------------------------------------------//
}  // namespace tcbm
