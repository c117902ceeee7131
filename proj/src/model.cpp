//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file model.cpp
//---------------------------------------------------------------------------//
#include "tcbm/model.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <string>

#include "tcbm/errors.hpp"

namespace tcbm
{
namespace
{
using std::numbers::pi;
using Complex = std::complex<double>;

bool finite_positive(double v)
{
    return std::isfinite(v) && v > 0;
}

// Gamma(-y) for y in (0, 2) \ {1}, by recurrence from Gamma(2 - y) > 0.
double gamma_of_negative(double y)
{
    return std::tgamma(2 - y) / ((-y) * (1 - y));
}

// Principal-branch z^y for Re z > 0; the branch cut is never approached.
Complex principal_pow(Complex z, double y)
{
    assert(z.real() > 0);
    return std::pow(z, y);
}

// log cosh(w) without overflow for large |Re w|.
Complex log_cosh(Complex w)
{
    if (w.real() < 0)
    {
        w = -w;
    }
    return w + std::log(1.0 + std::exp(-2.0 * w)) - std::numbers::ln2;
}
}  // namespace

//---------------------------------------------------------------------------//
CgmyParams::CgmyParams(double C, double G, double M, double Y)
    : c_(C), g_(G), m_(M), y_(Y)
{
    detail::require(finite_positive(C), "CGMY: C must be positive");
    detail::require(finite_positive(G), "CGMY: G must be positive");
    detail::require(finite_positive(M), "CGMY: M must be positive");
    detail::require(std::isfinite(Y) && Y > 0 && Y < 2,
                    "CGMY: Y must lie in (0, 2)");
    detail::require(Y != 1, "CGMY: Y = 1 is unsupported (Gamma(-Y) pole)");

    // Matches the small-|x| behaviour C/|x|^{1+Y} of the subordinated
    // stable(Y/2) density K y^{-1-Y/2}.
    stable_scale_ = C * std::sqrt(pi)
                    / (std::pow(2.0, Y / 2) * std::tgamma((Y + 1) / 2));
    gamma_neg_y_ = gamma_of_negative(Y);
}

//---------------------------------------------------------------------------//
MeixnerParams::MeixnerParams(double a, double b, double delta)
    : a_(a), b_(b), delta_(delta)
{
    detail::require(finite_positive(a), "Meixner: a must be positive");
    detail::require(std::isfinite(b) && std::abs(b) < pi,
                    "Meixner: b must lie in (-pi, pi)");
    detail::require(finite_positive(delta), "Meixner: delta must be positive");
}

double MeixnerParams::barrier_level() const
{
    return pi / a_;
}

double MeixnerParams::stable_scale() const
{
    return delta_ * a_ / std::sqrt(2 * pi);
}

//---------------------------------------------------------------------------//
StableSubordinatorParams::StableSubordinatorParams(double alpha, double scale)
    : alpha_(alpha), scale_(scale)
{
    detail::require(std::isfinite(alpha) && alpha > 0 && alpha < 1,
                    "stable subordinator: alpha must lie in (0, 1)");
    detail::require(finite_positive(scale),
                    "stable subordinator: scale must be positive");
}

StableSubordinatorParams StableSubordinatorParams::scaled(double factor) const
{
    return {alpha_, scale_ * factor};
}

StableSubordinatorParams dominating_subordinator(CgmyParams const& p)
{
    return {p.Y() / 2, p.stable_scale()};
}

StableSubordinatorParams dominating_subordinator(MeixnerParams const& p)
{
    return {0.5, p.stable_scale()};
}

//---------------------------------------------------------------------------//
double cgmy_levy_density(CgmyParams const& p, double x)
{
    detail::require(x != 0 && std::isfinite(x),
                    "cgmy_levy_density: x must be nonzero");
    double const ax = std::abs(x);
    double const rate = x < 0 ? p.G() : p.M();
    return p.C() * std::exp(-rate * ax) / std::pow(ax, 1 + p.Y());
}

double cgmy_levy_density_tilted(CgmyParams const& p, double x)
{
    detail::require(x != 0 && std::isfinite(x),
                    "cgmy_levy_density_tilted: x must be nonzero");
    double const ax = std::abs(x);
    return p.C() * std::exp(p.brownian_drift() * x - p.tempering() * ax)
           / std::pow(ax, 1 + p.Y());
}

double meixner_levy_density(MeixnerParams const& p, double x)
{
    detail::require(x != 0 && std::isfinite(x),
                    "meixner_levy_density: x must be nonzero");
    double const z = pi * x / p.a();
    // x sinh(z) > 0 for x != 0; factor e^{|z|} out of sinh to avoid overflow.
    double const ax = std::abs(x);
    double const az = std::abs(z);
    double const log_denominator
        = std::log(ax) + az + std::log1p(-std::exp(-2 * az)) - std::numbers::ln2;
    return p.delta() * std::exp(p.brownian_drift() * x - log_denominator);
}

//---------------------------------------------------------------------------//
Complex cgmy_log_cf(CgmyParams const& p, double u, double t)
{
    detail::require(t > 0, "cgmy_cf: t must be positive");
    double const Y = p.Y();
    Complex const right = principal_pow(Complex{p.M(), -u}, Y);
    Complex const left = principal_pow(Complex{p.G(), u}, Y);
    Complex const bracket = right - std::pow(p.M(), Y) + left
                            - std::pow(p.G(), Y);
    return t * p.C() * p.gamma_neg_y() * bracket;
}

Complex cgmy_cf(CgmyParams const& p, double u, double t)
{
    return std::exp(cgmy_log_cf(p, u, t));
}

Complex meixner_log_cf(MeixnerParams const& p, double u, double t)
{
    detail::require(t > 0, "meixner_cf: t must be positive");
    Complex const w{p.a() * u / 2, -p.b() / 2};
    return 2 * p.delta() * t * (std::log(std::cos(p.b() / 2)) - log_cosh(w));
}

Complex meixner_cf(MeixnerParams const& p, double u, double t)
{
    return std::exp(meixner_log_cf(p, u, t));
}

//---------------------------------------------------------------------------//
LaplaceEval
cgmy_subordinator_laplace(CgmyParams const& p, double lambda_arg, double t)
{
    detail::require(std::isfinite(lambda_arg) && lambda_arg >= 0,
                    "cgmy_subordinator_laplace: lambda must be nonnegative");
    detail::require(t > 0, "cgmy_subordinator_laplace: t must be positive");
    double const Y = p.Y();
    double const A = p.brownian_drift();
    double const B = p.tempering();
    double const gap = 2 * lambda_arg - A * A;

    LaplaceEval result;
    result.lambda_arg = lambda_arg;
    result.r = std::sqrt(2 * lambda_arg + p.G() * p.M());
    double mixed;
    if (gap >= 0)
    {
        double const eta = std::atan(std::sqrt(gap) / B);
        result.eta = eta;
        mixed = 2 * std::pow(result.r, Y) * std::cos(eta * Y);
    }
    else
    {
        double const s = std::sqrt(-gap);
        mixed = std::pow(B - s, Y) + std::pow(B + s, Y);
    }
    double const exponent = t * p.C() * p.gamma_neg_y()
                            * (mixed - std::pow(p.M(), Y) - std::pow(p.G(), Y));
    result.value = std::exp(exponent);
    return result;
}

double cgmy_subordinator_laplace_symmetric(CgmyParams const& p,
                                           double lambda_arg,
                                           double t)
{
    detail::require(p.G() == p.M(),
                    "cgmy_subordinator_laplace_symmetric: requires G = M");
    detail::require(std::isfinite(lambda_arg) && lambda_arg >= 0,
                    "cgmy_subordinator_laplace_symmetric: lambda must be "
                    "nonnegative");
    detail::require(t > 0, "cgmy_subordinator_laplace_symmetric: t > 0");
    double const Y = p.Y();
    double const M = p.M();
    double const bracket
        = std::pow(2 * lambda_arg + M * M, Y / 2)
              * std::cos(Y * std::atan(std::sqrt(2 * lambda_arg) / M))
          - std::pow(M, Y);
    return std::exp(2 * t * p.C() * p.gamma_neg_y() * bracket);
}

//---------------------------------------------------------------------------//
namespace
{
double stable_gamma_ratio(double alpha)
{
    detail::require(std::isfinite(alpha) && alpha > 0 && alpha < 2,
                    "stable: alpha must lie in (0, 2)");
    return std::tgamma(alpha / 2) * std::tgamma(1 - alpha / 2)
           / std::tgamma(1 + alpha);
}
}  // namespace

double stable_sigma_from_cp(double c_p, double alpha)
{
    double const ratio = stable_gamma_ratio(alpha);
    detail::require(finite_positive(c_p), "stable: c_p must be positive");
    return std::pow(c_p * ratio / 2, 1 / alpha);
}

double stable_cp_from_sigma(double sigma, double alpha)
{
    double const ratio = stable_gamma_ratio(alpha);
    detail::require(finite_positive(sigma), "stable: sigma must be positive");
    return 2 * std::pow(sigma, alpha) / ratio;
}

double stable_sigma_two_sided(double c_p, double c_n, double alpha)
{
    double const ratio = stable_gamma_ratio(alpha);
    detail::require(c_p >= 0 && c_n >= 0 && c_p + c_n > 0,
                    "stable: c_p, c_n must be nonnegative and not both zero");
    return std::pow((c_p + c_n) / 2 * ratio, 1 / alpha);
}

double stable_beta(double c_p, double c_n)
{
    detail::require(c_p >= 0 && c_n >= 0 && c_p + c_n > 0,
                    "stable: c_p, c_n must be nonnegative and not both zero");
    return (c_p - c_n) / (c_p + c_n);
}

//---------------------------------------------------------------------------//
}  // namespace tcbm
