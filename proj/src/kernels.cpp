//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file kernels.cpp
//---------------------------------------------------------------------------//
#include "tcbm/kernels.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "tcbm/errors.hpp"
#include "tcbm/quadrature.hpp"

namespace tcbm
{
//---------------------------------------------------------------------------//
std::string_view to_string(CgmyKernelVariant v)
{
    return v == CgmyKernelVariant::ac_form ? "ac" : "alg";
}

CgmyKernelVariant parse_cgmy_kernel_variant(std::string_view name)
{
    if (name == "ac")
    {
        return CgmyKernelVariant::ac_form;
    }
    if (name == "alg")
    {
        return CgmyKernelVariant::alg_form;
    }
    throw DomainError("unknown CGMY kernel variant '" + std::string(name)
                      + "' (expected ac or alg)");
}

//---------------------------------------------------------------------------//
CgmyKernel::CgmyKernel(CgmyParams params, CgmyKernelVariant variant)
    : params_(params), variant_(variant)
{
    double const A = params_.brownian_drift();
    double const B = params_.tempering();
    rate_ = variant_ == CgmyKernelVariant::ac_form ? (B * B - A * A) / 2
                                                   : B * B / 2;
}

double CgmyKernel::operator()(double y) const
{
    detail::require(std::isfinite(y) && y > 0,
                    "cgmy kernel: y must be positive");
    double const prefactor = std::exp(-rate_ * y);
    if (prefactor == 0)
    {
        return 0;
    }
    return prefactor * cgmy_mixture_laplace(params_, y);
}

bool CgmyKernel::accepts(double y, double w) const
{
    if (std::exp(-rate_ * y) <= w)
    {
        return false;
    }
    return (*this)(y) > w;
}

double cgmy_accept_prob(CgmyKernel const& k, double y)
{
    return k(y);
}

//---------------------------------------------------------------------------//
namespace
{
// Golden-section maximization of a unimodal function on [lo, hi].
template<class F>
double golden_max(F&& f, double lo, double hi, double& arg_max)
{
    double const inv_phi = (std::sqrt(5.0) - 1) / 2;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    for (int iter = 0; iter < 200 && hi - lo > 1e-12 * (1 + std::abs(lo));
         ++iter)
    {
        if (fc > fd)
        {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        }
        else
        {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    arg_max = 0.5 * (lo + hi);
    return std::max(fc, fd);
}
}  // namespace

MeixnerKernel::MeixnerKernel(MeixnerParams params, ThetaSeriesConfig theta)
    : params_(params), theta_(theta)
{
    theta_.validate();
    if (params_.b() == 0)
    {
        envelope_ = 1;
        return;
    }
    // Scan log u over the range where g departs from one, then refine.
    double const c2 = params_.barrier_level() * params_.barrier_level();
    auto g_of_log = [this](double log_u) { return (*this)(std::exp(log_u)); };
    double const lo = std::log(1e-6 / c2);
    double const hi = std::log(1e3 / c2);
    int const n = 2000;
    double best = 0;
    int best_i = 0;
    for (int i = 0; i <= n; ++i)
    {
        double const v = g_of_log(lo + (hi - lo) * i / n);
        if (v > best)
        {
            best = v;
            best_i = i;
        }
    }
    double const step = (hi - lo) / n;
    double arg = 0;
    double const refined
        = golden_max(g_of_log,
                     lo + step * std::max(best_i - 1, 0),
                     lo + step * std::min(best_i + 1, n),
                     arg);
    envelope_ = std::max({1.0, best, refined}) * (1 + 1e-12);
}

double MeixnerKernel::operator()(double u) const
{
    detail::require(std::isfinite(u) && u > 0,
                    "meixner kernel: u must be positive");
    double const C = params_.barrier_level();
    double const A = params_.brownian_drift();
    double const log_g = bessel3_barrier_log_cdf(1 / (C * C * u), theta_)
                         + A * A * u / 2;
    return std::exp(log_g);
}

double MeixnerKernel::thinning_prob(double u) const
{
    return std::min((*this)(u) / envelope_, 1.0);
}

double meixner_accept_prob(MeixnerKernel const& k, double u)
{
    return k(u);
}

//---------------------------------------------------------------------------//
IntegrabilityReport
ac_integrability_check(std::function<double(double)> const& kernel,
                       double alpha,
                       IntegrabilityOptions const& opts)
{
    detail::require(alpha > 0 && alpha < 1,
                    "ac_integrability_check: alpha must lie in (0, 1)");
    detail::require(opts.y_min > 0 && opts.tail_target > 0,
                    "ac_integrability_check: invalid options");

    auto integrand = [&](double s) {
        double const y = std::exp(s);
        double const k = kernel(y);
        double const gap = k - 1;
        double const root_gap = gap / (std::sqrt(k) + 1);
        return std::exp(-alpha * s) * root_gap * root_gap;
    };

    double const s_lo = std::log(opts.y_min);
    double const s_hi = std::log(1 / (alpha * opts.tail_target)) / alpha;

    // Unit-width panels in log y keep every feature resolved by the
    // adaptive rule.
    IntegrabilityReport report;
    QuadratureOptions qopts;
    qopts.rel_tol = opts.rel_tol;
    qopts.abs_tol = 1e-300;
    qopts.max_intervals = 200;
    double const width = 2.0;
    for (double a = s_lo; a < s_hi; a += width)
    {
        double const b = std::min(a + width, s_hi);
        auto const part = integrate_adaptive(integrand, a, b, qopts);
        report.quadrature_part += part.value;
        report.error_estimate += part.error;
        report.intervals += part.intervals;
    }
    report.lower_tail = integrand(s_lo) / (1 - alpha);
    double const k_hi = kernel(std::exp(s_hi));
    double const root_gap_hi = std::sqrt(k_hi) - 1;
    report.upper_tail = std::exp(-alpha * s_hi) / alpha * root_gap_hi
                        * root_gap_hi;
    report.value = report.quadrature_part + report.lower_tail
                   + report.upper_tail;

    if (!std::isfinite(report.value)
        || report.error_estimate > 1e-6 * std::max(report.value, 1e-300)
               + 1e-300)
    {
        std::ostringstream msg;
        msg << "ac_integrability_check: quadrature did not converge (partial "
               "sum "
            << report.quadrature_part << ", error estimate "
            << report.error_estimate << ", lower tail " << report.lower_tail
            << ", upper tail " << report.upper_tail << ")";
        throw NumericalError(msg.str());
    }
    return report;
}

IntegrabilityReport
ac_integrability_check(CgmyKernel const& k, IntegrabilityOptions const& opts)
{
    return ac_integrability_check(
        [&k](double y) { return k(y); }, k.params().Y() / 2, opts);
}

IntegrabilityReport
ac_integrability_check(MeixnerKernel const& k, IntegrabilityOptions const& opts)
{
    return ac_integrability_check(
        [&k](double u) { return k(u); }, 0.5, opts);
}

//---------------------------------------------------------------------------//
}  // namespace tcbm
