//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tcbm/kernels.hpp
//! Thinning kernels relating the CGMY and Meixner time changes to
//! one-sided stable subordinators.
//---------------------------------------------------------------------------//
#pragma once

#include <functional>
#include <string_view>

#include "tcbm/model.hpp"
#include "tcbm/special_functions.hpp"

namespace tcbm
{
//---------------------------------------------------------------------------//
enum class CgmyKernelVariant
{
    //! exp(-(B^2 - A^2) y / 2) E[exp(-y Z)]: reproduces the CGMY density
    ac_form,
    //! exp(-B^2 y / 2) E[exp(-y Z)]: the literal simulation recipe
    alg_form,
};

std::string_view to_string(CgmyKernelVariant v);
CgmyKernelVariant parse_cgmy_kernel_variant(std::string_view name);

/*!
 * Density f(y) of the CGMY time-change Levy measure with respect to
 * K y^{-1-Y/2} dy, with Z = (B^2/2) g_{Y/2} / g_{1/2}.
 */
class CgmyKernel
{
  public:
    explicit CgmyKernel(CgmyParams params,
                        CgmyKernelVariant variant = CgmyKernelVariant::ac_form);

    CgmyParams const& params() const { return params_; }
    CgmyKernelVariant variant() const { return variant_; }

    //! Rate r of the exponential prefactor exp(-r y)
    double exponential_rate() const { return rate_; }

    double operator()(double y) const;

    //! f(y) > w, skipping the mixture transform when exp(-r y) <= w
    bool accepts(double y, double w) const;

  private:
    CgmyParams params_;
    CgmyKernelVariant variant_;
    double rate_;
};

double cgmy_accept_prob(CgmyKernel const& k, double y);

//---------------------------------------------------------------------------//
/*!
 * Density g(u) of the Meixner time-change Levy measure with respect to
 * delta a / sqrt(2 pi u^3) du:
 *
 *   g(u) = P(T_1 <= 1 / (C^2 u)) exp(A^2 u / 2),  C = pi/a, A = b/a,
 *
 * with T_1 the BES(3) hitting time of level 1. g -> 1 as u -> 0 and decays
 * like exp(-(C^2 - A^2) u / 2) at infinity, but for b != 0 it rises above
 * one at intermediate u. The thinning step therefore proposes from the
 * stable measure scaled by envelope() = sup g and accepts with
 * g / envelope().
 */
class MeixnerKernel
{
  public:
    explicit MeixnerKernel(MeixnerParams params, ThetaSeriesConfig theta = {});

    MeixnerParams const& params() const { return params_; }

    //! g(u)
    double operator()(double u) const;

    //! sup_u g(u) (>= 1), padded by one part in 1e12
    double envelope() const { return envelope_; }

    //! g(u) / envelope() in (0, 1]
    double thinning_prob(double u) const;

    bool accepts(double u, double w) const { return thinning_prob(u) > w; }

  private:
    MeixnerParams params_;
    ThetaSeriesConfig theta_;
    double envelope_{1};
};

//! The Radon-Nikodym ratio g(u) of the Meixner time change (see above)
double meixner_accept_prob(MeixnerKernel const& k, double u);

//---------------------------------------------------------------------------//
/*!
 * int_0^inf y^{-1-alpha} (sqrt(k(y)) - 1)^2 dy, the finiteness condition for
 * absolute continuity of the two subordinators.
 *
 * Integrated over s = log y on [log y_min, s_max] with analytic tail
 * estimates: below y_min the integrand is taken to vanish like y^{1-alpha};
 * above, k is taken as zero so the tail is y_max^{-alpha} / alpha.
 */
struct IntegrabilityReport
{
    double value{0};
    double quadrature_part{0};
    double lower_tail{0};
    double upper_tail{0};
    double error_estimate{0};
    int intervals{0};
};

struct IntegrabilityOptions
{
    double y_min{1e-30};
    //! Upper tail bound target relative to one
    double tail_target{1e-14};
    double rel_tol{1e-10};
};

IntegrabilityReport
ac_integrability_check(std::function<double(double)> const& kernel,
                       double alpha,
                       IntegrabilityOptions const& opts = {});
IntegrabilityReport ac_integrability_check(CgmyKernel const& k,
                                           IntegrabilityOptions const& opts = {});
IntegrabilityReport ac_integrability_check(MeixnerKernel const& k,
                                           IntegrabilityOptions const& opts = {});

//---------------------------------------------------------------------------//
}  // namespace tcbm
