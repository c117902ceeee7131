//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tcbm/model.hpp
//! Parameter records, Levy densities, characteristic functions and the
//! closed-form Laplace transform of the CGMY time change.
//---------------------------------------------------------------------------//
#pragma once

#include <complex>
#include <optional>

namespace tcbm
{
//---------------------------------------------------------------------------//
/*!
 * CGMY parameters with the constants of its time-changed Brownian form.
 *
 * The process is X(t) = A*T(t) + W(T(t)) with drift A = (G-M)/2 and a
 * subordinator T whose Levy measure is the one-sided stable(Y/2) measure
 * K y^{-1-Y/2} dy thinned by a kernel f(y) <= 1. Y = 1 is rejected because
 * Gamma(-Y) has a pole there.
 */
class CgmyParams
{
  public:
    CgmyParams(double C, double G, double M, double Y);

    double C() const { return c_; }
    double G() const { return g_; }
    double M() const { return m_; }
    double Y() const { return y_; }

    //! A = (G - M) / 2: drift of the subordinated Brownian motion
    double brownian_drift() const { return (g_ - m_) / 2; }
    //! B = (G + M) / 2: symmetric tempering rate
    double tempering() const { return (g_ + m_) / 2; }
    //! K: scale of the dominating stable(Y/2) Levy density
    double stable_scale() const { return stable_scale_; }
    //! Gamma(-Y) evaluated from the positive axis
    double gamma_neg_y() const { return gamma_neg_y_; }

  private:
    double c_;
    double g_;
    double m_;
    double y_;
    double stable_scale_;
    double gamma_neg_y_;
};

//---------------------------------------------------------------------------//
//! Meixner parameters: scale a > 0, skew |b| < pi, time scale delta > 0.
class MeixnerParams
{
  public:
    MeixnerParams(double a, double b, double delta);

    double a() const { return a_; }
    double b() const { return b_; }
    double delta() const { return delta_; }

    //! b / a
    double brownian_drift() const { return b_ / a_; }
    //! pi / a: barrier level of the Bessel(3) first-passage representation
    double barrier_level() const;
    //! delta * a / sqrt(2 pi): scale of the dominating stable(1/2) density
    double stable_scale() const;

  private:
    double a_;
    double b_;
    double delta_;
};

//---------------------------------------------------------------------------//
//! One-sided stable subordinator with Levy density scale * y^{-1-alpha}.
class StableSubordinatorParams
{
  public:
    StableSubordinatorParams(double alpha, double scale);

    double alpha() const { return alpha_; }
    double scale() const { return scale_; }

    StableSubordinatorParams scaled(double factor) const;

  private:
    double alpha_;
    double scale_;
};

StableSubordinatorParams dominating_subordinator(CgmyParams const& p);
StableSubordinatorParams dominating_subordinator(MeixnerParams const& p);

//---------------------------------------------------------------------------//
// Levy densities
//---------------------------------------------------------------------------//
double cgmy_levy_density(CgmyParams const& p, double x);
//! Same density written as C exp(Ax - B|x|) / |x|^{1+Y}
double cgmy_levy_density_tilted(CgmyParams const& p, double x);
double meixner_levy_density(MeixnerParams const& p, double x);

//---------------------------------------------------------------------------//
// Characteristic functions of X(t)
//---------------------------------------------------------------------------//
std::complex<double> cgmy_log_cf(CgmyParams const& p, double u, double t);
std::complex<double> cgmy_cf(CgmyParams const& p, double u, double t);
std::complex<double> meixner_log_cf(MeixnerParams const& p, double u, double t);
std::complex<double> meixner_cf(MeixnerParams const& p, double u, double t);

//---------------------------------------------------------------------------//
// Laplace transform of the CGMY time change
//---------------------------------------------------------------------------//
/*!
 * Closed-form E[exp(-lambda T(t))].
 *
 * For 2 lambda >= A^2 the value is exp(t C Gamma(-Y) [2 r^Y cos(eta Y)
 * - M^Y - G^Y]) with r = sqrt(2 lambda + GM) and eta = atan(sqrt(2 lambda -
 * A^2) / B). Below that threshold the same analytic function is evaluated on
 * its real branch, with (B - s)^Y + (B + s)^Y in place of 2 r^Y cos(eta Y)
 * and s = sqrt(A^2 - 2 lambda); \c eta is then empty.
 */
struct LaplaceEval
{
    double lambda_arg{0};
    double r{0};
    std::optional<double> eta;
    double value{1};
};

LaplaceEval
cgmy_subordinator_laplace(CgmyParams const& p, double lambda_arg, double t);

//! Special-case formula valid only for G = M.
double cgmy_subordinator_laplace_symmetric(CgmyParams const& p,
                                           double lambda_arg,
                                           double t);

//---------------------------------------------------------------------------//
// Stable parameterization
//---------------------------------------------------------------------------//
//! sigma of a one-sided stable law with Levy density c_p / x^{1+alpha}
double stable_sigma_from_cp(double c_p, double alpha);
//! Inverse of stable_sigma_from_cp
double stable_cp_from_sigma(double sigma, double alpha);
//! sigma for two-sided densities c_p x^{-1-alpha} (x>0), c_n |x|^{-1-alpha}
double stable_sigma_two_sided(double c_p, double c_n, double alpha);
//! beta = (c_p - c_n) / (c_p + c_n)
double stable_beta(double c_p, double c_n);

//---------------------------------------------------------------------------//
}  // namespace tcbm
