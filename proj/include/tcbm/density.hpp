//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tcbm/density.hpp
//! Densities on a grid by Fourier inversion of a characteristic function.
//---------------------------------------------------------------------------//
#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "tcbm/model.hpp"

namespace tcbm
{
//---------------------------------------------------------------------------//
//! phi(u; t) = E[exp(i u X(t))]
using CfHandle = std::function<std::complex<double>(double u, double t)>;

CfHandle make_cf_handle(CgmyParams const& p);
CfHandle make_cf_handle(MeixnerParams const& p);

struct GridSpec
{
    double x_min{-0.125};
    double x_max{0.125};
    std::size_t n_points{1000};

    void validate() const;
};

struct InversionOptions
{
    //! Integrate up to the frequency where |phi| falls below this
    double cf_cutoff{1e-12};
    //! Give up if |phi| is still above the cutoff here
    double u_limit{1e7};
    int order{24};
};

/*!
 * Equally spaced pdf samples with inversion diagnostics.
 *
 * \c quad_tol is the largest difference between the production rule and a
 * lower-order rule on the same panels, sampled over the grid.
 */
struct DensityGrid
{
    double x_min{0};
    double x_max{0};
    std::size_t n_points{0};
    std::vector<double> pdf;
    double cf_truncation{0};
    double quad_tol{0};

    double spacing() const { return (x_max - x_min) / (n_points - 1); }
    double x(std::size_t i) const;
    double trapezoid_mass() const;
};

/*!
 * f(x) = (1/pi) int_0^U Re[exp(-i u x) phi(u)] du.
 *
 * Gauss-Legendre panels no wider than pi / max|x| so no panel holds more
 * than half a period of the fastest oscillation; negative round-off is
 * clamped to zero. Throws NumericalError if |phi| has not decayed below
 * the cutoff by u_limit.
 */
DensityGrid invert_cf(CfHandle const& cf,
                      double t,
                      GridSpec const& grid = {},
                      InversionOptions const& opts = {});

namespace reference
{
DensityGrid invert_cf(CfHandle const& cf,
                      double t,
                      GridSpec const& grid = {},
                      InversionOptions const& opts = {});
}

//! Smallest u with |phi(u)| < cutoff, assuming |phi| decreasing
double cf_truncation_point(CfHandle const& cf, double t, InversionOptions const& opts = {});

//---------------------------------------------------------------------------//
/*!
 * Probability of each cell [edges[i], edges[i+1]) under the grid pdf.
 *
 * The pdf is interpolated by local cubics through four neighbouring grid
 * points and integrated exactly. Edges must be strictly increasing and
 * inside the grid.
 */
std::vector<double> cell_probabilities(DensityGrid const& g,
                                       std::span<double const> edges);

//! Equal-width cell edges: n_cells + 1 values from lo to hi
std::vector<double> equal_edges(double lo, double hi, std::size_t n_cells);

/*!
 * Inverse-CDF sampling from the interpolated grid density, renormalized
 * to the grid range.
 */
class GridQuantile
{
  public:
    explicit GridQuantile(DensityGrid const& g);

    double operator()(double u) const;
    //! Interpolated CDF from x_min, before renormalization
    double cdf(double x) const;
    double mass() const { return cumulative_.back(); }

  private:
    DensityGrid grid_;
    std::vector<double> cumulative_;

    double piece_integral(std::size_t j, double a, double b) const;
    std::size_t interval_of(double x) const;
};

//---------------------------------------------------------------------------//
}  // namespace tcbm
