//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file density.cpp
//---------------------------------------------------------------------------//
#include "tcbm/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tcbm/errors.hpp"
#include "tcbm/quadrature.hpp"

namespace tcbm
{
//---------------------------------------------------------------------------//
CfHandle make_cf_handle(CgmyParams const& p)
{
    return [p](double u, double t) { return cgmy_cf(p, u, t); };
}

CfHandle make_cf_handle(MeixnerParams const& p)
{
    return [p](double u, double t) { return meixner_cf(p, u, t); };
}

void GridSpec::validate() const
{
    detail::require(std::isfinite(x_min) && std::isfinite(x_max)
                        && x_min < x_max,
                    "density grid: need x_min < x_max");
    detail::require(n_points >= 4, "density grid: need at least 4 points");
}

double DensityGrid::x(std::size_t i) const
{
    if (i + 1 == n_points)
    {
        return x_max;
    }
    return x_min + spacing() * static_cast<double>(i);
}

double DensityGrid::trapezoid_mass() const
{
    double sum = 0;
    for (std::size_t i = 0; i + 1 < pdf.size(); ++i)
    {
        sum += 0.5 * (pdf[i] + pdf[i + 1]);
    }
    return sum * spacing();
}

//---------------------------------------------------------------------------//
double cf_truncation_point(CfHandle const& cf, double t, InversionOptions const& opts)
{
    detail::require(t > 0, "invert_cf: t must be positive");
    detail::require(opts.cf_cutoff > 0 && opts.u_limit > 1,
                    "invert_cf: invalid truncation options");
    auto above = [&](double u) { return std::abs(cf(u, t)) >= opts.cf_cutoff; };
    double hi = 1;
    while (above(hi))
    {
        hi *= 2;
        if (hi > opts.u_limit)
        {
            std::ostringstream msg;
            msg << "invert_cf: |cf(u)| = " << std::abs(cf(opts.u_limit, t))
                << " at u = " << opts.u_limit << " is above the cutoff "
                << opts.cf_cutoff;
            throw NumericalError(msg.str());
        }
    }
    double lo = hi / 2;
    if (hi == 1)
    {
        lo = 0;
    }
    for (int i = 0; i < 60; ++i)
    {
        double const mid = 0.5 * (lo + hi);
        (above(mid) ? lo : hi) = mid;
    }
    return hi;
}

namespace
{
struct WeightedNodes
{
    std::vector<double> u;
    std::vector<std::complex<double>> wcf;
};

WeightedNodes
build_nodes(CfHandle const& cf, double t, double u_max, double width, int order)
{
    auto const rule = gauss_legendre(order);
    auto const panels
        = static_cast<std::size_t>(std::ceil(u_max / width));
    double const h = u_max / static_cast<double>(panels);
    WeightedNodes out;
    out.u.reserve(panels * rule.nodes.size());
    out.wcf.reserve(panels * rule.nodes.size());
    for (std::size_t k = 0; k < panels; ++k)
    {
        double const a = h * static_cast<double>(k);
        for (std::size_t j = 0; j < rule.nodes.size(); ++j)
        {
            double const u = a + 0.5 * h * (rule.nodes[j] + 1);
            out.u.push_back(u);
            out.wcf.push_back(0.5 * h * rule.weights[j] * cf(u, t)
                              / std::numbers::pi);
        }
    }
    return out;
}

double evaluate(WeightedNodes const& nodes, double x)
{
    double sum = 0;
    for (std::size_t j = 0; j < nodes.u.size(); ++j)
    {
        double const phase = nodes.u[j] * x;
        sum += std::cos(phase) * nodes.wcf[j].real()
               + std::sin(phase) * nodes.wcf[j].imag();
    }
    return sum;
}

struct InversionSetup
{
    DensityGrid grid;
    WeightedNodes fine;
    WeightedNodes coarse;
};

InversionSetup setup_inversion(CfHandle const& cf,
                               double t,
                               GridSpec const& spec,
                               InversionOptions const& opts)
{
    spec.validate();
    detail::require(opts.order >= 8, "invert_cf: quadrature order must be >= 8");
    InversionSetup s;
    s.grid.x_min = spec.x_min;
    s.grid.x_max = spec.x_max;
    s.grid.n_points = spec.n_points;
    s.grid.pdf.assign(spec.n_points, 0.0);
    s.grid.cf_truncation = cf_truncation_point(cf, t, opts);

    double const x_abs = std::max(std::abs(spec.x_min), std::abs(spec.x_max));
    double const width = std::min(std::numbers::pi / x_abs,
                                  s.grid.cf_truncation / 64);
    s.fine = build_nodes(cf, t, s.grid.cf_truncation, width, opts.order);
    s.coarse = build_nodes(cf, t, s.grid.cf_truncation, width, opts.order - 6);
    return s;
}

void finish(InversionSetup& s)
{
    double tol = 0;
    std::size_t const stride = std::max<std::size_t>(1, s.grid.n_points / 50);
    for (std::size_t i = 0; i < s.grid.n_points; i += stride)
    {
        double const x = s.grid.x(i);
        tol = std::max(tol, std::abs(evaluate(s.coarse, x) - s.grid.pdf[i]));
    }
    s.grid.quad_tol = std::max(tol, 1e-16);
    for (double& v : s.grid.pdf)
    {
        v = std::max(v, 0.0);
    }
}
}  // namespace

DensityGrid invert_cf(CfHandle const& cf,
                      double t,
                      GridSpec const& grid,
                      InversionOptions const& opts)
{
    auto s = setup_inversion(cf, t, grid, opts);
    auto const n = static_cast<std::int64_t>(s.grid.n_points);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
    {
        s.grid.pdf[i] = evaluate(s.fine, s.grid.x(i));
    }
    finish(s);
    return std::move(s.grid);
}

namespace reference
{
DensityGrid invert_cf(CfHandle const& cf,
                      double t,
                      GridSpec const& grid,
                      InversionOptions const& opts)
{
    auto s = setup_inversion(cf, t, grid, opts);
    for (std::size_t i = 0; i < s.grid.n_points; ++i)
    {
        s.grid.pdf[i] = evaluate(s.fine, s.grid.x(i));
    }
    finish(s);
    return std::move(s.grid);
}
}  // namespace reference

//---------------------------------------------------------------------------//
GridQuantile::GridQuantile(DensityGrid const& g) : grid_(g)
{
    detail::require(g.n_points >= 4 && g.pdf.size() == g.n_points,
                    "grid quantile: malformed density grid");
    cumulative_.resize(g.n_points);
    cumulative_[0] = 0;
    for (std::size_t j = 0; j + 1 < g.n_points; ++j)
    {
        cumulative_[j + 1] = cumulative_[j]
                             + piece_integral(j, g.x(j), g.x(j + 1));
    }
}

double GridQuantile::piece_integral(std::size_t j, double a, double b) const
{
    // Cubic through four neighbouring nodes, integrated by 3-point
    // Gauss-Legendre (exact for cubics).
    std::size_t const n = grid_.n_points;
    std::size_t const s = std::min(j == 0 ? 0 : j - 1, n - 4);
    double xs[4];
    for (int k = 0; k < 4; ++k)
    {
        xs[k] = grid_.x(s + k);
    }
    auto interp = [&](double x) {
        double sum = 0;
        for (int k = 0; k < 4; ++k)
        {
            double l = 1;
            for (int m = 0; m < 4; ++m)
            {
                if (m != k)
                {
                    l *= (x - xs[m]) / (xs[k] - xs[m]);
                }
            }
            sum += l * grid_.pdf[s + k];
        }
        return sum;
    };
    static constexpr double node = 0.77459666924148337704;
    double const mid = 0.5 * (a + b);
    double const half = 0.5 * (b - a);
    return half
           * (5.0 / 9 * interp(mid - half * node) + 8.0 / 9 * interp(mid)
              + 5.0 / 9 * interp(mid + half * node));
}

std::size_t GridQuantile::interval_of(double x) const
{
    double const pos = (x - grid_.x_min) / grid_.spacing();
    auto const j = static_cast<std::size_t>(std::max(pos, 0.0));
    return std::min(j, grid_.n_points - 2);
}

double GridQuantile::cdf(double x) const
{
    detail::require(x >= grid_.x_min && x <= grid_.x_max,
                    "grid cdf: x outside the density grid");
    std::size_t const j = interval_of(x);
    return cumulative_[j] + piece_integral(j, grid_.x(j), x);
}

double GridQuantile::operator()(double u) const
{
    detail::require(u >= 0 && u <= 1, "grid quantile: u must lie in [0, 1]");
    double const target = u * mass();
    auto const it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    std::size_t j = it == cumulative_.begin()
                        ? 0
                        : static_cast<std::size_t>(it - cumulative_.begin()) - 1;
    j = std::min(j, grid_.n_points - 2);
    double lo = grid_.x(j);
    double hi = grid_.x(j + 1);
    for (int i = 0; i < 60; ++i)
    {
        double const mid = 0.5 * (lo + hi);
        if (cumulative_[j] + piece_integral(j, grid_.x(j), mid) < target)
        {
            lo = mid;
        }
        else
        {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

//---------------------------------------------------------------------------//
std::vector<double> cell_probabilities(DensityGrid const& g,
                                       std::span<double const> edges)
{
    detail::require(edges.size() >= 2, "cell_probabilities: need >= 2 edges");
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    {
        detail::require(edges[i] < edges[i + 1],
                        "cell_probabilities: edges must be strictly increasing");
    }
    double const slack = 1e-12 * (g.x_max - g.x_min);
    if (edges.front() < g.x_min - slack || edges.back() > g.x_max + slack)
    {
        throw DomainError("cell_probabilities: edges outside the density grid");
    }
    GridQuantile const integ(g);
    std::vector<double> probs(edges.size() - 1);
    double prev = integ.cdf(std::clamp(edges.front(), g.x_min, g.x_max));
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    {
        double const next = integ.cdf(std::clamp(edges[i + 1], g.x_min, g.x_max));
        probs[i] = std::max(next - prev, 0.0);
        prev = next;
    }
    return probs;
}

std::vector<double> equal_edges(double lo, double hi, std::size_t n_cells)
{
    detail::require(lo < hi, "equal_edges: need lo < hi");
    detail::require(n_cells >= 1, "equal_edges: need at least one cell");
    std::vector<double> edges(n_cells + 1);
    double const w = (hi - lo) / static_cast<double>(n_cells);
    for (std::size_t i = 0; i < n_cells; ++i)
    {
        edges[i] = lo + w * static_cast<double>(i);
    }
    edges.back() = hi;
    return edges;
}

//---------------------------------------------------------------------------//
}  // namespace tcbm
