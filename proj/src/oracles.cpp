//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file oracles.cpp
//---------------------------------------------------------------------------//
#include "tcbm/oracles.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "tcbm/errors.hpp"

namespace tcbm::oracle
{
namespace
{
constexpr double pi = std::numbers::pi;

template<class Measure>
SubordinationCheck check_identity(Measure&& levy_time_change,
                                  double drift_a,
                                  std::span<double const> xs,
                                  std::function<double(double)> const& target)
{
    boost::math::quadrature::exp_sinh<double> es;
    boost::math::quadrature::tanh_sinh<double> ts;
    SubordinationCheck out;
    for (double x : xs)
    {
        detail::require(x != 0, "subordination_identity: x must be nonzero");
        auto integrand = [&](double y) {
            if (!(y > 0) || !std::isfinite(y))
            {
                return 0.0;
            }
            double const d = x - drift_a * y;
            double const e = d * d / (2 * y);
            if (e > 745)
            {
                return 0.0;
            }
            return levy_time_change(y) * std::exp(-e) / std::sqrt(2 * pi * y);
        };
        double const r1 = es.integrate(integrand, 1e-14);
        double const r2 = ts.integrate(integrand, 0.0,
                                       std::numeric_limits<double>::infinity(),
                                       1e-12);
        double const k = target(x);
        out.x.push_back(x);
        out.target.push_back(k);
        out.reconstructed.push_back(r1);
        double const res = std::abs(r1 - k) / k;
        out.residual.push_back(res);
        out.max_residual = std::max(out.max_residual, res);
        out.rule_disagreement
            = std::max(out.rule_disagreement, std::abs(r1 - r2) / k);
    }
    return out;
}
}  // namespace

std::vector<double> default_identity_points()
{
    std::vector<double> xs;
    for (int i = 0; i < 10; ++i)
    {
        double const v = std::pow(10.0, -2.0 + 2.0 * i / 9);
        xs.push_back(-v);
        xs.push_back(v);
    }
    return xs;
}

SubordinationCheck subordination_identity(CgmyKernel const& kernel,
                                          std::span<double const> xs)
{
    auto const& p = kernel.params();
    double const K = p.stable_scale();
    double const alpha = p.Y() / 2;
    return check_identity(
        [&](double y) { return K * std::pow(y, -1 - alpha) * kernel(y); },
        p.brownian_drift(),
        xs,
        [&](double x) { return cgmy_levy_density(p, x); });
}

SubordinationCheck subordination_identity(MeixnerKernel const& kernel,
                                          std::span<double const> xs)
{
    auto const& p = kernel.params();
    double const c = p.delta() * p.a() / std::sqrt(2 * pi);
    return check_identity(
        [&](double u) { return c * std::pow(u, -1.5) * kernel(u); },
        p.brownian_drift(),
        xs,
        [&](double x) { return meixner_levy_density(p, x); });
}

//---------------------------------------------------------------------------//
McEstimate
gamma_ratio_mc(CgmyParams const& p, double y, std::size_t n, std::uint64_t seed)
{
    detail::require(y > 0, "gamma_ratio_mc: y must be positive");
    detail::require(n >= 2, "gamma_ratio_mc: need at least 2 draws");
    double const B = p.tempering();
    double const scale = y * B * B / 2;
    constexpr std::size_t chunk = 1 << 16;
    std::size_t const n_chunks = (n + chunk - 1) / chunk;
    std::vector<double> sums(n_chunks);
    std::vector<double> sq_sums(n_chunks);
    auto const count = static_cast<std::int64_t>(n_chunks);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < count; ++c)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed),
                          static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(c)};
        std::mt19937_64 rng(seq);
        std::gamma_distribution<double> g_num(p.Y() / 2, 1.0);
        std::gamma_distribution<double> g_den(0.5, 1.0);
        std::size_t const begin = static_cast<std::size_t>(c) * chunk;
        std::size_t const end = std::min(n, begin + chunk);
        double s = 0;
        double ss = 0;
        for (std::size_t i = begin; i < end; ++i)
        {
            double const num = g_num(rng);
            double const den = g_den(rng);
            double v;
            if (num == 0)
            {
                v = 1;
            }
            else
            {
                v = den == 0 ? 0 : std::exp(-scale * num / den);
            }
            s += v;
            ss += v * v;
        }
        sums[c] = s;
        sq_sums[c] = ss;
    }
    double s = 0;
    double ss = 0;
    for (std::size_t c = 0; c < n_chunks; ++c)
    {
        s += sums[c];
        ss += sq_sums[c];
    }
    auto const nd = static_cast<double>(n);
    double const mean = s / nd;
    double const var = std::max(ss / nd - mean * mean, 0.0) * nd / (nd - 1);
    return {mean, std::sqrt(var / nd)};
}

double gamma_ratio_quadrature(CgmyParams const& p, double y)
{
    // g_{Y/2} / g_{1/2} is beta-prime(Y/2, 1/2).
    double const a = p.Y() / 2;
    double const B = p.tempering();
    double const scale = y * B * B / 2;
    double const norm = boost::math::beta(a, 0.5);
    boost::math::quadrature::exp_sinh<double> es;
    auto f = [&](double r) {
        return std::exp(-scale * r) * std::pow(r, a - 1)
               * std::pow(1 + r, -a - 0.5) / norm;
    };
    return es.integrate(f, 1e-14);
}

double hermite_integral_quadrature(double nu, double a, double lambda_q)
{
    // x = w^{1/nu} turns x^{nu-1} dx into dw / nu.
    boost::math::quadrature::exp_sinh<double> es;
    auto f = [&](double w) {
        double const x = std::pow(w, 1 / nu);
        if (!std::isfinite(x))
        {
            return 0.0;
        }
        return std::exp(-a * x - lambda_q * x * x) / nu;
    };
    return es.integrate(f, 1e-14);
}

//---------------------------------------------------------------------------//
namespace
{
// Coefficients c0, c1 of the polynomial through (z_j, v_j).
std::array<double, 2> low_coefficients(std::vector<double> const& z,
                                       std::vector<double> const& v)
{
    std::size_t const m = z.size();
    std::vector<std::vector<double>> a(m, std::vector<double>(m + 1));
    for (std::size_t i = 0; i < m; ++i)
    {
        double pw = 1;
        for (std::size_t j = 0; j < m; ++j)
        {
            a[i][j] = pw;
            pw *= z[i];
        }
        a[i][m] = v[i];
    }
    for (std::size_t col = 0; col < m; ++col)
    {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < m; ++r)
        {
            if (std::abs(a[r][col]) > std::abs(a[piv][col]))
            {
                piv = r;
            }
        }
        std::swap(a[col], a[piv]);
        for (std::size_t r = 0; r < m; ++r)
        {
            if (r != col)
            {
                double const f = a[r][col] / a[col][col];
                for (std::size_t k = col; k <= m; ++k)
                {
                    a[r][k] -= f * a[col][k];
                }
            }
        }
    }
    return {a[0][m] / a[0][0], a[1][m] / a[1][1]};
}
}  // namespace

std::vector<double> cf_cumulants(CfHandle const& cf, double t, int order, double step)
{
    detail::require(order >= 1 && order <= 4,
                    "cf_cumulants: order must lie in [1, 4]");
    detail::require(step > 0, "cf_cumulants: step must be positive");
    int const m = 6;
    std::vector<double> z(m);
    std::vector<double> odd(m);
    std::vector<double> even(m);
    for (int j = 0; j < m; ++j)
    {
        double const h = step * (j + 1) / m;
        auto const psi = std::log(cf(h, t));
        z[j] = h * h;
        odd[j] = psi.imag() / h;
        even[j] = psi.real() / (h * h);
    }
    auto const co = low_coefficients(z, odd);
    auto const ce = low_coefficients(z, even);
    std::vector<double> k{co[0], -2 * ce[0], -6 * co[1], 24 * ce[1]};
    k.resize(order);
    return k;
}

std::vector<double> cgmy_cumulants(CgmyParams const& p, double t)
{
    std::vector<double> k(4);
    for (int n = 1; n <= 4; ++n)
    {
        double const sign = n % 2 == 0 ? 1 : -1;
        k[n - 1] = t * p.C() * std::tgamma(n - p.Y())
                   * (std::pow(p.M(), p.Y() - n)
                      + sign * std::pow(p.G(), p.Y() - n));
    }
    return k;
}

std::vector<double> meixner_cumulants(MeixnerParams const& p, double t)
{
    double const s = std::sin(p.b() / 2);
    double const c = std::cos(p.b() / 2);
    double const td = t * p.delta();
    double const a = p.a();
    return {td * a * s / c,
            td * a * a / (2 * c * c),
            td * a * a * a * s / (2 * c * c * c),
            td * a * a * a * a * (2 - std::cos(p.b())) / (4 * c * c * c * c)};
}

//---------------------------------------------------------------------------//
double fourier_density(CfHandle const& cf, double t, double x)
{
    auto re = [&](double u) { return cf(u, t).real(); };
    auto im = [&](double u) { return cf(u, t).imag(); };
    if (x == 0)
    {
        boost::math::quadrature::exp_sinh<double> es;
        return es.integrate(re, 1e-13) / pi;
    }
    double const w = std::abs(x);
    double const sign = x > 0 ? 1 : -1;
    boost::math::quadrature::ooura_fourier_cos<double> oc(1e-12);
    boost::math::quadrature::ooura_fourier_sin<double> os(1e-12);
    double const c = oc.integrate(re, w).first;
    double const s = os.integrate(im, w).first;
    return (c + sign * s) / pi;
}

double gil_pelaez_cdf(CfHandle const& cf, double t, double x)
{
    auto im_over_u = [&](double u) { return cf(u, t).imag() / u; };
    auto re_over_u = [&](double u) { return cf(u, t).real() / u; };
    if (x == 0)
    {
        boost::math::quadrature::exp_sinh<double> es;
        return 0.5 - es.integrate(im_over_u, 1e-13) / pi;
    }
    double const w = std::abs(x);
    double const sign = x > 0 ? 1 : -1;
    boost::math::quadrature::ooura_fourier_cos<double> oc(1e-12);
    boost::math::quadrature::ooura_fourier_sin<double> os(1e-12);
    double const c = oc.integrate(im_over_u, w).first;
    double const s = os.integrate(re_over_u, w).first;
    return 0.5 - (c - sign * s) / pi;
}

//---------------------------------------------------------------------------//
double bessel3_hit_fraction(double s, std::size_t paths, std::size_t steps, std::uint64_t seed)
{
    detail::require(s > 0 && paths > 0 && steps > 0,
                    "bessel3_hit_fraction: invalid arguments");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    double const sd = std::sqrt(s / static_cast<double>(steps));
    std::size_t hits = 0;
    for (std::size_t i = 0; i < paths; ++i)
    {
        double x = 0;
        double y = 0;
        double z = 0;
        for (std::size_t k = 0; k < steps; ++k)
        {
            x += sd * normal(rng);
            y += sd * normal(rng);
            z += sd * normal(rng);
            if (x * x + y * y + z * z >= 1)
            {
                ++hits;
                break;
            }
        }
    }
    return static_cast<double>(hits) / static_cast<double>(paths);
}

//---------------------------------------------------------------------------//
}  // namespace tcbm::oracle
