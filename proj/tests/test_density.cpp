//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file test_density.cpp
//---------------------------------------------------------------------------//
#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "tcbm/density.hpp"
#include "tcbm/errors.hpp"
#include "tcbm/oracles.hpp"
#include "tcbm/special_functions.hpp"

using namespace tcbm;
using doctest::Approx;

namespace
{
MeixnerParams const meixner_ref(0.25, -1.5, 1);

CfHandle const gaussian = [](double u, double t) {
    return std::complex<double>(std::exp(-u * u * t / 2), 0);
};

double gaussian_pdf(double x)
{
    return std::exp(-x * x / 2) / std::sqrt(2 * std::numbers::pi);
}

double max_of(std::vector<double> const& v)
{
    return *std::max_element(v.begin(), v.end());
}
}  // namespace

TEST_CASE("grid specification")
{
    CHECK_THROWS_AS(GridSpec({1, 0, 10}).validate(), DomainError);
    CHECK_THROWS_AS(GridSpec({0, 1, 1}).validate(), DomainError);
    auto const e = equal_edges(-1, 1, 4);
    REQUIRE(e.size() == 5);
    CHECK(e.front() == -1);
    CHECK(e.back() == 1);
    CHECK(e[2] == Approx(0));
}

TEST_CASE("gaussian inversion is exact")
{
    auto const g = invert_cf(gaussian, 1, {-6, 6, 601});
    double worst = 0;
    for (std::size_t i = 0; i < g.n_points; ++i)
    {
        worst = std::max(worst, std::abs(g.pdf[i] - gaussian_pdf(g.x(i))));
    }
    CHECK(worst < 1e-9);
    CHECK(g.cf_truncation == Approx(std::sqrt(2 * std::log(1e12))).epsilon(1e-3));
    CHECK(g.quad_tol < 1e-9);
    CHECK(g.trapezoid_mass() == Approx(1).epsilon(1e-8));
}

TEST_CASE("cf truncation point")
{
    double const u = cf_truncation_point(gaussian, 1);
    CHECK(std::abs(gaussian(u, 1)) <= 1e-12);
    CHECK(std::abs(gaussian(0.95 * u, 1)) > 1e-12);

    CfHandle const point_mass = [](double, double) { return std::complex<double>(1, 0); };
    CHECK_THROWS_AS(invert_cf(point_mass, 1, {-1, 1, 11}), NumericalError);
}

TEST_CASE("symmetric law gives a symmetric density")
{
    auto const g = invert_cf(make_cf_handle(MeixnerParams(0.25, 0, 1)), 0.02, {-0.1, 0.1, 201});
    double const peak = max_of(g.pdf);
    double worst = 0;
    for (std::size_t i = 0; i < g.n_points; ++i)
    {
        worst = std::max(worst, std::abs(g.pdf[i] - g.pdf[g.n_points - 1 - i]));
    }
    CHECK(worst < 1e-10 * peak);
}

TEST_CASE("meixner density matches adaptive fourier oracle")
{
    auto const cf = make_cf_handle(meixner_ref);
    double const t = 0.02;
    auto const g = invert_cf(cf, t, {-0.125, 0.125, 11});
    for (std::size_t i = 0; i < g.n_points; ++i)
    {
        double const oracle = oracle::fourier_density(cf, t, g.x(i));
        CHECK(std::abs(g.pdf[i] - oracle) < 1e-6 * max_of(g.pdf));
    }
}

TEST_CASE("cgmy density matches adaptive fourier oracle")
{
    auto const cf = make_cf_handle(CgmyParams(1, 5, 10, 0.5));
    double const t = 0.02;
    auto const g = invert_cf(cf, t, {-0.1, 0.1, 5});
    for (std::size_t i = 0; i < g.n_points; ++i)
    {
        double const oracle = oracle::fourier_density(cf, t, g.x(i));
        CHECK(std::abs(g.pdf[i] - oracle) < 1e-6 * max_of(g.pdf));
    }
}

TEST_CASE("mass and mean on a wide grid")
{
    auto const cf = make_cf_handle(meixner_ref);
    auto const g = invert_cf(cf, 1, {-4, 3, 1401});
    CHECK(g.trapezoid_mass() == Approx(1).epsilon(1e-6));
    double mean = 0;
    for (std::size_t i = 0; i < g.n_points; ++i)
    {
        double const w = (i == 0 || i + 1 == g.n_points) ? 0.5 : 1;
        mean += w * g.x(i) * g.pdf[i];
    }
    mean *= g.spacing();
    double const kappa1 = oracle::meixner_cumulants(meixner_ref, 1)[0];
    CHECK(std::abs(mean - kappa1) < 1e-5);

    auto const narrow = invert_cf(cf, 0.02);
    CHECK(narrow.trapezoid_mass() > 0.95);
    CHECK(narrow.trapezoid_mass() < 1.005);
    bool nonnegative = std::all_of(narrow.pdf.begin(), narrow.pdf.end(),
                                   [](double f) { return f >= 0; });
    CHECK(nonnegative);
}

TEST_CASE("cell probabilities")
{
    auto const g = invert_cf(gaussian, 1, {-6, 6, 601});
    auto const edges = equal_edges(-3, 3, 12);
    auto const probs = cell_probabilities(g, edges);
    REQUIRE(probs.size() == 12);
    for (std::size_t i = 0; i < probs.size(); ++i)
    {
        double const exact = standard_normal_cdf(edges[i + 1]) - standard_normal_cdf(edges[i]);
        CHECK(std::abs(probs[i] - exact) < 1e-8);
    }
    std::vector<double> const full{-6, 6};
    CHECK(cell_probabilities(g, full)[0] == Approx(1).epsilon(1e-9));

    std::vector<double> const outside{-7, 0};
    CHECK_THROWS_AS(cell_probabilities(g, outside), DomainError);
    std::vector<double> const unordered{0, -1};
    CHECK_THROWS_AS(cell_probabilities(g, unordered), DomainError);

    auto const cf = make_cf_handle(meixner_ref);
    auto const m = invert_cf(cf, 0.02, {-0.125, 0.125, 1000});
    std::vector<double> const window{-0.05, 0.0, 0.04};
    auto const pm = cell_probabilities(m, window);
    for (std::size_t i = 0; i < pm.size(); ++i)
    {
        double const gp = oracle::gil_pelaez_cdf(cf, 0.02, window[i + 1])
                          - oracle::gil_pelaez_cdf(cf, 0.02, window[i]);
        CHECK(std::abs(pm[i] - gp) < 1e-6);
    }
}

TEST_CASE("grid quantile")
{
    auto const g = invert_cf(gaussian, 1, {-6, 6, 601});
    GridQuantile const q(g);
    CHECK(q.mass() == Approx(1).epsilon(1e-9));
    CHECK(q(0) == Approx(-6));
    CHECK(q(1) == Approx(6));
    CHECK(std::abs(q(0.5)) < 1e-9);
    CHECK(q(0.975) == Approx(1.959964).epsilon(1e-6));
    double prev = -7;
    bool monotone = true;
    for (double u = 0.001; u < 1; u += 0.001)
    {
        double const x = q(u);
        monotone = monotone && x > prev;
        CHECK(q.cdf(x) / q.mass() == Approx(u).epsilon(1e-10));
        prev = x;
    }
    CHECK(monotone);
}

TEST_CASE("parallel inversion matches the serial reference bitwise")
{
    auto const cf = make_cf_handle(meixner_ref);
    GridSpec const spec{-0.125, 0.125, 257};
    auto const a = invert_cf(cf, 0.02, spec);
    auto const b = reference::invert_cf(cf, 0.02, spec);
    REQUIRE(a.pdf.size() == b.pdf.size());
    CHECK(std::memcmp(a.pdf.data(), b.pdf.data(), a.pdf.size() * sizeof(double)) == 0);
    CHECK(a.cf_truncation == b.cf_truncation);
    CHECK(a.quad_tol == b.quad_tol);
}
