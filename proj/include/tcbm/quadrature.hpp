//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tcbm/quadrature.hpp
//! Adaptive Gauss-Kronrod and fixed Gauss-Legendre rules.
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace tcbm
{
//---------------------------------------------------------------------------//
struct QuadratureOptions
{
    double rel_tol{1e-12};
    double abs_tol{0.0};
    int max_intervals{2000};
};

struct QuadratureResult
{
    double value{0};
    double error{0};
    int intervals{0};
    bool converged{false};
};

namespace detail
{
// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment
{
    double lo;
    double hi;
    double value;
    double error;

    bool operator<(Segment const& other) const { return error < other.error; }
};

template<class F>
Segment kronrod15(F&& f, double lo, double hi)
{
    double const center = 0.5 * (lo + hi);
    double const half = 0.5 * (hi - lo);
    double const fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    double abs_sum = std::abs(kronrod);
    std::array<double, 7> f1{}, f2{};
    for (int j = 0; j < 7; ++j)
    {
        double const dx = half * kKronrodNodes[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        kronrod += kKronrodWeights[j] * (f1[j] + f2[j]);
        abs_sum += kKronrodWeights[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1)
        {
            gauss += kGaussWeights[j / 2] * (f1[j] + f2[j]);
        }
    }
    double const mean = 0.5 * kronrod;
    double asc = kKronrodWeights[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
    {
        asc += kKronrodWeights[j]
               * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
    }
    asc *= std::abs(half);
    double err = std::abs((kronrod - gauss) * half);
    if (asc != 0 && err != 0)
    {
        err = asc * std::min(1.0, std::pow(200 * err / asc, 1.5));
    }
    if (abs_sum * std::abs(half) > std::numeric_limits<double>::min() / 1e-16)
    {
        err = std::max(err, 50 * 2.2e-16 * abs_sum * std::abs(half));
    }
    return {lo, hi, kronrod * half, err};
}
}  // namespace detail

//---------------------------------------------------------------------------//
/*!
 * Globally adaptive Gauss-Kronrod (7/15) integration on a finite interval.
 *
 * The segment with the largest error estimate is bisected until the summed
 * estimate is below max(abs_tol, rel_tol * |value|). Never throws; callers
 * decide what an unconverged result means for them.
 */
template<class F>
QuadratureResult
integrate_adaptive(F&& f, double lo, double hi, QuadratureOptions const& opts = {})
{
    std::priority_queue<detail::Segment> heap;
    heap.push(detail::kronrod15(f, lo, hi));
    double value = heap.top().value;
    double error = heap.top().error;
    int intervals = 1;
    auto done = [&] {
        return error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
    };
    while (!done() && intervals < opts.max_intervals)
    {
        auto worst = heap.top();
        heap.pop();
        double const mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi)
        {
            heap.push(worst);
            break;
        }
        auto left = detail::kronrod15(f, worst.lo, mid);
        auto right = detail::kronrod15(f, mid, worst.hi);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++intervals;
    }
    // Re-sum to shed accumulated cancellation from the running updates.
    double total = 0;
    double total_err = 0;
    while (!heap.empty())
    {
        total += heap.top().value;
        total_err += heap.top().error;
        heap.pop();
    }
    QuadratureResult result;
    result.value = total;
    result.error = total_err;
    result.intervals = intervals;
    result.converged
        = total_err <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
    return result;
}

//---------------------------------------------------------------------------//
//! Gauss-Legendre nodes and weights on [-1, 1]
struct GaussLegendreRule
{
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int order);

//---------------------------------------------------------------------------//
}  // namespace tcbm
