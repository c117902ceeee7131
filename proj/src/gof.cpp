//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file gof.cpp
//---------------------------------------------------------------------------//
#include "tcbm/gof.hpp"

#include <algorithm>
#include <cmath>

#include "tcbm/errors.hpp"
#include "tcbm/special_functions.hpp"

namespace tcbm
{
//---------------------------------------------------------------------------//
std::size_t GofReport::used_cells() const
{
    return static_cast<std::size_t>(
        std::count(used_mask.begin(), used_mask.end(), true));
}

GofReport chi_square_from_counts(std::vector<std::int64_t> observed,
                                 std::vector<double> expected,
                                 CellRule rule,
                                 double threshold)
{
    detail::require(observed.size() == expected.size(),
                    "chi_square: observed and expected sizes differ");
    GofReport r;
    r.used_mask.resize(observed.size());
    std::size_t used = 0;
    for (std::size_t i = 0; i < observed.size(); ++i)
    {
        bool const ok = rule == CellRule::min_observed
                            ? static_cast<double>(observed[i]) > threshold
                            : expected[i] >= threshold;
        r.used_mask[i] = ok && expected[i] > 0;
        if (r.used_mask[i])
        {
            double const d = static_cast<double>(observed[i]) - expected[i];
            r.statistic += d * d / expected[i];
            ++used;
        }
    }
    if (used < 2)
    {
        throw DegenerateTestError("chi_square: only " + std::to_string(used)
                                  + " usable cell(s); need at least 2");
    }
    r.dof = static_cast<int>(used) - 1;
    r.p_value = regularized_gamma_q(r.dof / 2.0, r.statistic / 2);
    r.observed = std::move(observed);
    r.expected = std::move(expected);
    return r;
}

GofReport chi_square_test(std::span<double const> values,
                          DensityGrid const& grid,
                          GofOptions const& opts)
{
    detail::require(opts.n_cells >= 2, "chi_square: need at least 2 cells");
    detail::require(!values.empty(), "chi_square: no samples");
    double const lo = opts.range_lo.value_or(grid.x_min);
    double const hi = opts.range_hi.value_or(grid.x_max);
    auto edges = equal_edges(lo, hi, opts.n_cells);
    auto const probs = cell_probabilities(grid, edges);

    std::vector<std::int64_t> observed(opts.n_cells, 0);
    std::int64_t underflow = 0;
    std::int64_t overflow = 0;
    double const width = (hi - lo) / static_cast<double>(opts.n_cells);
    for (double v : values)
    {
        detail::require(std::isfinite(v), "chi_square: non-finite sample");
        if (v < lo)
        {
            ++underflow;
            continue;
        }
        if (v >= hi)
        {
            ++overflow;
            continue;
        }
        auto cell = static_cast<std::size_t>((v - lo) / width);
        cell = std::min(cell, opts.n_cells - 1);
        // Floating-point division can land one cell off near an edge.
        if (v < edges[cell])
        {
            --cell;
        }
        else if (v >= edges[cell + 1])
        {
            ++cell;
        }
        ++observed[cell];
    }

    auto const n = static_cast<double>(values.size());
    std::vector<double> expected(opts.n_cells);
    std::transform(probs.begin(), probs.end(), expected.begin(),
                   [n](double p) { return n * p; });

    auto r = chi_square_from_counts(
        std::move(observed), std::move(expected), opts.rule, opts.threshold);
    r.edges = std::move(edges);
    r.underflow = underflow;
    r.overflow = overflow;
    return r;
}

//---------------------------------------------------------------------------//
double ks_statistic(std::span<double const> values,
                    std::function<double(double)> const& cdf)
{
    detail::require(!values.empty(), "ks_statistic: no samples");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    auto const n = static_cast<double>(sorted.size());
    double d = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i)
    {
        double const f = cdf(sorted[i]);
        d = std::max({d, f - static_cast<double>(i) / n,
                      static_cast<double>(i + 1) / n - f});
    }
    return d;
}

double ks_p_value(double d, std::size_t n)
{
    detail::require(n >= 1 && d >= 0, "ks_p_value: invalid arguments");
    double const rn = std::sqrt(static_cast<double>(n));
    double const lambda = (rn + 0.12 + 0.11 / rn) * d;
    if (lambda < 0.2)
    {
        return 1;
    }
    double sum = 0;
    for (int k = 1; k <= 100; ++k)
    {
        double const term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 == 1 ? term : -term);
        if (term < 1e-16)
        {
            break;
        }
    }
    return std::clamp(2 * sum, 0.0, 1.0);
}

//---------------------------------------------------------------------------//
}  // namespace tcbm
