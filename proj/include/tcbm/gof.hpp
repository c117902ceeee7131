//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tcbm/gof.hpp
//! Binned chi-square goodness of fit against a grid density.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tcbm/density.hpp"

namespace tcbm
{
//---------------------------------------------------------------------------//
enum class CellRule
{
    //! Use cells whose observed count exceeds the threshold
    min_observed,
    //! Use cells whose expected count is at least the threshold
    min_expected,
};

struct GofOptions
{
    std::size_t n_cells{100};
    //! Test range; defaults to the density grid range
    std::optional<double> range_lo;
    std::optional<double> range_hi;
    CellRule rule{CellRule::min_observed};
    double threshold{5};
};

struct GofReport
{
    std::vector<double> edges;
    std::vector<std::int64_t> observed;
    std::vector<double> expected;
    std::vector<bool> used_mask;
    std::int64_t underflow{0};
    std::int64_t overflow{0};
    double statistic{0};
    int dof{0};
    double p_value{1};

    std::size_t used_cells() const;
};

/*!
 * Pearson statistic over the used cells, dof = used - 1 and
 * p = Q(dof/2, statistic/2). Samples outside the range go to underflow or
 * overflow and are left out of the statistic. Throws DegenerateTestError
 * when fewer than two cells are usable.
 */
GofReport chi_square_test(std::span<double const> values,
                          DensityGrid const& grid,
                          GofOptions const& opts = {});

//! Statistic, dof and p-value from given counts and a cell rule
GofReport chi_square_from_counts(std::vector<std::int64_t> observed,
                                 std::vector<double> expected,
                                 CellRule rule = CellRule::min_observed,
                                 double threshold = 5);

//---------------------------------------------------------------------------//
//! Largest distance between the empirical CDF of \c values and \c cdf
double ks_statistic(std::span<double const> values,
                    std::function<double(double)> const& cdf);
//! Asymptotic Kolmogorov p-value for statistic \c d and sample size n
double ks_p_value(double d, std::size_t n);

//---------------------------------------------------------------------------//
}  // namespace tcbm
