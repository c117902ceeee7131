//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadrature.cpp
//---------------------------------------------------------------------------//
#include "tcbm/quadrature.hpp"

#include <numbers>

#include "tcbm/errors.hpp"

namespace tcbm
{
//---------------------------------------------------------------------------//
/*!
 * Nodes by Newton iteration on P_n from the Chebyshev initial guess.
 */
GaussLegendreRule gauss_legendre(int order)
{
    detail::require(order >= 1, "gauss_legendre: order must be positive");
    GaussLegendreRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    int const n = order;
    for (int i = 0; i < (n + 1) / 2; ++i)
    {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int iter = 0; iter < 100; ++iter)
        {
            double p0 = 1;
            double p1 = x;
            for (int k = 2; k <= n; ++k)
            {
                double const p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1)
            {
                p0 = 1;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            double const dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
            {
                break;
            }
        }
        if (n == 1)
        {
            x = 0;
            dp = 1;
        }
        double const w = 2 / ((1 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

//---------------------------------------------------------------------------//
}  // namespace tcbm
