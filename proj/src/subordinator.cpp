//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file subordinator.cpp
//---------------------------------------------------------------------------//
#include "tcbm/subordinator.hpp"

#include <cmath>

#include "tcbm/errors.hpp"

namespace tcbm
{
//---------------------------------------------------------------------------//
TruncationConfig
make_truncation(StableSubordinatorParams const& sub, double epsilon)
{
    detail::require(std::isfinite(epsilon) && epsilon > 0,
                    "make_truncation: epsilon must be positive");
    double const alpha = sub.alpha();
    TruncationConfig tc;
    tc.epsilon = epsilon;
    tc.drift = sub.scale() * std::pow(epsilon, 1 - alpha) / (1 - alpha);
    tc.rate = sub.scale() * std::pow(epsilon, -alpha) / alpha;
    return tc;
}

double sample_jump_size(StableSubordinatorParams const& sub,
                        double epsilon,
                        double u)
{
    detail::require(epsilon > 0, "sample_jump_size: epsilon must be positive");
    detail::require(u >= 0 && u < 1, "sample_jump_size: u must lie in [0, 1)");
    if (u == 0)
    {
        return epsilon;
    }
    return epsilon / std::pow(1 - u, 1 / sub.alpha());
}

//---------------------------------------------------------------------------//
SubordinatorPath::SubordinatorPath(double horizon,
                                   double drift,
                                   std::vector<JumpEvent> events)
    : horizon_(horizon), drift_(drift), events_(std::move(events))
{
    detail::require(horizon > 0, "SubordinatorPath: horizon must be positive");
    detail::require(drift >= 0, "SubordinatorPath: drift must be nonnegative");
    double previous = 0;
    for (auto const& ev : events_)
    {
        detail::require(ev.arrival > previous && ev.arrival < horizon,
                        "SubordinatorPath: arrivals must increase within "
                        "(0, horizon)");
        detail::require(ev.size > 0, "SubordinatorPath: jump sizes must be "
                                     "positive");
        previous = ev.arrival;
    }
}

double SubordinatorPath::value_at(double t) const
{
    double total = drift_ * t;
    for (auto const& ev : events_)
    {
        if (ev.arrival > t)
        {
            break;
        }
        if (ev.accepted)
        {
            total += ev.size;
        }
    }
    return total;
}

double SubordinatorPath::proposal_value_at(double t) const
{
    double total = drift_ * t;
    for (auto const& ev : events_)
    {
        if (ev.arrival > t)
        {
            break;
        }
        total += ev.size;
    }
    return total;
}

std::size_t SubordinatorPath::accepted_count() const
{
    std::size_t n = 0;
    for (auto const& ev : events_)
    {
        n += ev.accepted ? 1 : 0;
    }
    return n;
}

SubordinatorPath
SubordinatorPath::with_acceptance(std::vector<bool> const& accepted) const
{
    detail::require(accepted.size() == events_.size(),
                    "SubordinatorPath: acceptance flags do not match events");
    auto events = events_;
    for (std::size_t i = 0; i < events.size(); ++i)
    {
        events[i].accepted = accepted[i];
    }
    return SubordinatorPath(horizon_, drift_, std::move(events));
}

//---------------------------------------------------------------------------//
SubordinatorPath sample_path(StableSubordinatorParams const& sub,
                             TruncationConfig const& tc,
                             double horizon,
                             CounterStream& sizes,
                             CounterStream& arrivals)
{
    detail::require(std::isfinite(horizon) && horizon > 0,
                    "sample_path: horizon must be positive");
    detail::require(tc.rate > 0 && tc.drift >= 0 && tc.epsilon > 0,
                    "sample_path: invalid truncation config");
    double const expected = tc.rate * horizon;
    if (expected > 1e8)
    {
        throw ResourceError("sample_path: expected jump count "
                            + std::to_string(expected) + " exceeds 1e8");
    }

    std::vector<JumpEvent> events;
    events.reserve(static_cast<std::size_t>(expected + 4 * std::sqrt(expected))
                   + 1);
    double clock = 0;
    while (true)
    {
        clock += -std::log1p(-arrivals.uniform()) / tc.rate;
        if (!(clock < horizon))
        {
            break;
        }
        double const size = sample_jump_size(sub, tc.epsilon, sizes.uniform());
        // Exponential gaps are positive except in a 2^-53 corner; merge
        // coincident arrivals instead of breaking the ordering invariant.
        if (!events.empty() && clock <= events.back().arrival)
        {
            events.back().size += size;
            continue;
        }
        if (clock <= 0)
        {
            continue;
        }
        events.push_back({clock, size, true});
    }
    return SubordinatorPath(horizon, tc.drift, std::move(events));
}

//---------------------------------------------------------------------------//
}  // namespace tcbm
