//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tcbm/subordinator.hpp
//! Truncated one-sided stable subordinator paths.
//---------------------------------------------------------------------------//
#pragma once

#include <span>
#include <vector>

#include "tcbm/model.hpp"
#include "tcbm/random.hpp"

namespace tcbm
{
//---------------------------------------------------------------------------//
/*!
 * Small-jump cutoff with its compensating drift and large-jump rate.
 *
 * Jumps below \c epsilon are replaced by their mean, giving a drift
 * int_0^eps y nu(dy); jumps above arrive at rate int_eps^inf nu(dy).
 */
struct TruncationConfig
{
    double epsilon{1e-4};
    double drift{0};
    double rate{0};
};

TruncationConfig
make_truncation(StableSubordinatorParams const& sub, double epsilon = 1e-4);

//! Inverse CDF of the normalized Levy measure above epsilon:
//! epsilon / (1 - u)^{1/alpha}.
double sample_jump_size(StableSubordinatorParams const& sub,
                        double epsilon,
                        double u);

//---------------------------------------------------------------------------//
struct JumpEvent
{
    double arrival{0};
    double size{0};
    bool accepted{true};
};

/*!
 * Drift plus an ordered list of jumps on (0, horizon).
 *
 * Thinned paths keep rejected jumps with accepted = false so the proposal
 * and the thinned process can both be read off one record.
 */
class SubordinatorPath
{
  public:
    SubordinatorPath(double horizon, double drift, std::vector<JumpEvent> events);

    double horizon() const { return horizon_; }
    double drift() const { return drift_; }
    std::span<JumpEvent const> events() const { return events_; }

    //! drift * t + sum of accepted jumps with arrival <= t
    double value_at(double t) const;
    //! Value at the horizon
    double value() const { return value_at(horizon_); }
    //! Same path with every jump counted (the unthinned proposal)
    double proposal_value_at(double t) const;

    std::size_t accepted_count() const;

    //! Copy with acceptance flags replaced
    SubordinatorPath with_acceptance(std::vector<bool> const& accepted) const;

  private:
    double horizon_;
    double drift_;
    std::vector<JumpEvent> events_;
};

//---------------------------------------------------------------------------//
/*!
 * Compound-Poisson large jumps plus drift over (0, horizon].
 *
 * Inter-arrival times are -log(1 - u)/rate from \c arrivals; sizes come
 * from \c sizes through sample_jump_size. All events start accepted.
 * Throws ResourceError if rate * horizon exceeds 1e8.
 */
SubordinatorPath sample_path(StableSubordinatorParams const& sub,
                             TruncationConfig const& tc,
                             double horizon,
                             CounterStream& sizes,
                             CounterStream& arrivals);

/*!
 * Rejection thinning: keep a jump y when accept(y, w) for a fresh uniform w.
 *
 * \c accept is normally ratio(y) > w; it takes w so callers can short-cut
 * with a cheap bound before evaluating an expensive ratio.
 */
template<class AcceptFn>
SubordinatorPath
thin_path(SubordinatorPath const& path, AcceptFn&& accept, CounterStream& thinning)
{
    std::vector<bool> flags;
    flags.reserve(path.events().size());
    for (auto const& ev : path.events())
    {
        double const w = thinning.uniform();
        flags.push_back(ev.accepted && accept(ev.size, w));
    }
    return path.with_acceptance(flags);
}

//---------------------------------------------------------------------------//
}  // namespace tcbm
