//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file samplers.cpp
//---------------------------------------------------------------------------//
#include "tcbm/samplers.hpp"

#include <cmath>

#include "tcbm/errors.hpp"
#include "tcbm/random.hpp"
#include "tcbm/special_functions.hpp"

namespace tcbm
{
//---------------------------------------------------------------------------//
void SimulationConfig::validate() const
{
    detail::require(std::isfinite(horizon) && horizon > 0,
                    "simulation: horizon must be positive");
    detail::require(n_samples >= 1, "simulation: n_samples must be >= 1");
    detail::require(std::isfinite(epsilon) && epsilon > 0,
                    "simulation: epsilon must be positive");
}

//---------------------------------------------------------------------------//
TimeChangeSampler::TimeChangeSampler(CgmyParams const& p,
                                     SimulationConfig const& cfg)
    : kind_(Kind::cgmy)
    , cfg_(cfg)
    , drift_a_(p.brownian_drift())
    , proposal_(dominating_subordinator(p))
    , cgmy_(std::in_place, p, cfg.kernel_variant)
{
    cfg_.validate();
    truncation_ = make_truncation(proposal_, cfg_.epsilon);
}

TimeChangeSampler::TimeChangeSampler(MeixnerParams const& p,
                                     SimulationConfig const& cfg)
    : kind_(Kind::meixner)
    , cfg_(cfg)
    , drift_a_(p.brownian_drift())
    , proposal_(dominating_subordinator(p))
    , meixner_(std::in_place, p)
{
    cfg_.validate();
    // g exceeds one for b != 0: propose from the envelope-scaled measure
    // but compensate small jumps with the target's own mean.
    double const drift = make_truncation(proposal_, cfg_.epsilon).drift;
    proposal_ = proposal_.scaled(meixner_->envelope());
    truncation_ = make_truncation(proposal_, cfg_.epsilon);
    truncation_.drift = drift;
}

bool TimeChangeSampler::accepts(double y, double w) const
{
    if (kind_ == Kind::cgmy)
    {
        return cgmy_->accepts(y, w);
    }
    return meixner_->accepts(y, w);
}

SubordinatorPath
TimeChangeSampler::path(std::uint64_t index, double horizon) const
{
    auto streams = make_path_streams(cfg_.seed, index);
    auto const proposal = sample_path(
        proposal_, truncation_, horizon, streams.sizes, streams.arrivals);
    return thin_path(
        proposal,
        [this](double y, double w) { return this->accepts(y, w); },
        streams.thinning);
}

auto TimeChangeSampler::operator()(std::uint64_t index) const -> Draw
{
    auto streams = make_path_streams(cfg_.seed, index);
    auto const proposal = sample_path(proposal_,
                                      truncation_,
                                      cfg_.horizon,
                                      streams.sizes,
                                      streams.arrivals);
    Draw d;
    d.tau = truncation_.drift * cfg_.horizon;
    for (auto const& ev : proposal.events())
    {
        double const w = streams.thinning.uniform();
        ++d.proposed;
        if (this->accepts(ev.size, w))
        {
            ++d.accepted;
            d.tau += ev.size;
        }
    }
    double const z = standard_normal_quantile(streams.normals.open_uniform());
    d.value = drift_a_ * d.tau + std::sqrt(d.tau) * z;
    return d;
}

//---------------------------------------------------------------------------//
namespace
{
SampleBatch allocate(std::size_t n)
{
    SampleBatch batch;
    batch.values.resize(n);
    batch.time_changes.resize(n);
    return batch;
}
}  // namespace

SampleBatch sample_batch(TimeChangeSampler const& sampler, std::size_t n)
{
    detail::require(n >= 1, "sample_batch: n must be >= 1");
    auto batch = allocate(n);
    std::uint64_t proposed = 0;
    std::uint64_t accepted = 0;
    auto const count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : proposed, accepted)
    for (std::int64_t i = 0; i < count; ++i)
    {
        auto const d = sampler(static_cast<std::uint64_t>(i));
        batch.values[i] = d.value;
        batch.time_changes[i] = d.tau;
        proposed += d.proposed;
        accepted += d.accepted;
    }
    batch.accept_stats = {proposed, accepted};
    return batch;
}

SampleBatch sample_cgmy(CgmyParams const& p, SimulationConfig const& cfg)
{
    return sample_batch(TimeChangeSampler(p, cfg), cfg.n_samples);
}

SampleBatch sample_meixner(MeixnerParams const& p, SimulationConfig const& cfg)
{
    return sample_batch(TimeChangeSampler(p, cfg), cfg.n_samples);
}

namespace reference
{
SampleBatch sample_batch(TimeChangeSampler const& sampler, std::size_t n)
{
    detail::require(n >= 1, "sample_batch: n must be >= 1");
    auto batch = allocate(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        auto const d = sampler(i);
        batch.values[i] = d.value;
        batch.time_changes[i] = d.tau;
        batch.accept_stats.proposed += d.proposed;
        batch.accept_stats.accepted += d.accepted;
    }
    return batch;
}

SampleBatch sample_cgmy(CgmyParams const& p, SimulationConfig const& cfg)
{
    return reference::sample_batch(TimeChangeSampler(p, cfg), cfg.n_samples);
}

SampleBatch sample_meixner(MeixnerParams const& p, SimulationConfig const& cfg)
{
    return reference::sample_batch(TimeChangeSampler(p, cfg), cfg.n_samples);
}
}  // namespace reference

//---------------------------------------------------------------------------//
std::vector<double> sample_path_increments(TimeChangeSampler const& sampler,
                                           SimulationConfig const& cfg,
                                           std::size_t n_steps,
                                           std::uint64_t path_index)
{
    cfg.validate();
    detail::require(n_steps >= 1, "sample_path_increments: n_steps must be >= 1");
    double const total = cfg.horizon * static_cast<double>(n_steps);
    auto const path = sampler.path(path_index, total);
    CounterStream normals(cfg.seed, path_index, Substream::normals);

    std::vector<double> increments(n_steps);
    double prev = 0;
    for (std::size_t k = 0; k < n_steps; ++k)
    {
        double const t = k + 1 == n_steps ? total
                                          : cfg.horizon * static_cast<double>(k + 1);
        double const now = path.value_at(t);
        double const dtau = now - prev;
        prev = now;
        double const z = standard_normal_quantile(normals.open_uniform());
        increments[k] = sampler.brownian_drift() * dtau + std::sqrt(dtau) * z;
    }
    return increments;
}

//---------------------------------------------------------------------------//
LaplaceEstimate empirical_laplace(SampleBatch const& batch, double lambda_arg)
{
    detail::require(!batch.time_changes.empty(),
                    "empirical_laplace: batch is empty");
    detail::require(lambda_arg >= 0,
                    "empirical_laplace: lambda must be nonnegative");
    auto const n = static_cast<double>(batch.time_changes.size());
    double sum = 0;
    for (double tau : batch.time_changes)
    {
        sum += std::exp(-lambda_arg * tau);
    }
    double const mean = sum / n;
    double ss = 0;
    for (double tau : batch.time_changes)
    {
        double const d = std::exp(-lambda_arg * tau) - mean;
        ss += d * d;
    }
    double const sd = batch.time_changes.size() > 1 ? std::sqrt(ss / (n - 1)) : 0;
    return {mean, sd / std::sqrt(n)};
}

//---------------------------------------------------------------------------//
}  // namespace tcbm
