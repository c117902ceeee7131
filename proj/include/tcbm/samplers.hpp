//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tcbm/samplers.hpp
//! CGMY and Meixner draws as time-changed Brownian motion.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tcbm/kernels.hpp"
#include "tcbm/model.hpp"
#include "tcbm/subordinator.hpp"

namespace tcbm
{
//---------------------------------------------------------------------------//
struct SimulationConfig
{
    double horizon{0.02};
    std::size_t n_samples{5000};
    double epsilon{1e-4};
    std::uint64_t seed{0};
    //! Ignored by the Meixner sampler
    CgmyKernelVariant kernel_variant{CgmyKernelVariant::ac_form};

    void validate() const;
};

struct AcceptStats
{
    std::uint64_t proposed{0};
    std::uint64_t accepted{0};
};

struct SampleBatch
{
    std::vector<double> values;
    std::vector<double> time_changes;
    AcceptStats accept_stats;
};

//---------------------------------------------------------------------------//
/*!
 * Everything needed to turn sample index i into one draw
 * X = A tau + sqrt(tau) z, tau the thinned subordinator at the horizon.
 *
 * Sample i reads only the counter streams keyed by (seed, i), so draws do
 * not depend on evaluation order or thread count.
 */
class TimeChangeSampler
{
  public:
    TimeChangeSampler(CgmyParams const& p, SimulationConfig const& cfg);
    TimeChangeSampler(MeixnerParams const& p, SimulationConfig const& cfg);

    struct Draw
    {
        double value{0};
        double tau{0};
        std::uint32_t proposed{0};
        std::uint32_t accepted{0};
    };

    Draw operator()(std::uint64_t index) const;

    //! Thinned subordinator path for sample \c index over \c horizon
    SubordinatorPath path(std::uint64_t index, double horizon) const;

    double brownian_drift() const { return drift_a_; }
    StableSubordinatorParams const& proposal() const { return proposal_; }
    TruncationConfig const& truncation() const { return truncation_; }

  private:
    enum class Kind
    {
        cgmy,
        meixner
    };
    Kind kind_;
    SimulationConfig cfg_;
    double drift_a_;
    StableSubordinatorParams proposal_;
    TruncationConfig truncation_;
    std::optional<CgmyKernel> cgmy_;
    std::optional<MeixnerKernel> meixner_;

    bool accepts(double y, double w) const;
};

//---------------------------------------------------------------------------//
//! OpenMP-parallel batch generation
SampleBatch sample_cgmy(CgmyParams const& p, SimulationConfig const& cfg);
SampleBatch sample_meixner(MeixnerParams const& p, SimulationConfig const& cfg);
SampleBatch sample_batch(TimeChangeSampler const& sampler, std::size_t n);

namespace reference
{
//! Serial loop with results bit-identical to the parallel versions
SampleBatch sample_cgmy(CgmyParams const& p, SimulationConfig const& cfg);
SampleBatch sample_meixner(MeixnerParams const& p, SimulationConfig const& cfg);
SampleBatch sample_batch(TimeChangeSampler const& sampler, std::size_t n);
}  // namespace reference

//---------------------------------------------------------------------------//
/*!
 * Increments of X on a uniform grid of \c n_steps steps of length
 * cfg.horizon, all read from the single subordinator path with index
 * \c path_index.
 */
std::vector<double> sample_path_increments(TimeChangeSampler const& sampler,
                                           SimulationConfig const& cfg,
                                           std::size_t n_steps,
                                           std::uint64_t path_index = 0);

//---------------------------------------------------------------------------//
struct LaplaceEstimate
{
    double estimate{0};
    double std_error{0};
};

//! Mean of exp(-lambda tau) over the batch and its standard error
LaplaceEstimate empirical_laplace(SampleBatch const& batch, double lambda_arg);

//---------------------------------------------------------------------------//
}  // namespace tcbm
