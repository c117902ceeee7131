//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file test_samplers.cpp
//---------------------------------------------------------------------------//
#include <cmath>
#include <cstring>
#include <vector>

#include <doctest.h>
#include <omp.h>

#include "tcbm/errors.hpp"
#include "tcbm/gof.hpp"
#include "tcbm/oracles.hpp"
#include "tcbm/samplers.hpp"
#include "tcbm/special_functions.hpp"

using namespace tcbm;
using doctest::Approx;

namespace
{
CgmyParams const cgmy_ref(1, 5, 10, 0.5);
MeixnerParams const meixner_ref(0.25, -1.5, 1);

bool bitwise_equal(std::vector<double> const& a, std::vector<double> const& b)
{
    return a.size() == b.size()
           && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

bool same_batch(SampleBatch const& a, SampleBatch const& b)
{
    return bitwise_equal(a.values, b.values)
           && bitwise_equal(a.time_changes, b.time_changes)
           && a.accept_stats.proposed == b.accept_stats.proposed
           && a.accept_stats.accepted == b.accept_stats.accepted;
}

// Fraction of positive values minus one half, in binomial standard errors
double sign_z(std::vector<double> const& v)
{
    double pos = 0;
    for (double x : v)
    {
        pos += x > 0;
    }
    double const n = v.size();
    return (pos - n / 2) / std::sqrt(n / 4);
}
}  // namespace

TEST_CASE("configuration validation")
{
    SimulationConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.epsilon = 0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = {};
    cfg.horizon = -1;
    CHECK_THROWS_AS(sample_cgmy(cgmy_ref, cfg), DomainError);
    cfg = {};
    cfg.n_samples = 0;
    CHECK_THROWS_AS(sample_meixner(meixner_ref, cfg), DomainError);
}

TEST_CASE("parallel batches match the serial reference bitwise")
{
    SimulationConfig cfg;
    cfg.n_samples = 3000;
    cfg.seed = 11;
    auto const ref_c = reference::sample_cgmy(cgmy_ref, cfg);
    auto const ref_m = reference::sample_meixner(meixner_ref, cfg);
    int const saved = omp_get_max_threads();
    for (int threads : {1, 2, 4})
    {
        omp_set_num_threads(threads);
        CHECK(same_batch(sample_cgmy(cgmy_ref, cfg), ref_c));
        CHECK(same_batch(sample_meixner(meixner_ref, cfg), ref_m));
    }
    omp_set_num_threads(saved);
}

TEST_CASE("draws are keyed by seed and index")
{
    SimulationConfig cfg;
    cfg.n_samples = 500;
    auto const a = sample_cgmy(cgmy_ref, cfg);
    auto const b = sample_cgmy(cgmy_ref, cfg);
    CHECK(same_batch(a, b));

    cfg.n_samples = 200;
    auto const prefix = sample_cgmy(cgmy_ref, cfg);
    CHECK(std::equal(prefix.values.begin(), prefix.values.end(), a.values.begin()));

    cfg.seed = 1;
    auto const other = sample_cgmy(cgmy_ref, cfg);
    int same = 0;
    for (std::size_t i = 0; i < other.values.size(); ++i)
    {
        same += other.values[i] == a.values[i];
    }
    CHECK(same == 0);
}

TEST_CASE("acceptance bookkeeping and time change floor")
{
    SimulationConfig cfg;
    cfg.n_samples = 2000;
    for (auto const& batch : {sample_cgmy(cgmy_ref, cfg), sample_meixner(meixner_ref, cfg)})
    {
        CHECK(batch.accept_stats.accepted <= batch.accept_stats.proposed);
        CHECK(batch.accept_stats.accepted > 0);
    }
    TimeChangeSampler const sampler(cgmy_ref, cfg);
    double const floor = sampler.truncation().drift * cfg.horizon;
    auto const batch = sample_batch(sampler, cfg.n_samples);
    bool above = true;
    for (double tau : batch.time_changes)
    {
        above = above && tau >= floor;
    }
    CHECK(above);

    auto const d = sampler(17);
    auto const path = sampler.path(17, cfg.horizon);
    CHECK(d.tau == Approx(path.value()).epsilon(1e-14));
    CHECK(d.accepted == path.accepted_count());
    CHECK(d.proposed == path.events().size());
}

TEST_CASE("acceptance rate falls as tempering grows")
{
    SimulationConfig cfg;
    cfg.n_samples = 2000;
    double prev = 1.1;
    for (double b : {1.0, 3.0, 10.0, 30.0})
    {
        auto const batch = sample_cgmy(CgmyParams(1, b, b, 0.5), cfg);
        double const rate = double(batch.accept_stats.accepted) / batch.accept_stats.proposed;
        CHECK(rate < prev);
        prev = rate;
    }
}

TEST_CASE("symmetric parameters give symmetric samples")
{
    SimulationConfig cfg;
    cfg.n_samples = 40000;
    cfg.seed = 3;
    auto const c = sample_cgmy(CgmyParams(1, 7.5, 7.5, 0.5), cfg);
    CHECK(std::abs(sign_z(c.values)) < 3.5);
    auto const m = sample_meixner(MeixnerParams(0.25, 0, 1), cfg);
    CHECK(std::abs(sign_z(m.values)) < 3.5);
    // The skewed reference law is detectably asymmetric.
    auto const skewed = sample_cgmy(cgmy_ref, cfg);
    CHECK(std::abs(sign_z(skewed.values)) > 3.5);
}

TEST_CASE("brownian part is standard normal given the time change")
{
    SimulationConfig cfg;
    cfg.n_samples = 20000;
    for (bool meixner : {false, true})
    {
        TimeChangeSampler const sampler = meixner ? TimeChangeSampler(meixner_ref, cfg)
                                                  : TimeChangeSampler(cgmy_ref, cfg);
        auto const batch = sample_batch(sampler, cfg.n_samples);
        std::vector<double> z(batch.values.size());
        for (std::size_t i = 0; i < z.size(); ++i)
        {
            double const tau = batch.time_changes[i];
            z[i] = (batch.values[i] - sampler.brownian_drift() * tau) / std::sqrt(tau);
        }
        double const d = ks_statistic(z, standard_normal_cdf);
        CHECK(ks_p_value(d, z.size()) > 0.001);
    }
}

TEST_CASE("empirical laplace transform")
{
    SimulationConfig cfg;
    cfg.n_samples = 5000;
    auto const batch = sample_cgmy(cgmy_ref, cfg);
    auto const zero = empirical_laplace(batch, 0);
    CHECK(zero.estimate == 1);
    CHECK(zero.std_error == 0);
    double prev = 1;
    for (double lambda : {0.1, 1.0, 5.0, 50.0})
    {
        auto const e = empirical_laplace(batch, lambda);
        CHECK(e.estimate < prev);
        CHECK(e.std_error > 0);
        prev = e.estimate;
    }
    CHECK_THROWS_AS(empirical_laplace(batch, -1), DomainError);
}

TEST_CASE("path increments share one subordinator path")
{
    SimulationConfig cfg;
    cfg.horizon = 0.02;
    TimeChangeSampler const sampler(cgmy_ref, cfg);
    std::size_t const steps = 4000;
    auto const inc = sample_path_increments(sampler, cfg, steps, 5);
    REQUIRE(inc.size() == steps);
    CHECK(inc == sample_path_increments(sampler, cfg, steps, 5));
    CHECK(inc != sample_path_increments(sampler, cfg, steps, 6));

    auto const k = oracle::cgmy_cumulants(cgmy_ref, cfg.horizon);
    double mean = 0;
    for (double x : inc)
    {
        mean += x;
    }
    mean /= steps;
    CHECK(std::abs(mean - k[0]) < 5 * std::sqrt(k[1] / steps));
    CHECK_THROWS_AS(sample_path_increments(sampler, cfg, 0), DomainError);
}
