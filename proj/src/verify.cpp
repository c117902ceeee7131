//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file verify.cpp
//---------------------------------------------------------------------------//
#include "tcbm/verify.hpp"

#include <cmath>

#include "tcbm/density.hpp"
#include "tcbm/errors.hpp"
#include "tcbm/kernels.hpp"
#include "tcbm/oracles.hpp"
#include "tcbm/samplers.hpp"

namespace tcbm
{
namespace
{
constexpr double identity_tol = 1e-4;
constexpr double mc_band = 3;

SimulationConfig sim_config(VerifyOptions const& opts, std::size_t n)
{
    SimulationConfig cfg;
    cfg.horizon = opts.horizon;
    cfg.n_samples = n;
    cfg.epsilon = opts.epsilon;
    cfg.seed = opts.seed;
    return cfg;
}

nlohmann::json identity_detail(oracle::SubordinationCheck const& c)
{
    return {{"x", c.x},
            {"target", c.target},
            {"reconstructed", c.reconstructed},
            {"max_residual", c.max_residual},
            {"rule_disagreement", c.rule_disagreement},
            {"tolerance", identity_tol}};
}

struct MomentCheck
{
    bool passed;
    nlohmann::json detail;
};

MomentCheck compare_moments(SampleBatch const& batch, std::vector<double> const& k)
{
    auto const n = static_cast<double>(batch.values.size());
    double mean = 0;
    for (double v : batch.values)
    {
        mean += v;
    }
    mean /= n;
    double var = 0;
    for (double v : batch.values)
    {
        var += (v - mean) * (v - mean);
    }
    var /= n - 1;
    double const se_mean = std::sqrt(k[1] / n);
    double const se_var = std::sqrt((k[3] + 2 * k[1] * k[1]) / n);
    double const z_mean = (mean - k[0]) / se_mean;
    double const z_var = (var - k[1]) / se_var;
    bool const ok = std::abs(z_mean) <= mc_band && std::abs(z_var) <= mc_band;
    return {ok,
            {{"n", batch.values.size()},
             {"sample_mean", mean},
             {"oracle_mean", k[0]},
             {"z_mean", z_mean},
             {"sample_variance", var},
             {"oracle_variance", k[1]},
             {"z_variance", z_var}}};
}
}  // namespace

//---------------------------------------------------------------------------//
CheckResult check_subordination(VerifyOptions const& opts)
{
    auto const xs = oracle::default_identity_points();
    auto const c = oracle::subordination_identity(CgmyKernel(opts.cgmy), xs);
    auto const m = oracle::subordination_identity(MeixnerKernel(opts.meixner), xs);
    bool const ok = c.max_residual < identity_tol && m.max_residual < identity_tol;
    return {"subordination",
            ok,
            {{"cgmy_ac", identity_detail(c)}, {"meixner", identity_detail(m)}}};
}

CheckResult check_subordination_alg(VerifyOptions const& opts)
{
    auto const xs = oracle::default_identity_points();
    auto const c = oracle::subordination_identity(
        CgmyKernel(opts.cgmy, CgmyKernelVariant::alg_form), xs);
    return {"subordination-alg",
            c.max_residual < identity_tol,
            {{"cgmy_alg", identity_detail(c)}}};
}

CheckResult check_laplace(VerifyOptions const& opts)
{
    auto const batch = sample_cgmy(opts.cgmy, sim_config(opts, opts.n_laplace));
    nlohmann::json rows = nlohmann::json::array();
    bool ok = true;
    for (double lambda : {0.5, 1.0, 5.0})
    {
        auto const mc = empirical_laplace(batch, lambda);
        auto const closed = cgmy_subordinator_laplace(opts.cgmy, lambda, opts.horizon);
        double const z = (mc.estimate - closed.value) / mc.std_error;
        ok = ok && std::abs(z) <= mc_band;
        rows.push_back({{"lambda", lambda},
                        {"estimate", mc.estimate},
                        {"std_error", mc.std_error},
                        {"closed_form", closed.value},
                        {"z", z}});
    }
    return {"laplace", ok, {{"n", opts.n_laplace}, {"points", rows}}};
}

CheckResult check_laplace_symmetric(VerifyOptions const& opts)
{
    CgmyParams const sym(opts.cgmy.C(), 7.5, 7.5, opts.cgmy.Y());
    nlohmann::json rows = nlohmann::json::array();
    double worst = 0;
    for (double lambda : {0.5, 1.0, 5.0})
    {
        double const general = cgmy_subordinator_laplace(sym, lambda, opts.horizon).value;
        double const special = cgmy_subordinator_laplace_symmetric(sym, lambda, opts.horizon);
        worst = std::max(worst, std::abs(general - special));
        rows.push_back({{"lambda", lambda}, {"general", general}, {"symmetric", special}});
    }
    return {"laplace-symmetric",
            worst <= 1e-12,
            {{"max_abs_difference", worst}, {"points", rows}}};
}

CheckResult check_mixture(VerifyOptions const& opts)
{
    nlohmann::json rows = nlohmann::json::array();
    bool ok = true;
    std::uint64_t stream = 0;
    for (double y : {1e-3, 1e-2, 1e-1})
    {
        auto const mc = oracle::gamma_ratio_mc(opts.cgmy, y, opts.n_gamma,
                                               opts.seed + stream++);
        double const closed = cgmy_mixture_laplace(opts.cgmy, y);
        double const z = (mc.estimate - closed) / mc.std_error;
        ok = ok && std::abs(z) <= mc_band;
        rows.push_back({{"y", y},
                        {"estimate", mc.estimate},
                        {"std_error", mc.std_error},
                        {"closed_form", closed},
                        {"z", z}});
    }
    return {"mixture", ok, {{"n", opts.n_gamma}, {"points", rows}}};
}

CheckResult check_moments_cgmy(VerifyOptions const& opts)
{
    auto const batch = sample_cgmy(opts.cgmy, sim_config(opts, opts.n_moments));
    auto const k = oracle::cf_cumulants(make_cf_handle(opts.cgmy), opts.horizon, 4);
    auto r = compare_moments(batch, k);
    return {"moments-cgmy", r.passed, std::move(r.detail)};
}

CheckResult check_moments_meixner(VerifyOptions const& opts)
{
    auto const batch = sample_meixner(opts.meixner, sim_config(opts, opts.n_moments));
    auto const k = oracle::cf_cumulants(make_cf_handle(opts.meixner), opts.horizon, 4);
    auto r = compare_moments(batch, k);
    return {"moments-meixner", r.passed, std::move(r.detail)};
}

CheckResult check_integrability(VerifyOptions const& opts)
{
    auto report = [](IntegrabilityReport const& r) {
        double const tails = r.lower_tail + r.upper_tail;
        return nlohmann::json{{"value", r.value},
                              {"lower_tail", r.lower_tail},
                              {"upper_tail", r.upper_tail},
                              {"tail_fraction", tails / r.value},
                              {"error_estimate", r.error_estimate}};
    };
    auto const c = ac_integrability_check(CgmyKernel(opts.cgmy));
    auto const m = ac_integrability_check(MeixnerKernel(opts.meixner));
    auto finite = [](IntegrabilityReport const& r) {
        return std::isfinite(r.value) && r.value > 0
               && (r.lower_tail + r.upper_tail) < 1e-12 * r.value;
    };
    return {"integrability",
            finite(c) && finite(m),
            {{"cgmy", report(c)}, {"meixner", report(m)}}};
}

//---------------------------------------------------------------------------//
std::vector<std::string> verify_suite_names()
{
    return {"subordination", "subordination-alg", "laplace", "mixture",
            "moments", "integrability", "all"};
}

std::vector<CheckResult> run_verify(std::string_view suite, VerifyOptions const& opts)
{
    std::vector<CheckResult> out;
    bool const all = suite == "all";
    bool known = all;
    auto want = [&](std::string_view name) {
        bool const hit = all || suite == name;
        known = known || suite == name;
        return hit;
    };
    if (want("subordination"))
    {
        out.push_back(check_subordination(opts));
    }
    if (suite == "subordination-alg")
    {
        known = true;
        out.push_back(check_subordination_alg(opts));
    }
    if (want("laplace"))
    {
        out.push_back(check_laplace(opts));
        out.push_back(check_laplace_symmetric(opts));
    }
    if (want("mixture"))
    {
        out.push_back(check_mixture(opts));
    }
    if (want("moments"))
    {
        out.push_back(check_moments_cgmy(opts));
        out.push_back(check_moments_meixner(opts));
    }
    if (want("integrability"))
    {
        out.push_back(check_integrability(opts));
    }
    if (!known)
    {
        throw DomainError("unknown verify suite '" + std::string(suite) + "'");
    }
    return out;
}

nlohmann::json verify_manifest(std::string_view suite, std::vector<CheckResult> const& checks)
{
    nlohmann::json list = nlohmann::json::array();
    bool all_ok = true;
    for (auto const& c : checks)
    {
        nlohmann::json entry = {{"name", c.name}, {"passed", c.passed}};
        entry["detail"] = c.detail;
        list.push_back(std::move(entry));
        all_ok = all_ok && c.passed;
    }
    return {{"suite", std::string(suite)}, {"passed", all_ok}, {"checks", list}};
}

//---------------------------------------------------------------------------//
}  // namespace tcbm
