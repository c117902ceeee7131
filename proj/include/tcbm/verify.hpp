//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tcbm/verify.hpp
//! Named suites of oracle checks with a JSON pass/fail manifest.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tcbm/model.hpp"

namespace tcbm
{
//---------------------------------------------------------------------------//
struct VerifyOptions
{
    CgmyParams cgmy{1, 5, 10, 0.5};
    MeixnerParams meixner{0.25, -1.5, 1};
    double horizon{0.02};
    double epsilon{1e-8};
    std::uint64_t seed{0};
    std::size_t n_laplace{100'000};
    std::size_t n_moments{1'000'000};
    std::size_t n_gamma{10'000'000};
};

struct CheckResult
{
    std::string name;
    bool passed{false};
    nlohmann::json detail;
};

//! subordination, subordination-alg, laplace, mixture, moments,
//! integrability, all
std::vector<std::string> verify_suite_names();

//! Throws DomainError for an unknown suite
std::vector<CheckResult> run_verify(std::string_view suite, VerifyOptions const& opts = {});

//! {suite, passed, checks: [{name, passed, ...detail}]}
nlohmann::json verify_manifest(std::string_view suite, std::vector<CheckResult> const& checks);

//---------------------------------------------------------------------------//
// Individual checks, also used by the acceptance harness
CheckResult check_subordination(VerifyOptions const& opts);
CheckResult check_subordination_alg(VerifyOptions const& opts);
CheckResult check_laplace(VerifyOptions const& opts);
CheckResult check_laplace_symmetric(VerifyOptions const& opts);
CheckResult check_mixture(VerifyOptions const& opts);
CheckResult check_moments_cgmy(VerifyOptions const& opts);
CheckResult check_moments_meixner(VerifyOptions const& opts);
CheckResult check_integrability(VerifyOptions const& opts);

//---------------------------------------------------------------------------//
}  // namespace tcbm
