//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tcbm/io.hpp
//! CSV and JSON serialization of batches, densities and test reports.
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "tcbm/density.hpp"
#include "tcbm/gof.hpp"
#include "tcbm/model.hpp"
#include "tcbm/samplers.hpp"

namespace tcbm
{
//---------------------------------------------------------------------------//
nlohmann::json to_json(CgmyParams const& p);
nlohmann::json to_json(MeixnerParams const& p);
nlohmann::json to_json(SimulationConfig const& cfg);
nlohmann::json to_json(AcceptStats const& s);
nlohmann::json to_json(DensityGrid const& g);
nlohmann::json to_json(GofReport const& r);

//! {params, config, values, time_changes, accept_stats}
nlohmann::json batch_to_json(nlohmann::json params,
                             SimulationConfig const& cfg,
                             SampleBatch const& batch);

//---------------------------------------------------------------------------//
//! Header `index,x,tau`, 17 significant digits
void write_batch_csv(std::ostream& os, SampleBatch const& batch);
//! Header `x,pdf`
void write_density_csv(std::ostream& os, DensityGrid const& g);
//! Header `edge_lo,edge_hi,observed,expected,used`
void write_gof_csv(std::ostream& os, GofReport const& r);

//! Column `x` of a batch CSV; throws DomainError on malformed input
std::vector<double> read_sample_values(std::istream& is);

//---------------------------------------------------------------------------//
}  // namespace tcbm
