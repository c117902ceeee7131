//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file io.cpp
//---------------------------------------------------------------------------//
#include "tcbm/io.hpp"

#include <charconv>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "tcbm/errors.hpp"

namespace tcbm
{
//---------------------------------------------------------------------------//
nlohmann::json to_json(CgmyParams const& p)
{
    return {{"process", "cgmy"},
            {"C", p.C()},
            {"G", p.G()},
            {"M", p.M()},
            {"Y", p.Y()}};
}

nlohmann::json to_json(MeixnerParams const& p)
{
    return {{"process", "meixner"},
            {"a", p.a()},
            {"b", p.b()},
            {"delta", p.delta()}};
}

nlohmann::json to_json(SimulationConfig const& cfg)
{
    return {{"horizon", cfg.horizon},
            {"n_samples", cfg.n_samples},
            {"epsilon", cfg.epsilon},
            {"seed", cfg.seed},
            {"kernel_variant", std::string(to_string(cfg.kernel_variant))}};
}

nlohmann::json to_json(AcceptStats const& s)
{
    return {{"proposed", s.proposed}, {"accepted", s.accepted}};
}

nlohmann::json to_json(DensityGrid const& g)
{
    return {{"x_min", g.x_min},
            {"x_max", g.x_max},
            {"n_points", g.n_points},
            {"cf_truncation", g.cf_truncation},
            {"quad_tol", g.quad_tol},
            {"trapezoid_mass", g.trapezoid_mass()},
            {"pdf", g.pdf}};
}

nlohmann::json to_json(GofReport const& r)
{
    return {{"edges", r.edges},
            {"observed", r.observed},
            {"expected", r.expected},
            {"used_mask", r.used_mask},
            {"underflow", r.underflow},
            {"overflow", r.overflow},
            {"statistic", r.statistic},
            {"dof", r.dof},
            {"p_value", r.p_value}};
}

nlohmann::json batch_to_json(nlohmann::json params,
                             SimulationConfig const& cfg,
                             SampleBatch const& batch)
{
    return {{"params", std::move(params)},
            {"config", to_json(cfg)},
            {"values", batch.values},
            {"time_changes", batch.time_changes},
            {"accept_stats", to_json(batch.accept_stats)}};
}

//---------------------------------------------------------------------------//
void write_batch_csv(std::ostream& os, SampleBatch const& batch)
{
    os << "index,x,tau\n" << std::setprecision(17);
    for (std::size_t i = 0; i < batch.values.size(); ++i)
    {
        os << i << ',' << batch.values[i] << ',' << batch.time_changes[i]
           << '\n';
    }
}

void write_density_csv(std::ostream& os, DensityGrid const& g)
{
    os << "x,pdf\n" << std::setprecision(17);
    for (std::size_t i = 0; i < g.n_points; ++i)
    {
        os << g.x(i) << ',' << g.pdf[i] << '\n';
    }
}

void write_gof_csv(std::ostream& os, GofReport const& r)
{
    os << "edge_lo,edge_hi,observed,expected,used\n" << std::setprecision(17);
    for (std::size_t i = 0; i < r.observed.size(); ++i)
    {
        os << r.edges[i] << ',' << r.edges[i + 1] << ',' << r.observed[i]
           << ',' << r.expected[i] << ',' << (r.used_mask[i] ? 1 : 0) << '\n';
    }
}

//---------------------------------------------------------------------------//
namespace
{
std::vector<std::string> split_csv(std::string const& line)
{
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ','))
    {
        while (!f.empty() && (f.back() == '\r' || f.back() == ' '))
        {
            f.pop_back();
        }
        fields.push_back(f);
    }
    return fields;
}
}  // namespace

std::vector<double> read_sample_values(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line))
    {
        throw DomainError("sample file is empty");
    }
    auto const header = split_csv(line);
    std::size_t col = header.size();
    for (std::size_t i = 0; i < header.size(); ++i)
    {
        if (header[i] == "x")
        {
            col = i;
        }
    }
    if (col == header.size())
    {
        throw DomainError("sample file has no 'x' column");
    }
    std::vector<double> values;
    std::size_t row = 1;
    while (std::getline(is, line))
    {
        ++row;
        if (line.empty() || line == "\r")
        {
            continue;
        }
        auto const fields = split_csv(line);
        if (fields.size() <= col)
        {
            throw DomainError("sample file row " + std::to_string(row)
                              + " has too few fields");
        }
        std::string const& f = fields[col];
        double v = 0;
        auto const [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
        if (ec != std::errc{} || ptr != f.data() + f.size())
        {
            throw DomainError("sample file row " + std::to_string(row)
                              + ": cannot parse '" + f + "'");
        }
        values.push_back(v);
    }
    if (values.empty())
    {
        throw DomainError("sample file contains no samples");
    }
    return values;
}

//---------------------------------------------------------------------------//
}  // namespace tcbm
