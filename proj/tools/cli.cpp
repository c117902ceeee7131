//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tools/cli.cpp
//---------------------------------------------------------------------------//
#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "tcbm/density.hpp"
#include "tcbm/errors.hpp"
#include "tcbm/gof.hpp"
#include "tcbm/io.hpp"
#include "tcbm/samplers.hpp"
#include "tcbm/verify.hpp"

namespace tcbm::cli
{
namespace
{
using Params = std::variant<CgmyParams, MeixnerParams>;

struct ProcessFlags
{
    std::string process;
    std::optional<double> C, G, M, Y;
    std::optional<double> a, b, delta;
};

void add_process_flags(CLI::App* app, ProcessFlags& f, bool meixner_allowed = true)
{
    auto* opt = app->add_option("--process", f.process,
                                meixner_allowed ? "cgmy or meixner" : "cgmy")
                    ->required();
    if (meixner_allowed)
    {
        opt->check(CLI::IsMember({"cgmy", "meixner"}));
    }
    else
    {
        opt->check(CLI::IsMember({"cgmy"}));
    }
    app->add_option("--C", f.C, "CGMY activity C");
    app->add_option("--G", f.G, "CGMY negative-jump tempering G");
    app->add_option("--M", f.M, "CGMY positive-jump tempering M");
    app->add_option("--Y", f.Y, "CGMY index Y");
    if (meixner_allowed)
    {
        app->add_option("--a", f.a, "Meixner scale a");
        app->add_option("--b", f.b, "Meixner skew b");
        app->add_option("--delta", f.delta, "Meixner shape delta");
    }
}

double need(std::optional<double> const& v, char const* flag, std::string const& process)
{
    if (!v)
    {
        throw DomainError(std::string("missing ") + flag + " for process "
                          + process);
    }
    return *v;
}

Params build_params(ProcessFlags const& f)
{
    if (f.process == "cgmy")
    {
        return CgmyParams(need(f.C, "--C", f.process),
                          need(f.G, "--G", f.process),
                          need(f.M, "--M", f.process),
                          need(f.Y, "--Y", f.process));
    }
    return MeixnerParams(need(f.a, "--a", f.process),
                         need(f.b, "--b", f.process),
                         need(f.delta, "--delta", f.process));
}

nlohmann::json params_json(Params const& p)
{
    return std::visit([](auto const& q) { return to_json(q); }, p);
}

CfHandle cf_of(Params const& p)
{
    return std::visit([](auto const& q) { return make_cf_handle(q); }, p);
}

std::ofstream open_out(std::string const& path)
{
    std::ofstream os(path);
    if (!os)
    {
        throw DomainError("cannot open '" + path + "' for writing");
    }
    return os;
}

void write_json(std::ostream& out, std::string const& path, nlohmann::json const& j)
{
    if (path.empty())
    {
        out << j.dump(2) << '\n';
        return;
    }
    auto os = open_out(path);
    os << j.dump(2) << '\n';
}

//---------------------------------------------------------------------------//
struct SimulateCmd
{
    ProcessFlags proc;
    SimulationConfig cfg;
    std::string kernel{"ac"};
    std::string out;

    int run(std::ostream& out_stream) const
    {
        auto const params = build_params(proc);
        auto cfg_run = cfg;
        cfg_run.kernel_variant = parse_cgmy_kernel_variant(kernel);
        auto const batch = std::visit(
            [&](auto const& p) {
                if constexpr (std::is_same_v<std::decay_t<decltype(p)>, CgmyParams>)
                {
                    return sample_cgmy(p, cfg_run);
                }
                else
                {
                    return sample_meixner(p, cfg_run);
                }
            },
            params);
        if (out.empty())
        {
            write_batch_csv(out_stream, batch);
            return ok;
        }
        auto csv = open_out(out + ".csv");
        write_batch_csv(csv, batch);
        auto js = open_out(out + ".json");
        js << batch_to_json(params_json(params), cfg_run, batch).dump() << '\n';
        return ok;
    }
};

struct DensityCmd
{
    ProcessFlags proc;
    double t{0.02};
    std::vector<double> range{-0.125, 0.125};
    std::size_t points{1000};
    std::string out;

    int run(std::ostream& out_stream) const
    {
        auto const params = build_params(proc);
        auto const grid = invert_cf(cf_of(params), t, {range[0], range[1], points});
        if (out.empty())
        {
            write_density_csv(out_stream, grid);
            return ok;
        }
        auto csv = open_out(out + ".csv");
        write_density_csv(csv, grid);
        auto meta = to_json(grid);
        meta["params"] = params_json(params);
        meta["t"] = t;
        auto js = open_out(out + ".json");
        js << meta.dump() << '\n';
        return ok;
    }
};

struct GofCmd
{
    ProcessFlags proc;
    std::string samples;
    double t{0.02};
    std::size_t cells{100};
    std::vector<double> range{-0.125, 0.125};
    std::size_t points{1000};
    double min_obs{5};
    std::optional<double> min_expected;
    std::string out;

    int run(std::ostream& out_stream) const
    {
        auto const params = build_params(proc);
        std::ifstream is(samples);
        if (!is)
        {
            throw DomainError("cannot open sample file '" + samples + "'");
        }
        auto const values = read_sample_values(is);
        detail::require(cells >= 1, "--cells must be positive");
        auto const grid = invert_cf(cf_of(params), t, {range[0], range[1], points});
        GofOptions opts;
        opts.n_cells = cells;
        if (min_expected)
        {
            opts.rule = CellRule::min_expected;
            opts.threshold = *min_expected;
        }
        else
        {
            opts.threshold = min_obs;
        }
        auto const report = chi_square_test(values, grid, opts);
        auto j = to_json(report);
        j["n_samples"] = values.size();
        j["params"] = params_json(params);
        j["t"] = t;
        j["rule"] = min_expected ? "min_expected" : "min_observed";
        j["threshold"] = opts.threshold;
        if (out.empty())
        {
            out_stream << j.dump(2) << '\n';
            return ok;
        }
        auto js = open_out(out + ".json");
        js << j.dump() << '\n';
        auto csv = open_out(out + ".csv");
        write_gof_csv(csv, report);
        return ok;
    }
};

struct VerifyCmd
{
    std::string suite{"all"};
    VerifyOptions opts;
    std::string out;

    int run(std::ostream& out_stream) const
    {
        auto const checks = run_verify(suite, opts);
        auto const manifest = verify_manifest(suite, checks);
        write_json(out_stream, out, manifest);
        return manifest["passed"].get<bool>() ? ok : check_failed;
    }
};

struct LaplaceCmd
{
    ProcessFlags proc;
    SimulationConfig cfg{.n_samples = 100'000};
    std::vector<double> lambdas{0.5, 1.0, 5.0};
    std::string out;

    int run(std::ostream& out_stream) const
    {
        auto const params = std::get<CgmyParams>(build_params(proc));
        auto const batch = sample_cgmy(params, cfg);
        nlohmann::json rows = nlohmann::json::array();
        bool all_ok = true;
        for (double lambda : lambdas)
        {
            auto const mc = empirical_laplace(batch, lambda);
            auto const closed = cgmy_subordinator_laplace(params, lambda, cfg.horizon);
            double const z = mc.std_error > 0
                                 ? (mc.estimate - closed.value) / mc.std_error
                                 : 0.0;
            bool const pass = std::abs(z) <= 3;
            all_ok = all_ok && pass;
            nlohmann::json row = {{"lambda", lambda},
                                  {"estimate", mc.estimate},
                                  {"std_error", mc.std_error},
                                  {"closed_form", closed.value},
                                  {"r", closed.r},
                                  {"z", z},
                                  {"passed", pass}};
            row["eta"] = closed.eta ? nlohmann::json(*closed.eta) : nlohmann::json();
            rows.push_back(std::move(row));
        }
        nlohmann::json j = {{"params", to_json(params)},
                            {"config", to_json(cfg)},
                            {"passed", all_ok},
                            {"points", rows}};
        write_json(out_stream, out, j);
        return all_ok ? ok : check_failed;
    }
};

void add_sim_flags(CLI::App* app, SimulationConfig& cfg)
{
    app->add_option("--t", cfg.horizon, "horizon")->capture_default_str();
    app->add_option("--n", cfg.n_samples, "number of samples")->capture_default_str();
    app->add_option("--eps", cfg.epsilon, "small-jump cutoff")->capture_default_str();
    app->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
}

void add_range_flags(CLI::App* app, std::vector<double>& range, std::size_t& points)
{
    app->add_option("--range", range, "x range: lo hi")
        ->expected(2)
        ->capture_default_str();
    app->add_option("--points", points, "density grid points")->capture_default_str();
}
}  // namespace

//---------------------------------------------------------------------------//
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Time-changed Brownian motion sampler for CGMY and Meixner laws",
                 "tcbm"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "OpenMP threads (default: all cores)");

    SimulateCmd sim;
    auto* s = app.add_subcommand("simulate", "draw X(t) samples");
    add_process_flags(s, sim.proc);
    add_sim_flags(s, sim.cfg);
    s->add_option("--kernel", sim.kernel, "CGMY thinning kernel")
        ->check(CLI::IsMember({"ac", "alg"}))
        ->capture_default_str();
    s->add_option("--out", sim.out, "output prefix for .csv and .json");
    s->add_option("--threads", threads, "OpenMP threads");

    DensityCmd dens;
    auto* d = app.add_subcommand("density", "pdf of X(t) by cf inversion");
    add_process_flags(d, dens.proc);
    d->add_option("--t", dens.t, "horizon")->capture_default_str();
    add_range_flags(d, dens.range, dens.points);
    d->add_option("--out", dens.out, "output prefix for .csv and .json");
    d->add_option("--threads", threads, "OpenMP threads");

    GofCmd gof;
    auto* g = app.add_subcommand("gof", "chi-square test of samples against the pdf");
    add_process_flags(g, gof.proc);
    g->add_option("--samples", gof.samples, "CSV from simulate")->required();
    g->add_option("--t", gof.t, "horizon")->capture_default_str();
    g->add_option("--cells", gof.cells, "number of cells")->capture_default_str();
    add_range_flags(g, gof.range, gof.points);
    auto* obs = g->add_option("--min-obs", gof.min_obs,
                              "use cells with more than this many observations")
                    ->capture_default_str();
    g->add_option("--min-expected", gof.min_expected,
                  "use cells with at least this expected count instead")
        ->excludes(obs);
    g->add_option("--out", gof.out, "output prefix for .json and .csv");
    g->add_option("--threads", threads, "OpenMP threads");

    VerifyCmd ver;
    auto* v = app.add_subcommand("verify", "run oracle checks");
    v->add_option("--suite", ver.suite, "suite name")->capture_default_str();
    v->add_option("--seed", ver.opts.seed, "random seed")->capture_default_str();
    v->add_option("--eps", ver.opts.epsilon, "small-jump cutoff")->capture_default_str();
    v->add_option("--n-laplace", ver.opts.n_laplace, "paths for the Laplace check")->capture_default_str();
    v->add_option("--n-moments", ver.opts.n_moments, "draws for the moment checks")->capture_default_str();
    v->add_option("--n-gamma", ver.opts.n_gamma, "draws for the gamma-ratio check")->capture_default_str();
    v->add_option("--out", ver.out, "manifest path (default stdout)");
    v->add_option("--threads", threads, "OpenMP threads");

    LaplaceCmd lap;
    auto* l = app.add_subcommand("laplace-check",
                                 "Monte Carlo vs closed-form CGMY time-change Laplace transform");
    add_process_flags(l, lap.proc, false);
    add_sim_flags(l, lap.cfg);
    l->add_option("--lambda", lap.lambdas, "transform arguments")->capture_default_str();
    l->add_option("--out", lap.out, "report path (default stdout)");
    l->add_option("--threads", threads, "OpenMP threads");

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (CLI::CallForHelp const& e)
    {
        return app.exit(e, out, err);
    }
    catch (CLI::CallForAllHelp const& e)
    {
        return app.exit(e, out, err);
    }
    catch (CLI::ParseError const& e)
    {
        app.exit(e, out, err);
        return invalid_input;
    }

    try
    {
        if (threads > 0)
        {
            omp_set_num_threads(threads);
        }
        if (s->parsed())
        {
            return sim.run(out);
        }
        if (d->parsed())
        {
            return dens.run(out);
        }
        if (g->parsed())
        {
            return gof.run(out);
        }
        if (v->parsed())
        {
            return ver.run(out);
        }
        return lap.run(out);
    }
    catch (NumericalError const& e)
    {
        err << "numerical error: " << e.what() << '\n';
        return numerical_error;
    }
    catch (std::domain_error const& e)
    {
        err << "invalid input: " << e.what() << '\n';
        return invalid_input;
    }
    catch (ResourceError const& e)
    {
        err << "resource limit: " << e.what() << '\n';
        return invalid_input;
    }
}

//---------------------------------------------------------------------------//
}  // namespace tcbm::cli
