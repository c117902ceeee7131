//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file test_cli.cpp
//---------------------------------------------------------------------------//
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace
{
struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> const& args)
{
    std::ostringstream out;
    std::ostringstream err;
    int const code = tcbm::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir()
{
    static fs::path const dir = [] {
        auto d = fs::temp_directory_path() / "tcbm_test_cli";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(fs::path const& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Replace every value by its type; arrays keep the type of their first element.
json schema_of(json const& j)
{
    switch (j.type())
    {
        case json::value_t::object: {
            json out = json::object();
            for (auto const& [k, v] : j.items())
            {
                out[k] = schema_of(v);
            }
            return out;
        }
        case json::value_t::array:
            return json::array({j.empty() ? json("empty") : schema_of(j.front())});
        case json::value_t::string:
            return "string";
        case json::value_t::boolean:
            return "boolean";
        case json::value_t::null:
            return "null";
        default:
            return "number";
    }
}

// Set TCBM_UPDATE_GOLDEN=1 to rewrite the golden schemas.
void check_schema(fs::path const& produced, std::string const& golden_name)
{
    auto const schema = schema_of(json::parse(slurp(produced)));
    fs::path const golden = fs::path(TCBM_GOLDEN_DIR) / golden_name;
    if (std::getenv("TCBM_UPDATE_GOLDEN"))
    {
        std::ofstream(golden) << schema.dump(2) << '\n';
    }
    REQUIRE(fs::exists(golden));
    CHECK(schema == json::parse(slurp(golden)));
}

std::vector<std::string> const cgmy_args{
    "--process", "cgmy", "--C", "1", "--G", "5", "--M", "10", "--Y", "0.5"};
std::vector<std::string> const meixner_args{
    "--process", "meixner", "--a", "0.25", "--b", "-1.5", "--delta", "1"};

std::vector<std::string> concat(std::vector<std::string> a, std::vector<std::string> const& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}
}  // namespace

TEST_CASE("help and usage errors")
{
    CHECK(run({"--help"}).code == tcbm::cli::ok);
    CHECK(run({}).code == tcbm::cli::invalid_input);
    CHECK(run({"bogus"}).code == tcbm::cli::invalid_input);
    CHECK(run({"simulate", "--process", "cgmy", "--C", "1", "--G", "5", "--M", "10"}).code
          == tcbm::cli::invalid_input);
    CHECK(run(concat({"simulate"}, {"--process", "cgmy", "--C", "1", "--G", "5", "--M", "10",
                                    "--Y", "2.5"}))
              .code
          == tcbm::cli::invalid_input);
    CHECK(run(concat({"simulate", "--kernel", "nope"}, cgmy_args)).code
          == tcbm::cli::invalid_input);
    CHECK(run(concat({"simulate", "--eps", "-1"}, meixner_args)).code
          == tcbm::cli::invalid_input);
    auto const r = run(concat({"simulate", "--process", "vg"}, {}));
    CHECK(r.code == tcbm::cli::invalid_input);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("simulate writes csv to stdout without a prefix")
{
    auto const r = run(concat({"simulate", "--n", "10"}, cgmy_args));
    REQUIRE(r.code == tcbm::cli::ok);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "index,x,tau");
    int rows = 0;
    while (std::getline(lines, line))
    {
        ++rows;
    }
    CHECK(rows == 10);
}

TEST_CASE("simulate is reproducible and matches the golden schema")
{
    auto const dir = scratch_dir();
    for (auto const& [name, args] : {std::pair{"cgmy", cgmy_args}, std::pair{"meixner", meixner_args}})
    {
        auto const a = (dir / (std::string(name) + "_a")).string();
        auto const b = (dir / (std::string(name) + "_b")).string();
        auto const c = (dir / (std::string(name) + "_c")).string();
        REQUIRE(run(concat({"simulate", "--n", "300", "--seed", "7", "--out", a}, args)).code == 0);
        REQUIRE(run(concat({"simulate", "--n", "300", "--seed", "7", "--threads", "3", "--out", b}, args)).code == 0);
        REQUIRE(run(concat({"simulate", "--n", "300", "--seed", "8", "--out", c}, args)).code == 0);
        CHECK(slurp(a + ".csv") == slurp(b + ".csv"));
        CHECK(slurp(a + ".json") == slurp(b + ".json"));
        CHECK(slurp(a + ".csv") != slurp(c + ".csv"));
        check_schema(a + ".json", std::string("simulate_") + name + ".schema.json");

        auto const j = json::parse(slurp(a + ".json"));
        CHECK(j["config"]["seed"] == 7);
        CHECK(j["values"].size() == 300);
        CHECK(j["params"]["process"] == name);
    }
}

TEST_CASE("density and gof commands")
{
    auto const dir = scratch_dir();
    auto const sim = (dir / "gof_input").string();
    REQUIRE(run(concat({"simulate", "--n", "2000", "--out", sim}, meixner_args)).code == 0);

    auto const dens = (dir / "density").string();
    REQUIRE(run(concat({"density", "--points", "200", "--out", dens}, meixner_args)).code == 0);
    check_schema(dens + ".json", "density.schema.json");
    CHECK(slurp(dens + ".csv").rfind("x,pdf\n", 0) == 0);
    CHECK(json::parse(slurp(dens + ".json"))["pdf"].size() == 200);

    auto const gof = (dir / "gof").string();
    auto const r = run(concat({"gof", "--samples", sim + ".csv", "--cells", "20", "--out", gof},
                              meixner_args));
    REQUIRE(r.code == tcbm::cli::ok);
    check_schema(gof + ".json", "gof.schema.json");
    CHECK(slurp(gof + ".csv").rfind("edge_lo,edge_hi,observed,expected,used\n", 0) == 0);
    auto const j = json::parse(slurp(gof + ".json"));
    CHECK(j["n_samples"] == 2000);
    CHECK(j["edges"].size() == 21);

    CHECK(run(concat({"gof", "--samples", sim + ".csv", "--cells", "1"}, meixner_args)).code
          == tcbm::cli::invalid_input);
    CHECK(run(concat({"gof", "--samples", (dir / "missing.csv").string()}, meixner_args)).code
          == tcbm::cli::invalid_input);
    CHECK(run(concat({"gof", "--samples", sim + ".csv", "--min-obs", "5", "--min-expected", "5"},
                     meixner_args))
              .code
          == tcbm::cli::invalid_input);
    CHECK(run(concat({"density", "--range", "1", "0"}, meixner_args)).code
          == tcbm::cli::invalid_input);
}

TEST_CASE("verify exit codes and schema")
{
    auto const dir = scratch_dir();
    auto const out = (dir / "verify.json").string();
    auto const r = run({"verify", "--suite", "subordination", "--out", out});
    CHECK(r.code == tcbm::cli::ok);
    check_schema(out, "verify_subordination.schema.json");
    auto const j = json::parse(slurp(out));
    CHECK(j["passed"] == true);
    CHECK(j["suite"] == "subordination");

    CHECK(run({"verify", "--suite", "subordination-alg"}).code == tcbm::cli::check_failed);
    CHECK(run({"verify", "--suite", "integrability"}).code == tcbm::cli::ok);
    CHECK(run({"verify", "--suite", "nonsense"}).code == tcbm::cli::invalid_input);
}

TEST_CASE("laplace-check")
{
    auto const r = run(concat({"laplace-check", "--n", "20000", "--eps", "1e-6", "--lambda", "1",
                               "5"},
                              cgmy_args));
    CHECK(r.code == tcbm::cli::ok);
    CHECK(run(concat({"laplace-check"}, meixner_args)).code == tcbm::cli::invalid_input);
}
