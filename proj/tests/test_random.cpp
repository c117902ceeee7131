//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file test_random.cpp
//---------------------------------------------------------------------------//
#include <set>
#include <vector>

#include <doctest.h>

#include "tcbm/random.hpp"

using namespace tcbm;

TEST_CASE("philox known-answer vectors")
{
    using C = Philox4x32::Counter;
    CHECK(Philox4x32::apply({0, 0, 0, 0}, {0, 0})
          == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::apply({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                            {0xffffffff, 0xffffffff})
          == C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::apply({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                            {0xa4093822, 0x299f31d0})
          == C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("counter streams replay exactly")
{
    CounterStream a(42, 7, Substream::thinning);
    CounterStream b(42, 7, Substream::thinning);
    int mismatches = 0;
    for (int i = 0; i < 1000; ++i)
    {
        mismatches += a() != b();
    }
    CHECK(mismatches == 0);
    CHECK(a.blocks_used() == 500);
}

TEST_CASE("substreams, paths and seeds are distinct")
{
    std::set<std::uint64_t> first;
    for (std::uint64_t seed : {0u, 1u})
    {
        for (std::uint64_t path : {0u, 1u, 1000u})
        {
            for (auto sub : {Substream::jump_sizes, Substream::arrivals,
                             Substream::thinning, Substream::normals})
            {
                CounterStream s(seed, path, sub);
                first.insert(s());
            }
        }
    }
    CHECK(first.size() == 24);
}

TEST_CASE("path index above 32 bits reaches a different stream")
{
    CounterStream lo(0, 5, Substream::normals);
    CounterStream hi(0, 5 + (std::uint64_t{1} << 32), Substream::normals);
    CHECK(lo() != hi());
}

TEST_CASE("uniform ranges and moments")
{
    CounterStream s(3, 0, Substream::jump_sizes);
    double sum = 0;
    double sum_sq = 0;
    int const n = 200000;
    int out_of_range = 0;
    for (int i = 0; i < n; ++i)
    {
        double const u = s.uniform();
        double const v = s.open_uniform();
        out_of_range += !(u >= 0 && u < 1) + !(v > 0 && v < 1);
        sum += u;
        sum_sq += u * u;
    }
    CHECK(out_of_range == 0);
    double const mean = sum / n;
    CHECK(mean == doctest::Approx(0.5).epsilon(0.01));
    CHECK(sum_sq / n - mean * mean == doctest::Approx(1.0 / 12).epsilon(0.01));
}

TEST_CASE("make_path_streams matches individually built streams")
{
    auto ps = make_path_streams(9, 11);
    CounterStream n(9, 11, Substream::normals);
    CHECK(ps.normals() == n());
}
