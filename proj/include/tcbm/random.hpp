//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tcbm/random.hpp
//! Counter-based random streams keyed by (seed, path index, substream).
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace tcbm
{
//---------------------------------------------------------------------------//
/*!
 * Philox4x32-10 block function.
 *
 * Stateless: the output depends only on the counter and key.
 */
class Philox4x32
{
  public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr Counter apply(Counter ctr, Key key)
    {
        for (int round = 0; round < 10; ++round)
        {
            if (round > 0)
            {
                key[0] += kWeylA;
                key[1] += kWeylB;
            }
            ctr = single_round(ctr, key);
        }
        return ctr;
    }

  private:
    static constexpr std::uint32_t kWeylA = 0x9E3779B9u;
    static constexpr std::uint32_t kWeylB = 0xBB67AE85u;
    static constexpr std::uint32_t kMulA = 0xD2511F53u;
    static constexpr std::uint32_t kMulB = 0xCD9E8D57u;

    static constexpr Counter single_round(Counter const& c, Key const& k)
    {
        std::uint64_t const p0 = std::uint64_t{kMulA} * c[0];
        std::uint64_t const p1 = std::uint64_t{kMulB} * c[2];
        auto const hi0 = static_cast<std::uint32_t>(p0 >> 32);
        auto const lo0 = static_cast<std::uint32_t>(p0);
        auto const hi1 = static_cast<std::uint32_t>(p1 >> 32);
        auto const lo1 = static_cast<std::uint32_t>(p1);
        return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }
};

//---------------------------------------------------------------------------//
//! Independent uniform sequences consumed by one subordinator path.
enum class Substream : std::uint32_t
{
    jump_sizes = 0,
    arrivals = 1,
    thinning = 2,
    normals = 3,
};

//---------------------------------------------------------------------------//
/*!
 * Sequential view of one Philox substream.
 *
 * The counter is (block, substream, path_lo, path_hi) and the key is the
 * 64-bit seed, so streams for distinct (seed, path, substream) never overlap
 * and any path can be regenerated without touching the others. Each block
 * yields two 53-bit doubles.
 *
 * Also models UniformRandomBitGenerator (64-bit words).
 */
class CounterStream
{
  public:
    using result_type = std::uint64_t;

    CounterStream(std::uint64_t seed,
                  std::uint64_t path_index,
                  std::uint32_t substream) noexcept
        : key_{static_cast<std::uint32_t>(seed),
               static_cast<std::uint32_t>(seed >> 32)}
        , substream_(substream)
        , path_lo_(static_cast<std::uint32_t>(path_index))
        , path_hi_(static_cast<std::uint32_t>(path_index >> 32))
    {
    }

    CounterStream(std::uint64_t seed,
                  std::uint64_t path_index,
                  Substream substream) noexcept
        : CounterStream(seed, path_index, static_cast<std::uint32_t>(substream))
    {
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max()
    {
        return std::numeric_limits<result_type>::max();
    }

    //! Next 64 random bits
    result_type operator()() noexcept
    {
        if (lane_ == 2)
        {
            refill();
        }
        auto const hi = std::uint64_t{words_[2 * lane_]};
        auto const lo = std::uint64_t{words_[2 * lane_ + 1]};
        ++lane_;
        return (hi << 32) | lo;
    }

    //! Uniform on [0, 1) with 53 random bits
    double uniform() noexcept
    {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    //! Uniform on the open interval (0, 1)
    double open_uniform() noexcept
    {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }

    //! Number of Philox blocks consumed so far
    std::uint32_t blocks_used() const noexcept { return block_; }

  private:
    Philox4x32::Key key_;
    std::uint32_t substream_;
    std::uint32_t path_lo_;
    std::uint32_t path_hi_;
    std::uint32_t block_{0};
    Philox4x32::Counter words_{};
    int lane_{2};

    void refill() noexcept
    {
        words_ = Philox4x32::apply({block_, substream_, path_lo_, path_hi_},
                                   key_);
        ++block_;
        lane_ = 0;
    }
};

//---------------------------------------------------------------------------//
//! The four uniform sequences used to draw one time-changed sample.
struct PathStreams
{
    CounterStream sizes;
    CounterStream arrivals;
    CounterStream thinning;
    CounterStream normals;
};

inline PathStreams make_path_streams(std::uint64_t seed,
                                     std::uint64_t path_index) noexcept
{
    return {CounterStream(seed, path_index, Substream::jump_sizes),
            CounterStream(seed, path_index, Substream::arrivals),
            CounterStream(seed, path_index, Substream::thinning),
            CounterStream(seed, path_index, Substream::normals)};
}

//---------------------------------------------------------------------------//
}  // namespace tcbm
