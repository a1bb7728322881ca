#pragma once

#include "tasirs/numerics.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

namespace tasirs {

// Counter-based Philox-4x32-10 block function. Pure: the same (counter, key)
// always yields the same 128 output bits.
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) noexcept {
    constexpr std::uint32_t kMul0 = 0xD2511F53u;
    constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
        const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
        ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
               static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

// Random stream addressed by (seed, stream id, substream). The seed is the
// Philox key; stream and substream occupy the high counter words, so any
// address can be jumped to without generating its predecessors. Distinct
// addresses give independent sequences.
//
// Satisfies UniformRandomBitGenerator (64-bit output). Not thread-safe; give
// each worker its own instance.
class RandomSource {
public:
    using result_type = std::uint64_t;

    RandomSource(std::uint64_t seed, std::uint64_t stream_id, std::uint32_t substream = 0) noexcept;

    // Fresh stream at the same (seed, stream id) but another substream.
    RandomSource substream(std::uint32_t sub) const noexcept { return {seed_, stream_, sub}; }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_; }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
    result_type operator()() noexcept {
        if (avail_ == 0) refill();
        const int i = 2 - avail_--;
        return (std::uint64_t{buf_[2 * i + 1]} << 32) | buf_[2 * i];
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
    void refill() noexcept {
        // counter = [block, substream, stream lo, stream hi]
        buf_ = philox4x32({block_++, sub_, static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)},
                          {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)});
        avail_ = 2;
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint32_t sub_;
    std::uint32_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int avail_ = 0;  // 64-bit words left in buf_
};

// One CN(0,1) draw (Box-Muller on two uniforms): unit total variance, 1/2 per
// real dimension.
Complex sample_cn01(RandomSource& rng);

// i.i.d. CN(0,1) entries.
ComplexMatrix sample_complex_gaussian(RandomSource& rng, std::size_t rows, std::size_t cols);

// n i.i.d. phases, uniform on [0, 2*pi). Throws ValidationError for n == 0.
std::vector<double> sample_uniform_phase(RandomSource& rng, std::size_t n);

}  // namespace tasirs
