#include "tasirs/random.hpp"

#include "tasirs/errors.hpp"

#include <cmath>
#include <numbers>

namespace tasirs {

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream_id, std::uint32_t substream) noexcept
    : seed_(seed), stream_(stream_id), sub_(substream) {}

Complex sample_cn01(RandomSource& rng) {
    // 1 - u lies in (0, 1], so the log is finite.
    const double radius = std::sqrt(-std::log(1.0 - rng.uniform01()));
    const double angle = 2.0 * std::numbers::pi * rng.uniform01();
    return std::polar(radius, angle);
}

ComplexMatrix sample_complex_gaussian(RandomSource& rng, std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw ValidationError("sample_complex_gaussian: rows and cols must be >= 1");
    ComplexMatrix m(rows, cols);
    for (auto& v : m.entries()) v = sample_cn01(rng);
    return m;
}

std::vector<double> sample_uniform_phase(RandomSource& rng, std::size_t n) {
    if (n == 0) throw ValidationError("sample_uniform_phase: n must be >= 1");
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    std::vector<double> out(n);
    for (auto& v : out) {
        v = kTwoPi * rng.uniform01();
        if (v >= kTwoPi) v = std::nextafter(kTwoPi, 0.0);
    }
    return out;
}

}  // namespace tasirs
