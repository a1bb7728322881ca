#pragma once

#include "tasirs/channel.hpp"
#include "tasirs/numerics.hpp"
#include "tasirs/phy.hpp"
#include "tasirs/tx.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace tasirs {

enum class Scheme { Siso, Alamouti2x1, TasOstbc, TasOstbcZf, TasOstbcAbf, TasOstbcHbf, IrsTasOstbcHbf };

inline constexpr Scheme kAllSchemes[] = {Scheme::Siso,        Scheme::Alamouti2x1, Scheme::TasOstbc,
                                         Scheme::TasOstbcZf,  Scheme::TasOstbcAbf, Scheme::TasOstbcHbf,
                                         Scheme::IrsTasOstbcHbf};

// Command-line names: siso, alamouti, tas-ostbc, tas-ostbc-zf, tas-ostbc-abf,
// tas-ostbc-hbf, irs-tas-ostbc-hbf.
std::string_view to_string(Scheme s);
Scheme parse_scheme(std::string_view s);

bool uses_selection(Scheme s);
bool uses_zf(Scheme s);
bool uses_beamforming(Scheme s);

// Run parameters. Defaults follow the reference setup: 4-QAM, 10^5 frames per
// packet, 10 packets, 4 transmit / 1 receive antenna, 60 GHz (lambda = 5 mm)
// with half-wavelength element spacing, alpha = 1.
struct SimConfig {
    std::vector<double> snr_grid_db;
    std::uint64_t frames_per_packet = 100000;
    std::uint64_t packets = 10;
    std::uint64_t seed = 1;
    std::size_t nt = 4;
    std::size_t nr = 1;
    std::size_t na = 2;
    std::size_t lt = 1;
    std::size_t nref = 16;
    double alpha = 1.0;
    PhaseStrategy phase_strategy = PhaseStrategy::UniformRandom;
    double lambda_m = 0.005;
    double d_m = 0.0025;

    std::uint64_t total_frames() const { return frames_per_packet * packets; }
    UlaConfig ula() const { return {lt, d_m, lambda_m}; }

    friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

// Throws ValidationError naming the offending parameter.
void validate(Scheme scheme, const SimConfig& cfg);

// Every frame's random stream is addressed by (point index, frame index).
inline std::uint64_t frame_stream_id(std::uint64_t point_index, std::uint64_t frame_index) {
    return (point_index << 32) | frame_index;
}

struct FrameResult {
    std::uint32_t bit_errors = 0;
    std::uint32_t bits = 0;
    friend bool operator==(const FrameResult&, const FrameResult&) = default;
};

// Everything one frame did, for inspection and tests.
struct FrameTrace {
    FrameResult result;
    ComplexMatrix channel;                   // direct or IRS-effective, before selection
    std::optional<SelectionResult> selection;
    EffectiveLink link;
    double channel_gain = 0.0;               // combiner gain sum |h_eff|^2
    BitBlock tx_bits{};
    BitBlock rx_bits{};
    unsigned resampled = 0;                  // channel redraws after a singular Gram matrix
};

// One quasi-static frame: fresh channel, one Alamouti block (4 bits).
// `forced_channel` replaces the random (or IRS-effective) channel; its shape
// must match what the scheme would draw.
FrameTrace trace_frame(Scheme scheme, const SimConfig& cfg, double snr_db, std::uint64_t stream_id,
                       const ComplexMatrix* forced_channel = nullptr);

FrameResult run_frame(Scheme scheme, const SimConfig& cfg, double snr_db, std::uint64_t frame_index,
                      std::uint64_t point_index = 0);

// Wilson score interval for errors/n at normal quantile z.
struct Interval {
    double low;
    double high;
};
Interval wilson_ci(std::uint64_t errors, std::uint64_t n, double z = 1.959963984540054);

struct BerPoint {
    double snr_db = 0.0;
    std::uint64_t total_bits = 0;
    std::uint64_t bit_errors = 0;
    double ber = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;

    friend bool operator==(const BerPoint&, const BerPoint&) = default;
};

BerPoint make_point(double snr_db, std::uint64_t bit_errors, std::uint64_t total_bits);

struct BerCurve {
    Scheme scheme = Scheme::TasOstbc;
    SimConfig config;
    std::vector<BerPoint> points;

    friend bool operator==(const BerCurve&, const BerCurve&) = default;
};

struct ExecPolicy {
    unsigned workers = 1;
};

// All frames of one SNR point. The result does not depend on the worker count.
BerPoint run_point(Scheme scheme, const SimConfig& cfg, double snr_db, std::uint64_t point_index = 0,
                   ExecPolicy exec = {});

BerCurve run_sweep(Scheme scheme, const SimConfig& cfg, ExecPolicy exec = {});

}  // namespace tasirs
