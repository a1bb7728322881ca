#include "tasirs/sim.hpp"

#include "tasirs/errors.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <thread>

namespace tasirs {
namespace {

// Substream layout inside one frame's stream.
enum Substream : std::uint32_t {
    kChannel = 0,
    kAod = 1,
    kPhase = 2,
    kBits = 3,
    kNoise = 4,
    kResampleBase = 16,  // attempt k uses kResampleBase + 2k (channel) and +2k+1 (phases)
};

constexpr unsigned kMaxResample = 64;
constexpr double kEnergyFactor = std::numbers::sqrt2 / 2.0;

void check_shape(const ComplexMatrix& m, std::size_t rows, std::size_t cols) {
    if (m.rows() != rows || m.cols() != cols) {
        throw ValidationError("forced channel must be " + std::to_string(rows) + "x" + std::to_string(cols));
    }
}

BitBlock draw_bits(RandomSource rng) {
    const std::uint64_t w = rng();
    return {static_cast<Bit>(w & 1), static_cast<Bit>((w >> 1) & 1), static_cast<Bit>((w >> 2) & 1),
            static_cast<Bit>((w >> 3) & 1)};
}

std::uint32_t count_errors(const BitBlock& a, const BitBlock& b) {
    std::uint32_t e = 0;
    for (std::size_t i = 0; i < a.size(); ++i) e += a[i] != b[i];
    return e;
}

ComplexMatrix draw_irs_channel(const SimConfig& cfg, RandomSource chan_rng, RandomSource phase_rng) {
    const IrsChannels irs = gen_irs_channels(chan_rng, cfg.nr, cfg.nref, cfg.nt);
    std::vector<double> thetas;
    if (cfg.phase_strategy == PhaseStrategy::CoherentFirstColumn) {
        // Align the column with the largest coherent amplitude sum_r |g_r h_rt|.
        std::size_t best = 0;
        double best_amp = -1.0;
        for (std::size_t t = 0; t < cfg.nt; ++t) {
            double amp = 0.0;
            for (const auto& c : cascade_terms(irs, t)) amp += std::abs(c);
            if (amp > best_amp) best_amp = amp, best = t;
        }
        const auto terms = cascade_terms(irs, best);
        thetas = sample_phases(cfg.phase_strategy, phase_rng, cfg.nref, std::span<const Complex>(terms));
    } else {
        thetas = sample_phases(cfg.phase_strategy, phase_rng, cfg.nref);
    }
    return effective_irs_channel(irs, IrsPhaseConfig{cfg.alpha, std::move(thetas)}).h;
}

FrameTrace siso_frame(const SimConfig& cfg, const NoiseParams& noise, const RandomSource& rng,
                      const ComplexMatrix* forced) {
    FrameTrace tr;
    if (forced) {
        check_shape(*forced, cfg.nr, 1);
        tr.channel = *forced;
    } else {
        auto chan_rng = rng.substream(kChannel);
        tr.channel = gen_direct_channel(chan_rng, cfg.nr, 1).h;
    }
    tr.link = {tr.channel, 1.0};
    tr.tx_bits = draw_bits(rng.substream(kBits));
    auto noise_rng = rng.substream(kNoise);
    const ComplexMatrix v = awgn(noise_rng, cfg.nr, 2, noise);

    tr.channel_gain = frobenius_norm_sq(tr.channel);
    for (std::size_t t = 0; t < 2; ++t) {
        const Complex x = qam4_map(std::span<const Bit>(tr.tx_bits).subspan(2 * t, 2));
        Complex z = 0.0;
        for (std::size_t r = 0; r < cfg.nr; ++r) {
            const Complex h = tr.channel(r, 0);
            z += std::conj(h) * (h * x + v(r, t));
        }
        const auto b = qam4_demap(z);
        tr.rx_bits[2 * t] = b[0];
        tr.rx_bits[2 * t + 1] = b[1];
    }
    tr.result = {count_errors(tr.tx_bits, tr.rx_bits), 4};
    return tr;
}

}  // namespace

std::string_view to_string(Scheme s) {
    switch (s) {
        case Scheme::Siso: return "siso";
        case Scheme::Alamouti2x1: return "alamouti";
        case Scheme::TasOstbc: return "tas-ostbc";
        case Scheme::TasOstbcZf: return "tas-ostbc-zf";
        case Scheme::TasOstbcAbf: return "tas-ostbc-abf";
        case Scheme::TasOstbcHbf: return "tas-ostbc-hbf";
        case Scheme::IrsTasOstbcHbf: return "irs-tas-ostbc-hbf";
    }
    return "?";
}

Scheme parse_scheme(std::string_view s) {
    for (Scheme sc : kAllSchemes)
        if (to_string(sc) == s) return sc;
    throw ValidationError("unknown scheme '" + std::string(s) + "'");
}

bool uses_selection(Scheme s) { return s != Scheme::Siso && s != Scheme::Alamouti2x1; }

bool uses_zf(Scheme s) {
    return s == Scheme::TasOstbcZf || s == Scheme::TasOstbcHbf || s == Scheme::IrsTasOstbcHbf;
}

bool uses_beamforming(Scheme s) {
    return s == Scheme::TasOstbcAbf || s == Scheme::TasOstbcHbf || s == Scheme::IrsTasOstbcHbf;
}

void validate(Scheme scheme, const SimConfig& cfg) {
    if (cfg.snr_grid_db.empty()) throw ValidationError("snr: grid is empty");
    for (std::size_t i = 0; i < cfg.snr_grid_db.size(); ++i) {
        if (!std::isfinite(cfg.snr_grid_db[i])) throw ValidationError("snr: values must be finite");
        if (i > 0 && !(cfg.snr_grid_db[i] > cfg.snr_grid_db[i - 1]))
            throw ValidationError("snr: grid must be strictly increasing");
    }
    if (cfg.frames_per_packet < 1) throw ValidationError("frames: must be >= 1");
    if (cfg.packets < 1) throw ValidationError("packets: must be >= 1");
    if (cfg.total_frames() / cfg.packets != cfg.frames_per_packet || cfg.total_frames() > 0xFFFFFFFFull)
        throw ValidationError("frames: frames x packets must stay below 2^32");
    if (cfg.snr_grid_db.size() > 0xFFFFFFFFull) throw ValidationError("snr: too many grid points");
    if (cfg.nt < 1) throw ValidationError("nt: must be >= 1");
    if (cfg.nr < 1) throw ValidationError("nr: must be >= 1");
    if (cfg.lt < 1) throw ValidationError("lt: must be >= 1");
    if (cfg.nref < 1) throw ValidationError("nref: must be >= 1");
    if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0)) throw ValidationError("alpha: must lie in (0, 1]");
    if (!(cfg.lambda_m > 0.0)) throw ValidationError("lambda: must be positive");
    if (!(cfg.d_m > 0.0 && cfg.d_m <= cfg.lambda_m / 2.0)) throw ValidationError("d: must satisfy 0 < d <= lambda/2");
    if (cfg.na != 2) throw ValidationError("na: the Alamouti code needs exactly 2 active antennas");
    if (uses_selection(scheme) && cfg.nt < cfg.na) throw ValidationError("nt: need at least 2 transmit antennas");
    if (uses_zf(scheme) && cfg.nr > 2) throw ValidationError("nr: zero-forcing supports at most 2 receive antennas");
}

FrameTrace trace_frame(Scheme scheme, const SimConfig& cfg, double snr_db, std::uint64_t stream_id,
                       const ComplexMatrix* forced) {
    const NoiseParams noise = NoiseParams::from_snr_db(snr_db);
    const RandomSource rng(cfg.seed, stream_id);
    if (scheme == Scheme::Siso) return siso_frame(cfg, noise, rng, forced);

    FrameTrace tr;
    const std::size_t nt = scheme == Scheme::Alamouti2x1 ? 2 : cfg.nt;
    std::optional<ZfPrecoder> prec;

    for (unsigned attempt = 0;; ++attempt) {
        const std::uint32_t chan_sub = attempt == 0 ? kChannel : kResampleBase + 2 * (attempt - 1);
        const std::uint32_t phase_sub = attempt == 0 ? kPhase : kResampleBase + 2 * (attempt - 1) + 1;
        if (forced) {
            check_shape(*forced, cfg.nr, nt);
            tr.channel = *forced;
        } else if (scheme == Scheme::IrsTasOstbcHbf) {
            tr.channel = draw_irs_channel(cfg, rng.substream(chan_sub), rng.substream(phase_sub));
        } else {
            auto chan_rng = rng.substream(chan_sub);
            tr.channel = gen_direct_channel(chan_rng, cfg.nr, nt).h;
        }
        if (!uses_selection(scheme)) break;

        tr.selection = select_antennas(tr.channel, cfg.na);
        if (!uses_zf(scheme)) break;
        try {
            prec = zf_precoder(tr.channel.select_columns(tr.selection->columns()), cfg.nt);
            break;
        } catch (const SingularityError&) {
            if (forced || attempt + 1 >= kMaxResample) throw;
            ++tr.resampled;
        }
    }

    std::array<double, 2> aods{};
    if (uses_beamforming(scheme)) {
        auto aod_rng = rng.substream(kAod);
        for (auto& a : aods) a = (aod_rng.uniform01() - 0.5) * std::numbers::pi;
    }

    const ComplexMatrix h_sel =
        tr.selection ? tr.channel.select_columns(tr.selection->columns()) : tr.channel;
    switch (scheme) {
        case Scheme::Alamouti2x1:
        case Scheme::TasOstbc: tr.link = tas_effective_link(h_sel); break;
        case Scheme::TasOstbcZf: tr.link = zf_effective_link(h_sel, *prec); break;
        case Scheme::TasOstbcAbf: tr.link = abf_effective_link(h_sel, cfg.ula(), aods); break;
        case Scheme::TasOstbcHbf:
        case Scheme::IrsTasOstbcHbf: tr.link = hbf_effective_link(h_sel, cfg.ula(), aods, *prec); break;
        case Scheme::Siso: break;
    }

    tr.tx_bits = draw_bits(rng.substream(kBits));
    const Complex x1 = qam4_map(std::span<const Bit>(tr.tx_bits).first(2));
    const Complex x2 = qam4_map(std::span<const Bit>(tr.tx_bits).last(2));

    auto noise_rng = rng.substream(kNoise);
    ComplexMatrix y = matmul(tr.link.h_eff, alamouti_encode(x1, x2));
    y *= kEnergyFactor;
    y += awgn(noise_rng, cfg.nr, 2, noise);

    const DecisionPair d = alamouti_combine(tr.link.h_eff, y);
    tr.channel_gain = d.channel_gain;
    tr.rx_bits = detect_pair(d);
    tr.result = {count_errors(tr.tx_bits, tr.rx_bits), 4};
    return tr;
}

FrameResult run_frame(Scheme scheme, const SimConfig& cfg, double snr_db, std::uint64_t frame_index,
                      std::uint64_t point_index) {
    if (frame_index >= cfg.total_frames()) throw ValidationError("run_frame: frame index out of range");
    return trace_frame(scheme, cfg, snr_db, frame_stream_id(point_index, frame_index)).result;
}

Interval wilson_ci(std::uint64_t errors, std::uint64_t n, double z) {
    if (n == 0 || errors > n) throw ValidationError("wilson_ci: need 0 <= errors <= n and n >= 1");
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(errors) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / denom;
    const double half = z / denom * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
    double low = errors == 0 ? 0.0 : std::max(0.0, center - half);
    double high = errors == n ? 1.0 : std::min(1.0, center + half);
    return {std::min(low, p), std::max(high, p)};
}

BerPoint make_point(double snr_db, std::uint64_t bit_errors, std::uint64_t total_bits) {
    BerPoint pt;
    pt.snr_db = snr_db;
    pt.total_bits = total_bits;
    pt.bit_errors = bit_errors;
    pt.ber = static_cast<double>(bit_errors) / static_cast<double>(total_bits);
    const Interval ci = wilson_ci(bit_errors, total_bits);
    pt.ci_low = ci.low;
    pt.ci_high = ci.high;
    return pt;
}

BerPoint run_point(Scheme scheme, const SimConfig& cfg, double snr_db, std::uint64_t point_index, ExecPolicy exec) {
    validate(scheme, cfg);
    const std::uint64_t frames = cfg.total_frames();
    const unsigned workers = std::max(1u, exec.workers);

    struct Tally {
        std::uint64_t errors = 0;
        std::uint64_t bits = 0;
    };
    // Worker w takes frames w, w+W, w+2W, ... Integer sums are order-independent.
    auto work = [&](unsigned w, Tally& t) {
        for (std::uint64_t f = w; f < frames; f += workers) {
            const FrameResult r = trace_frame(scheme, cfg, snr_db, frame_stream_id(point_index, f)).result;
            t.errors += r.bit_errors;
            t.bits += r.bits;
        }
    };

    std::vector<Tally> tallies(workers);
    if (workers == 1) {
        work(0, tallies[0]);
    } else {
        std::vector<std::exception_ptr> failures(workers);
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        work(w, tallies[w]);
                    } catch (...) {
                        failures[w] = std::current_exception();
                    }
                });
            }
        }
        for (const auto& f : failures)
            if (f) std::rethrow_exception(f);
    }
    Tally total;
    for (const auto& t : tallies) total.errors += t.errors, total.bits += t.bits;
    return make_point(snr_db, total.errors, total.bits);
}

BerCurve run_sweep(Scheme scheme, const SimConfig& cfg, ExecPolicy exec) {
    validate(scheme, cfg);
    BerCurve curve{scheme, cfg, {}};
    curve.points.reserve(cfg.snr_grid_db.size());
    for (std::size_t i = 0; i < cfg.snr_grid_db.size(); ++i)
        curve.points.push_back(run_point(scheme, cfg, cfg.snr_grid_db[i], i, exec));
    return curve;
}

}  // namespace tasirs
