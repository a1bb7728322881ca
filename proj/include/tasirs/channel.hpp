#pragma once

#include "tasirs/numerics.hpp"
#include "tasirs/random.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace tasirs {

// Transmitter -> receiver channel, N_r x N_t.
struct DirectChannel {
    ComplexMatrix h;
};

// Cascade through a reflecting surface: G (N_r x N_REF) and H (N_REF x N_t).
struct IrsChannels {
    ComplexMatrix g;
    ComplexMatrix h;
};

enum class PhaseStrategy { UniformRandom, Zero, CoherentFirstColumn };

std::string_view to_string(PhaseStrategy s);
// Accepts "uniform", "zero", "coherent". Throws ValidationError otherwise.
PhaseStrategy parse_phase_strategy(std::string_view s);

struct IrsPhaseConfig {
    double alpha = 1.0;          // reflection amplitude, (0, 1]
    std::vector<double> thetas;  // one phase per element, radians
};

struct NoiseParams {
    double n0 = 1.0;  // total noise power per complex sample, with E_s = 1

    // N0 = 10^(-snr/10)
    static NoiseParams from_snr_db(double snr_db);
};

// i.i.d. CN(0,1) Rayleigh channel.
DirectChannel gen_direct_channel(RandomSource& rng, std::size_t nr, std::size_t nt);

// Independent CN(0,1) G and H.
IrsChannels gen_irs_channels(RandomSource& rng, std::size_t nr, std::size_t nref, std::size_t nt);

// Phi = alpha * diag(exp(j*theta_r)). Throws ValidationError for alpha
// outside (0, 1] or an empty phase list.
ComplexMatrix irs_phase_matrix(const IrsPhaseConfig& cfg);

// H_eff = G * Phi * H (N_r x N_t). Phi must be N_REF x N_REF and diagonal;
// only its diagonal is read.
DirectChannel effective_irs_channel(const IrsChannels& irs, const ComplexMatrix& phi);

// Same product without materialising Phi. Validates alpha like irs_phase_matrix.
DirectChannel effective_irs_channel(const IrsChannels& irs, const IrsPhaseConfig& cfg);

// Per-element cascade terms g_r * h_{r,t} for receive antenna 0 and transmit column t.
std::vector<Complex> cascade_terms(const IrsChannels& irs, std::size_t t);

// Element phases for the given strategy. CoherentFirstColumn needs the
// cascade terms of the column to align (theta_r = -arg(term_r)) and throws
// ValidationError without them.
std::vector<double> sample_phases(PhaseStrategy strategy, RandomSource& rng, std::size_t nref,
                                  std::optional<std::span<const Complex>> context = std::nullopt);

// CN(0, N0) noise block. Throws ValidationError for N0 <= 0.
ComplexMatrix awgn(RandomSource& rng, std::size_t rows, std::size_t cols, const NoiseParams& noise);

}  // namespace tasirs
