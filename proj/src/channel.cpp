#include "tasirs/channel.hpp"

#include "tasirs/errors.hpp"
#include "tasirs/kernels.hpp"

#include <cmath>
#include <string>

namespace tasirs {

std::string_view to_string(PhaseStrategy s) {
    switch (s) {
        case PhaseStrategy::UniformRandom: return "uniform";
        case PhaseStrategy::Zero: return "zero";
        case PhaseStrategy::CoherentFirstColumn: return "coherent";
    }
    return "?";
}

PhaseStrategy parse_phase_strategy(std::string_view s) {
    if (s == "uniform") return PhaseStrategy::UniformRandom;
    if (s == "zero") return PhaseStrategy::Zero;
    if (s == "coherent") return PhaseStrategy::CoherentFirstColumn;
    throw ValidationError("unknown phase strategy '" + std::string(s) + "' (expected uniform|zero|coherent)");
}

NoiseParams NoiseParams::from_snr_db(double snr_db) {
    if (!std::isfinite(snr_db)) throw ValidationError("SNR must be finite");
    return {std::pow(10.0, -snr_db / 10.0)};
}

DirectChannel gen_direct_channel(RandomSource& rng, std::size_t nr, std::size_t nt) {
    return {sample_complex_gaussian(rng, nr, nt)};
}

IrsChannels gen_irs_channels(RandomSource& rng, std::size_t nr, std::size_t nref, std::size_t nt) {
    IrsChannels c;
    c.g = sample_complex_gaussian(rng, nr, nref);
    c.h = sample_complex_gaussian(rng, nref, nt);
    return c;
}

namespace {
void check_alpha(double alpha);
}

ComplexMatrix irs_phase_matrix(const IrsPhaseConfig& cfg) {
    check_alpha(cfg.alpha);
    if (cfg.thetas.empty()) throw ValidationError("irs_phase_matrix: need at least one element");
    const std::size_t n = cfg.thetas.size();
    ComplexMatrix phi(n, n);
    for (std::size_t r = 0; r < n; ++r) phi(r, r) = std::polar(cfg.alpha, cfg.thetas[r]);
    return phi;
}

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw ValidationError("IRS amplitude alpha must lie in (0, 1], got " + std::to_string(alpha));
    }
}

DirectChannel cascade(const IrsChannels& irs, std::span<const Complex> diag) {
    const std::size_t nref = irs.g.cols();
    if (irs.h.rows() != nref || diag.size() != nref) {
        throw ValidationError("effective_irs_channel: G, Phi and H do not share the element dimension");
    }
    const auto& k = kernels::active();
    ComplexMatrix out(irs.g.rows(), irs.h.cols());
    boost::container::small_vector<Complex, 64> weighted(nref);
    for (std::size_t n = 0; n < irs.g.rows(); ++n) {
        // (G Phi)[n,:], then accumulate the correspondingly weighted rows of H.
        k.hadamard(irs.g.row(n).data(), diag.data(), weighted.data(), nref);
        Complex* dst = out.row(n).data();
        for (std::size_t r = 0; r < nref; ++r) k.axpy(weighted[r], irs.h.row(r).data(), dst, irs.h.cols());
    }
    return {std::move(out)};
}

}  // namespace

DirectChannel effective_irs_channel(const IrsChannels& irs, const ComplexMatrix& phi) {
    const std::size_t nref = phi.rows();
    if (phi.cols() != nref) throw ValidationError("effective_irs_channel: Phi must be square");
    boost::container::small_vector<Complex, 64> diag(nref);
    for (std::size_t r = 0; r < nref; ++r) diag[r] = phi(r, r);
    return cascade(irs, {diag.data(), diag.size()});
}

DirectChannel effective_irs_channel(const IrsChannels& irs, const IrsPhaseConfig& cfg) {
    check_alpha(cfg.alpha);
    boost::container::small_vector<Complex, 64> diag(cfg.thetas.size());
    for (std::size_t r = 0; r < diag.size(); ++r) diag[r] = std::polar(cfg.alpha, cfg.thetas[r]);
    return cascade(irs, {diag.data(), diag.size()});
}

std::vector<Complex> cascade_terms(const IrsChannels& irs, std::size_t t) {
    if (t >= irs.h.cols()) throw ValidationError("cascade_terms: column out of range");
    std::vector<Complex> terms(irs.g.cols());
    for (std::size_t r = 0; r < terms.size(); ++r) terms[r] = irs.g(0, r) * irs.h(r, t);
    return terms;
}

std::vector<double> sample_phases(PhaseStrategy strategy, RandomSource& rng, std::size_t nref,
                                  std::optional<std::span<const Complex>> context) {
    if (nref == 0) throw ValidationError("sample_phases: N_REF must be >= 1");
    switch (strategy) {
        case PhaseStrategy::UniformRandom: return sample_uniform_phase(rng, nref);
        case PhaseStrategy::Zero: return std::vector<double>(nref, 0.0);
        case PhaseStrategy::CoherentFirstColumn: {
            if (!context || context->size() != nref) {
                throw ValidationError("sample_phases: coherent strategy needs one cascade term per element");
            }
            std::vector<double> out(nref);
            for (std::size_t r = 0; r < nref; ++r) out[r] = -std::arg((*context)[r]);
            return out;
        }
    }
    throw ValidationError("sample_phases: unknown strategy");
}

ComplexMatrix awgn(RandomSource& rng, std::size_t rows, std::size_t cols, const NoiseParams& noise) {
    if (!(noise.n0 > 0.0)) throw ValidationError("awgn: N0 must be positive");
    ComplexMatrix v = sample_complex_gaussian(rng, rows, cols);
    v *= std::sqrt(noise.n0);
    return v;
}

}  // namespace tasirs
