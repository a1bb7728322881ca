#pragma once

#include "tasirs/numerics.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace tasirs {

// All subsets of na antennas out of nt, 1-based, lexicographic order.
// Throws ValidationError unless 1 <= na <= nt.
std::vector<std::vector<std::size_t>> enumerate_combinations(std::size_t nt, std::size_t na);

struct SelectionResult {
    std::vector<std::size_t> antennas;  // 1-based, increasing
    double metric = 0.0;                // ||H_sel||_F^2

    std::size_t p1() const { return antennas.at(0); }
    std::size_t p2() const { return antennas.at(1); }

    // 0-based column indices into the full channel.
    std::vector<std::size_t> columns() const;
};

// Frobenius-norm antenna selection: the subset of na columns of h with the
// largest ||H_sel||_F^2. Ties go to the lexicographically smallest subset.
SelectionResult select_antennas(const ComplexMatrix& h, std::size_t na);

struct ZfPrecoder {
    ComplexMatrix p_zf;    // H^H (H H^H)^-1, 2 x N_r, unscaled
    double beta = 0.0;     // sqrt(N_t / trace(P_zf P_zf^H))
    ComplexMatrix p_diag;  // 2 x 2 diagonal of beta * P_zf
};

// Zero-forcing precoder for the selected N_r x 2 sub-channel (N_r = 1 or 2).
// nt_total is the full transmit antenna count used in the power constraint.
// For N_r = 1 the diagonal holds (beta p1, beta p2); otherwise the main
// diagonal of beta * P_zf. Throws SingularityError for a singular Gram matrix.
ZfPrecoder zf_precoder(const ComplexMatrix& h_sel, std::size_t nt_total);

struct UlaConfig {
    std::size_t lt = 1;      // elements per transmit antenna
    double d_m = 0.0025;     // element spacing
    double lambda_m = 0.005; // wavelength

    double wavenumber() const;
    // Throws ValidationError unless lt >= 1, lambda > 0 and 0 < d <= lambda/2.
    void validate() const;
};

// Progressive-phase weights (1/sqrt(L_T)) [1, e^{j delta}, ..., e^{j(L_T-1) delta}],
// delta = k d sin(theta).
std::vector<Complex> ula_weight(double theta_aod, const UlaConfig& cfg);

// Steering vector [1, e^{j delta}, ...] with unit-modulus entries.
std::vector<Complex> array_response(double theta, const UlaConfig& cfg);

// w(steer)^H a(toward): the array's amplitude gain toward a direction.
Complex beam_gain(double steer, double toward, const UlaConfig& cfg);

// Channel seen by the Alamouti combiner after transmit processing, N_r x 2,
// plus the per-antenna transmit amplitude sqrt(E_s/2).
struct EffectiveLink {
    ComplexMatrix h_eff;
    double energy_factor = 0.0;
};

// Plain TAS-OSTBC: h_eff = h_sel.
EffectiveLink tas_effective_link(const ComplexMatrix& h_sel);

// ZF-precoded: h_eff = h_sel * P_diag.
EffectiveLink zf_effective_link(const ComplexMatrix& h_sel, const ZfPrecoder& prec);

// Each selected antenna drives an L_T-element subarray steered to its own
// departure angle, so column i picks up the matched gain w(theta_i)^H a(theta_i)
// = sqrt(L_T).
EffectiveLink abf_effective_link(const ComplexMatrix& h_sel, const UlaConfig& ula, std::array<double, 2> theta_aods);

// Hybrid: ABF composed with the ZF diagonal precoder. The receiver's division
// by beta*sqrt(L_T) scales signal and noise alike and is not modelled.
EffectiveLink hbf_effective_link(const ComplexMatrix& h_sel, const UlaConfig& ula, std::array<double, 2> theta_aods,
                                 const ZfPrecoder& prec);

}  // namespace tasirs
