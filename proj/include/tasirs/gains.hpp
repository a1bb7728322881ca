#pragma once

#include "tasirs/sim.hpp"

#include <string>
#include <vector>

namespace tasirs {

// SNR (dB) where the curve first falls through target_ber, by linear
// interpolation of log10(BER) against SNR in dB. Throws RangeError naming
// `label` if no measured segment brackets the target.
double snr_at_ber(const BerCurve& curve, double target_ber, const std::string& label = "curve");

// SNR_base - SNR_improved at target_ber; positive means `improved` needs less
// SNR. target_ber must lie in (0, 0.5).
double extract_gain(const BerCurve& base, const BerCurve& improved, double target_ber);

struct GainRow {
    std::string label;
    double gain_db = 0.0;
};

// One row per curve file, measured against the base file. Labels are file
// stems.
std::vector<GainRow> gains_report(const std::vector<std::string>& curve_paths, const std::string& base_path,
                                  double target_ber);

std::string render_gains_table(const std::vector<GainRow>& rows, double target_ber);
std::string render_gains_csv(const std::vector<GainRow>& rows);

}  // namespace tasirs
