#include "tasirs/gains.hpp"

#include "tasirs/curve_io.hpp"
#include "tasirs/errors.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>

namespace tasirs {

double snr_at_ber(const BerCurve& curve, double target_ber, const std::string& label) {
    const auto& pts = curve.points;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const BerPoint& a = pts[i];
        const BerPoint& b = pts[i + 1];
        if (a.ber == target_ber) return a.snr_db;
        if (!(a.ber > target_ber && b.ber <= target_ber)) continue;
        if (b.ber == target_ber) return b.snr_db;
        // A zero-error point has no log; the crossing is not measurable there.
        if (b.ber == 0.0) break;
        const double la = std::log10(a.ber), lb = std::log10(b.ber), lt = std::log10(target_ber);
        return a.snr_db + (la - lt) / (la - lb) * (b.snr_db - a.snr_db);
    }
    if (!pts.empty() && pts.back().ber == target_ber) return pts.back().snr_db;
    throw RangeError(label + " does not cross BER " + std::to_string(target_ber) +
                     " between two measured (nonzero) points");
}

double extract_gain(const BerCurve& base, const BerCurve& improved, double target_ber) {
    if (!(target_ber > 0.0 && target_ber < 0.5)) throw ValidationError("target BER must lie in (0, 0.5)");
    return snr_at_ber(base, target_ber, "base curve") - snr_at_ber(improved, target_ber, "improved curve");
}

std::vector<GainRow> gains_report(const std::vector<std::string>& curve_paths, const std::string& base_path,
                                  double target_ber) {
    if (!(target_ber > 0.0 && target_ber < 0.5)) throw ValidationError("target BER must lie in (0, 0.5)");
    const BerCurve base = read_curve(base_path);
    const double base_snr = snr_at_ber(base, target_ber, "base curve '" + base_path + "'");
    std::vector<GainRow> rows;
    for (const auto& path : curve_paths) {
        const BerCurve c = read_curve(path);
        rows.push_back({std::filesystem::path(path).stem().string(),
                        base_snr - snr_at_ber(c, target_ber, "curve '" + path + "'")});
    }
    return rows;
}

std::string render_gains_table(const std::vector<GainRow>& rows, double target_ber) {
    std::size_t width = 5;
    for (const auto& r : rows) width = std::max(width, r.label.size());
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-*s  %10s\n", static_cast<int>(width), "curve", "gain [dB]");
    std::string out = buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%-*s  %10.3f\n", static_cast<int>(width), r.label.c_str(), r.gain_db);
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "(measured at BER %g)\n", target_ber);
    out += buf;
    return out;
}

std::string render_gains_csv(const std::vector<GainRow>& rows) {
    std::string out = "label,gain_db\n";
    char buf[64];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.6f", r.gain_db);
        out += r.label + ',' + buf + '\n';
    }
    return out;
}

}  // namespace tasirs
