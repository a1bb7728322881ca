#pragma once

#include "tasirs/sim.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace tasirs {

inline constexpr std::string_view kCurveHeader = "scheme,snr_db,total_bits,bit_errors,ber,ci_low,ci_high";

// CSV curve file: '#'-prefixed key=value lines recording the run
// configuration, then kCurveHeader, then one row per point.
std::string format_curve(const BerCurve& curve);
BerCurve parse_curve(std::string_view text);

// Throws IoError when the file cannot be written/read and ParseError (with a
// line number) on malformed content.
void write_curve(const BerCurve& curve, const std::string& path);
BerCurve read_curve(const std::string& path);

}  // namespace tasirs
