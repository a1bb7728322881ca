#include "tasirs/runspec.hpp"

#include "tasirs/errors.hpp"

#include <charconv>
#include <cmath>
#include <optional>

namespace tasirs {
namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected) {
    throw ValidationError(std::string(key) + ": cannot parse '" + std::string(value) + "' as " +
                          std::string(expected));
}

double parse_real(std::string_view key, std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() || !std::isfinite(v))
        bad_value(key, text, "a finite number");
    return v;
}

std::uint64_t parse_count(std::string_view key, std::string_view text) {
    text = trim(text);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        bad_value(key, text, "a non-negative integer");
    return v;
}

std::vector<double> parse_snr(std::string_view text) {
    text = trim(text);
    if (text.find(':') != std::string_view::npos) return expand_snr_range(text);
    std::vector<double> out;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_real("snr", text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::vector<double> expand_snr_range(std::string_view range) {
    const auto c1 = range.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : range.find(':', c1 + 1);
    if (c2 == std::string_view::npos || range.find(':', c2 + 1) != std::string_view::npos)
        bad_value("snr", range, "start:step:stop");
    const double start = parse_real("snr", range.substr(0, c1));
    const double step = parse_real("snr", range.substr(c1 + 1, c2 - c1 - 1));
    const double stop = parse_real("snr", range.substr(c2 + 1));
    if (!(step > 0.0)) throw ValidationError("snr: step must be positive");
    if (stop < start) throw ValidationError("snr: stop must not be below start");
    // Points are start + i*step; the small slack keeps 0:0.1:1 from losing its end point.
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (n > 100000) throw ValidationError("snr: range expands to too many points");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = start + static_cast<double>(i) * step;
    return out;
}

std::vector<RunSpecEntry> runspec_entries(std::string_view text) {
    std::vector<RunSpecEntry> out;
    std::size_t lineno = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++lineno;
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ValidationError("config line " + std::to_string(lineno) + ": expected key=value");
        out.emplace_back(std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))));
    }
    return out;
}

RunSpec parse_runspec(const std::vector<RunSpecEntry>& entries) {
    RunSpec spec;
    SimConfig& c = spec.config;
    c.snr_grid_db = expand_snr_range("0:2:20");
    std::optional<Scheme> scheme;
    std::optional<double> spacing;

    for (const auto& [key, value] : entries) {
        if (key == "scheme") {
            try {
                scheme = parse_scheme(trim(value));
            } catch (const ValidationError& e) {
                throw ValidationError(std::string("scheme: ") + e.what());
            }
        } else if (key == "snr") {
            c.snr_grid_db = parse_snr(value);
        } else if (key == "frames") {
            c.frames_per_packet = parse_count(key, value);
        } else if (key == "packets") {
            c.packets = parse_count(key, value);
        } else if (key == "seed") {
            c.seed = parse_count(key, value);
        } else if (key == "nt") {
            c.nt = parse_count(key, value);
        } else if (key == "nr") {
            c.nr = parse_count(key, value);
        } else if (key == "lt") {
            c.lt = parse_count(key, value);
        } else if (key == "nref") {
            c.nref = parse_count(key, value);
        } else if (key == "alpha") {
            c.alpha = parse_real(key, value);
        } else if (key == "phase") {
            try {
                c.phase_strategy = parse_phase_strategy(trim(value));
            } catch (const ValidationError& e) {
                throw ValidationError(std::string("phase: ") + e.what());
            }
        } else if (key == "lambda") {
            c.lambda_m = parse_real(key, value);
        } else if (key == "d") {
            spacing = parse_real(key, value);
        } else if (key == "out") {
            spec.out_path = std::string(trim(value));
        } else {
            throw ValidationError("unknown key '" + key + "'");
        }
    }
    if (!scheme) throw ValidationError("scheme: required key is missing");
    spec.scheme = *scheme;
    c.d_m = spacing ? *spacing : c.lambda_m / 2.0;
    validate(spec.scheme, c);
    return spec;
}

RunSpec parse_runspec(std::string_view text) { return parse_runspec(runspec_entries(text)); }

std::vector<std::string> format_runspec(Scheme scheme, const SimConfig& cfg) {
    std::string snr;
    for (std::size_t i = 0; i < cfg.snr_grid_db.size(); ++i) {
        if (i) snr += ',';
        snr += format_double(cfg.snr_grid_db[i]);
    }
    return {
        "scheme=" + std::string(to_string(scheme)),
        "snr=" + snr,
        "frames=" + std::to_string(cfg.frames_per_packet),
        "packets=" + std::to_string(cfg.packets),
        "seed=" + std::to_string(cfg.seed),
        "nt=" + std::to_string(cfg.nt),
        "nr=" + std::to_string(cfg.nr),
        "lt=" + std::to_string(cfg.lt),
        "nref=" + std::to_string(cfg.nref),
        "alpha=" + format_double(cfg.alpha),
        "phase=" + std::string(to_string(cfg.phase_strategy)),
        "lambda=" + format_double(cfg.lambda_m),
        "d=" + format_double(cfg.d_m),
    };
}

}  // namespace tasirs
