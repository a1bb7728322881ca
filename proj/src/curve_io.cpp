#include "tasirs/curve_io.hpp"

#include "tasirs/errors.hpp"
#include "tasirs/runspec.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace tasirs {
namespace {

constexpr std::array<std::string_view, 7> kColumns = {"scheme", "snr_db", "total_bits", "bit_errors",
                                                      "ber",    "ci_low", "ci_high"};

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const auto p = line.find(sep);
        out.push_back(trim(line.substr(0, p)));
        if (p == std::string_view::npos) return out;
        line.remove_prefix(p + 1);
    }
}

double field_real(std::string_view s, std::string_view column, std::size_t line) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError("column '" + std::string(column) + "': bad number '" + std::string(s) + "'", line);
    return v;
}

std::uint64_t field_count(std::string_view s, std::string_view column, std::size_t line) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError("column '" + std::string(column) + "': bad count '" + std::string(s) + "'", line);
    return v;
}

}  // namespace

std::string format_curve(const BerCurve& curve) {
    if (curve.points.empty()) throw ValidationError("write_curve: curve has no points");
    std::string out;
    for (const auto& line : format_runspec(curve.scheme, curve.config)) out += "# " + line + "\n";
    out += kCurveHeader;
    out += '\n';
    const std::string scheme(to_string(curve.scheme));
    for (const auto& p : curve.points) {
        out += scheme + ',' + format_double(p.snr_db) + ',' + std::to_string(p.total_bits) + ',' +
               std::to_string(p.bit_errors) + ',' + format_double(p.ber) + ',' + format_double(p.ci_low) + ',' +
               format_double(p.ci_high) + '\n';
    }
    return out;
}

BerCurve parse_curve(std::string_view text) {
    std::vector<RunSpecEntry> entries;
    std::optional<std::array<std::size_t, kColumns.size()>> col;  // column -> field position
    std::size_t n_fields = 0;
    std::optional<Scheme> row_scheme;
    std::vector<BerPoint> points;

    std::size_t lineno = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++lineno;
        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::string_view body = trim(line.substr(1));
            const auto eq = body.find('=');
            if (eq != std::string_view::npos)
                entries.emplace_back(std::string(trim(body.substr(0, eq))), std::string(trim(body.substr(eq + 1))));
            continue;
        }
        const auto fields = split(line, ',');
        if (!col) {
            std::array<std::size_t, kColumns.size()> pos{};
            for (std::size_t c = 0; c < kColumns.size(); ++c) {
                std::size_t i = 0;
                while (i < fields.size() && fields[i] != kColumns[c]) ++i;
                if (i == fields.size()) throw ParseError("missing column '" + std::string(kColumns[c]) + "'", lineno);
                pos[c] = i;
            }
            col = pos;
            n_fields = fields.size();
            continue;
        }
        if (fields.size() != n_fields) {
            throw ParseError("expected " + std::to_string(n_fields) + " fields, got " + std::to_string(fields.size()),
                             lineno);
        }
        const auto& c = *col;
        Scheme s;
        try {
            s = parse_scheme(fields[c[0]]);
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), lineno);
        }
        if (row_scheme && *row_scheme != s) throw ParseError("rows mix several schemes", lineno);
        row_scheme = s;

        BerPoint p;
        p.snr_db = field_real(fields[c[1]], kColumns[1], lineno);
        p.total_bits = field_count(fields[c[2]], kColumns[2], lineno);
        p.bit_errors = field_count(fields[c[3]], kColumns[3], lineno);
        p.ber = field_real(fields[c[4]], kColumns[4], lineno);
        p.ci_low = field_real(fields[c[5]], kColumns[5], lineno);
        p.ci_high = field_real(fields[c[6]], kColumns[6], lineno);

        if (p.total_bits == 0 || p.bit_errors > p.total_bits)
            throw ParseError("need 0 <= bit_errors <= total_bits and total_bits > 0", lineno);
        if (p.ber != static_cast<double>(p.bit_errors) / static_cast<double>(p.total_bits))
            throw ParseError("ber does not equal bit_errors / total_bits", lineno);
        if (!(p.ci_low <= p.ber && p.ber <= p.ci_high)) throw ParseError("confidence interval excludes ber", lineno);
        if (!points.empty() && !(p.snr_db > points.back().snr_db))
            throw ParseError("snr_db values must be strictly increasing", lineno);
        points.push_back(p);
    }
    if (!col) throw ParseError("missing header row", 0);
    if (points.empty()) throw ParseError("no data rows", 0);

    BerCurve curve;
    if (!entries.empty()) {
        RunSpec spec;
        try {
            spec = parse_runspec(entries);
        } catch (const ValidationError& e) {
            throw ParseError(std::string("configuration comments: ") + e.what(), 0);
        }
        if (spec.scheme != *row_scheme) throw ParseError("rows disagree with the recorded scheme", 0);
        curve.config = spec.config;
    } else {
        for (const auto& p : points) curve.config.snr_grid_db.push_back(p.snr_db);
    }
    curve.scheme = *row_scheme;
    curve.points = std::move(points);
    return curve;
}

void write_curve(const BerCurve& curve, const std::string& path) {
    const std::string text = format_curve(curve);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    f.close();
    if (!f) throw IoError("failed writing '" + path + "'");
}

BerCurve read_curve(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_curve(ss.str());
}

}  // namespace tasirs
