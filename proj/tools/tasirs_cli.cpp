// tasirs: BER simulation and gain extraction for TAS-OSTBC links.
//
//   tasirs simulate --scheme tas-ostbc-hbf --snr 0:1:20 --lt 8 --out hbf8.csv
//   tasirs gains --base tas.csv --curves abf2.csv abf4.csv --ber 1e-3

#include "tasirs/curve_io.hpp"
#include "tasirs/errors.hpp"
#include "tasirs/gains.hpp"
#include "tasirs/kernels.hpp"
#include "tasirs/runspec.hpp"
#include "tasirs/sim.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum ExitCode { kOk = 0, kValidation = 1, kIo = 2, kRange = 3 };

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw tasirs::IoError("cannot open config '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run_simulate(const std::string& config_path, const std::vector<tasirs::RunSpecEntry>& flags, unsigned workers,
                 bool quiet) {
    std::vector<tasirs::RunSpecEntry> entries;
    if (!config_path.empty()) entries = tasirs::runspec_entries(slurp(config_path));
    entries.insert(entries.end(), flags.begin(), flags.end());
    const tasirs::RunSpec spec = tasirs::parse_runspec(entries);

    if (!quiet) {
        std::fprintf(stderr, "%s: %zu SNR points x %llu frames (kernels: %s, workers: %u)\n",
                     std::string(tasirs::to_string(spec.scheme)).c_str(), spec.config.snr_grid_db.size(),
                     static_cast<unsigned long long>(spec.config.total_frames()),
                     std::string(tasirs::kernels::active().name).c_str(), workers);
    }
    const tasirs::BerCurve curve = tasirs::run_sweep(spec.scheme, spec.config, {workers});

    if (spec.out_path.empty() || spec.out_path == "-") {
        std::cout << tasirs::format_curve(curve);
    } else {
        tasirs::write_curve(curve, spec.out_path);
        if (!quiet) {
            for (const auto& p : curve.points)
                std::fprintf(stderr, "  %7.2f dB  BER %.4e  (%llu / %llu)\n", p.snr_db, p.ber,
                             static_cast<unsigned long long>(p.bit_errors),
                             static_cast<unsigned long long>(p.total_bits));
            std::fprintf(stderr, "wrote %s\n", spec.out_path.c_str());
        }
    }
    return kOk;
}

int run_gains(const std::string& base, const std::vector<std::string>& curves, double ber,
              const std::string& csv_path) {
    const auto rows = tasirs::gains_report(curves, base, ber);
    std::cout << tasirs::render_gains_table(rows, ber);
    if (!csv_path.empty()) {
        std::ofstream f(csv_path, std::ios::binary | std::ios::trunc);
        if (!f) throw tasirs::IoError("cannot open '" + csv_path + "' for writing");
        f << tasirs::render_gains_csv(rows);
        if (!f) throw tasirs::IoError("failed writing '" + csv_path + "'");
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo BER simulator for TAS-OSTBC links with ZF, beamforming and IRS"};
    app.require_subcommand(1);

    // simulate: each flag becomes a run-spec entry so file and flags share one parser.
    auto* sim = app.add_subcommand("simulate", "Run a BER sweep and write a curve file");
    std::string config_path;
    unsigned workers = 1;
    bool quiet = false;
    struct FlagSpec {
        const char* flag;
        const char* key;
        const char* help;
    };
    const FlagSpec flag_specs[] = {
        {"--scheme", "scheme", "siso|alamouti|tas-ostbc|tas-ostbc-zf|tas-ostbc-abf|tas-ostbc-hbf|irs-tas-ostbc-hbf"},
        {"--snr", "snr", "SNR grid in dB: start:step:stop or a comma list"},
        {"--frames", "frames", "frames per packet (default 100000)"},
        {"--packets", "packets", "packets (default 10)"},
        {"--seed", "seed", "64-bit seed (default 1)"},
        {"--nt", "nt", "transmit antennas (default 4)"},
        {"--nr", "nr", "receive antennas (default 1)"},
        {"--lt", "lt", "array elements per transmit antenna (default 1)"},
        {"--nref", "nref", "IRS reflecting elements (default 16)"},
        {"--alpha", "alpha", "IRS amplitude coefficient in (0,1] (default 1)"},
        {"--phase", "phase", "IRS phases: uniform|zero|coherent (default uniform)"},
        {"--lambda", "lambda", "wavelength in metres (default 0.005)"},
        {"--d", "d", "element spacing in metres (default lambda/2)"},
        {"--out", "out", "output CSV path ('-' or omitted: stdout)"},
    };
    std::vector<std::pair<const char*, std::string>> flag_values;
    flag_values.reserve(std::size(flag_specs));
    for (const auto& f : flag_specs) {
        auto& slot = flag_values.emplace_back(f.key, std::string{});
        sim->add_option(f.flag, slot.second, f.help);
    }
    sim->add_option("--config", config_path, "key=value file with the same keys as the flags");
    sim->add_option("--workers", workers, "worker threads (results do not depend on this)")->check(CLI::PositiveNumber);
    sim->add_flag("-q,--quiet", quiet, "no progress output");

    auto* gains = app.add_subcommand("gains", "SNR gains of curves over a base curve at a target BER");
    std::string base_path, csv_path;
    std::vector<std::string> curve_paths;
    double target_ber = 1e-3;
    gains->add_option("--base", base_path, "base curve file")->required();
    gains->add_option("--curves", curve_paths, "curve files to compare")->required();
    gains->add_option("--ber", target_ber, "target BER (default 1e-3)");
    gains->add_option("--csv", csv_path, "also write label,gain_db CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kValidation;
    }

    try {
        if (sim->parsed()) {
            std::vector<tasirs::RunSpecEntry> entries;
            for (const auto& [key, value] : flag_values)
                if (sim->count(std::string("--") + key) > 0) entries.emplace_back(key, value);
            return run_simulate(config_path, entries, workers, quiet);
        }
        return run_gains(base_path, curve_paths, target_ber, csv_path);
    } catch (const tasirs::RangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRange;
    } catch (const tasirs::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    }
}
