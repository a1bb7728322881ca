// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include "tasirs/channel.hpp"
#include "tasirs/curve_io.hpp"
#include "tasirs/gains.hpp"
#include "tasirs/kernels.hpp"
#include "tasirs/phy.hpp"
#include "tasirs/runspec.hpp"
#include "tasirs/sim.hpp"
#include "tasirs/tx.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

using namespace tasirs;

namespace {

constexpr std::uint64_t kFrames = 200000;

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<double> grid(double lo, double hi, double step = 1.0) {
    std::vector<double> g;
    for (double s = lo; s <= hi + 1e-9; s += step) g.push_back(s);
    return g;
}

SimConfig base_config(std::vector<double> snr, std::uint64_t frames = kFrames) {
    SimConfig cfg;
    cfg.snr_grid_db = std::move(snr);
    cfg.frames_per_packet = frames;
    cfg.packets = 1;
    return cfg;
}

BerCurve sweep(Scheme s, const SimConfig& cfg) { return run_sweep(s, cfg, {workers()}); }

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("%s [%d] %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
}

// Diversity-2 closed form: QPSK over two Rayleigh branches, each at half the
// transmit power, combined by MRC.
double alamouti_closed_form(double snr_db) {
    const double g = std::pow(10.0, snr_db / 10.0) / 4.0;
    const double mu = std::sqrt(g / (1.0 + g));
    return std::pow((1.0 - mu) / 2.0, 2) * (2.0 + mu);
}

Outcome alamouti_oracle() {
    const BerCurve c = sweep(Scheme::Alamouti2x1, base_config({0, 4, 8, 12, 16}));
    Outcome o{true, ""};
    for (const auto& p : c.points) {
        const double ref = alamouti_closed_form(p.snr_db);
        const double sigma = std::sqrt(ref * (1 - ref) / static_cast<double>(p.total_bits));
        const double z = (p.ber - ref) / sigma;
        o.pass = o.pass && std::abs(z) <= 3.0;
        o.detail += fmt("%gdB %.3g/%.3g z=%+.2f; ", p.snr_db, p.ber, ref, z);
    }
    return o;
}

Outcome abf_exact_shift() {
    const double shift = 6.0206;  // 10 log10(4), rounded
    const std::vector<double> lo = {0, 2, 4, 6, 8};
    std::vector<double> hi;
    for (double s : lo) hi.push_back(s + shift);
    Outcome o{true, ""};
    std::uint64_t compared = 0, mismatched = 0;
    for (std::uint64_t seed : {1, 2, 3}) {
        SimConfig four = base_config(lo), one = base_config(hi);
        four.seed = one.seed = seed;
        four.lt = 4;
        one.lt = 1;
        const BerCurve a = sweep(Scheme::TasOstbcAbf, four), b = sweep(Scheme::TasOstbcAbf, one);
        for (std::size_t i = 0; i < lo.size(); ++i) {
            ++compared;
            if (a.points[i].bit_errors != b.points[i].bit_errors) ++mismatched;
        }
    }
    o.pass = mismatched == 0;
    o.detail = fmt("error counts equal at %llu/%llu (seed, SNR) pairs, shift %.4f dB; gains at 1e-3:",
                   static_cast<unsigned long long>(compared - mismatched), static_cast<unsigned long long>(compared),
                   shift);

    SimConfig base = base_config(grid(8, 14));
    const BerCurve ref = sweep(Scheme::TasOstbcAbf, base);
    for (std::size_t lt : {2, 4, 8}) {
        const double expected = 10.0 * std::log10(static_cast<double>(lt));
        SimConfig cfg = base_config(grid(std::floor(11.2 - expected) - 3, std::floor(11.2 - expected) + 3));
        cfg.lt = lt;
        const double g = extract_gain(ref, sweep(Scheme::TasOstbcAbf, cfg), 1e-3);
        o.pass = o.pass && std::abs(g - expected) <= 0.3;
        o.detail += fmt(" L_T=%zu %.2f dB (target %.2f +/- 0.3);", lt, g, expected);
    }
    return o;
}

double zf_gain_db = NAN;

Outcome zf_gain() {
    const BerCurve tas = sweep(Scheme::TasOstbc, base_config(grid(8, 14)));
    const BerCurve zf = sweep(Scheme::TasOstbcZf, base_config(grid(5, 11)));
    zf_gain_db = extract_gain(tas, zf, 1e-3);
    return {std::abs(zf_gain_db - 3.4) <= 0.6, fmt("gain at 1e-3 = %.2f dB (target 3.4 +/- 0.6)", zf_gain_db)};
}

bool separated(const BerPoint& a, const BerPoint& b) { return a.ci_high < b.ci_low || b.ci_high < a.ci_low; }

Outcome hbf_vs_abf() {
    Outcome o{true, ""};
    int separated_points = 0, violations = 0;
    for (std::size_t lt : {2, 4, 8}) {
        const double top = std::floor(11.2 - 10.0 * std::log10(static_cast<double>(lt))) + 2;
        SimConfig cfg = base_config(grid(top - 8, top));
        cfg.lt = lt;
        const BerCurve abf = sweep(Scheme::TasOstbcAbf, cfg);
        const BerCurve hbf = sweep(Scheme::TasOstbcHbf, cfg);
        for (std::size_t i = 0; i < abf.points.size(); ++i) {
            if (!separated(abf.points[i], hbf.points[i])) continue;
            ++separated_points;
            if (!(hbf.points[i].ber < abf.points[i].ber)) ++violations;
        }
        const double gap = extract_gain(abf, hbf, 1e-3);
        const bool ok = std::abs(gap - zf_gain_db) <= 0.5;
        o.pass = o.pass && ok;
        o.detail += fmt("L_T=%zu gap %.2f dB; ", lt, gap);
    }
    o.pass = o.pass && separated_points > 0 && violations == 0;
    o.detail += fmt("ZF gain %.2f dB (+/- 0.5); HBF below ABF at %d/%d separated points", zf_gain_db,
                    separated_points - violations, separated_points);
    return o;
}

Outcome irs_gain() {
    Outcome o{true, ""};
    SimConfig hcfg = base_config(grid(-9, -2));
    hcfg.lt = 8;
    const BerCurve hbf = sweep(Scheme::TasOstbcHbf, hcfg);
    struct Case {
        std::size_t nref;
        double lo, hi, target;
    };
    for (const Case& c : {Case{4, -14, -6, 6.0}, Case{16, -21, -14, 12.0}}) {
        SimConfig cfg = base_config(grid(c.lo, c.hi));
        cfg.lt = 8;
        cfg.nref = c.nref;
        const double g = extract_gain(hbf, sweep(Scheme::IrsTasOstbcHbf, cfg), 1e-2);
        const bool ok = std::abs(g - c.target) <= 1.0;
        o.pass = o.pass && ok;
        o.detail += fmt("N_REF=%zu %.2f dB (target %.1f +/- 1.0)%s; ", c.nref, g, c.target, ok ? "" : " MISS");
    }
    // Larger surfaces: only the second moment of the effective channel.
    for (std::size_t nref : {64, 256}) {
        for (double alpha : {1.0, 0.8}) {
            double acc = 0.0;
            constexpr int frames = 20000;
            for (int f = 0; f < frames; ++f) {
                RandomSource rng(1, static_cast<std::uint64_t>(f));
                const IrsChannels irs = gen_irs_channels(rng, 1, nref, 4);
                acc += frobenius_norm_sq(effective_irs_channel(irs, {alpha, sample_uniform_phase(rng, nref)}).h) / 4;
            }
            const double ratio = acc / frames / (alpha * alpha * static_cast<double>(nref));
            const bool ok = std::abs(ratio - 1.0) <= 0.05;
            o.pass = o.pass && ok;
            o.detail += fmt("var/(a^2 N)=%.4f @N=%zu,a=%.1f; ", ratio, nref, alpha);
        }
    }
    return o;
}

double log_slope(const BerCurve& c, double hi_ber, double lo_ber, const char* label) {
    const double s1 = snr_at_ber(c, hi_ber, label), s2 = snr_at_ber(c, lo_ber, label);
    return (std::log10(hi_ber) - std::log10(lo_ber)) / (s2 - s1);
}

Outcome diversity_ordering() {
    const BerCurve tas = sweep(Scheme::TasOstbc, base_config(grid(5, 17)));
    const BerCurve ala = sweep(Scheme::Alamouti2x1, base_config(grid(9, 25)));
    const double st = log_slope(tas, 1e-2, 1e-4, "tas-ostbc"), sa = log_slope(ala, 1e-2, 1e-4, "alamouti");
    return {st >= 1.5 * sa, fmt("slope TAS %.4f, Alamouti %.4f decades/dB, ratio %.3f (need >= 1.5)", st, sa, st / sa)};
}

Outcome properties() {
    int bad = 0;
    auto expect = [&](bool ok) { bad += ok ? 0 : 1; };

    const auto combos = enumerate_combinations(4, 2);
    for (std::uint64_t s = 0; s < 1000; ++s) {
        RandomSource rng(500, s);
        const ComplexMatrix h = sample_complex_gaussian(rng, 1, 4);
        double best = -1.0;
        std::vector<std::size_t> arg;
        for (const auto& c : combos) {
            const std::vector<std::size_t> cols{c[0] - 1, c[1] - 1};
            const double m = frobenius_norm_sq(h.select_columns(cols));
            if (m > best) best = m, arg = c;
        }
        const SelectionResult sel = select_antennas(h, 2);
        expect(sel.antennas == arg);

        const ComplexMatrix hs = h.select_columns(sel.columns());
        const ZfPrecoder p = zf_precoder(hs, 4);
        expect(std::abs(matmul(hs, p.p_zf)(0, 0) - 1.0) <= 1e-10);
        expect(std::abs(p.beta * p.beta * frobenius_norm_sq(p.p_zf) - 4.0) <= 1e-10);

        const Complex x1 = sample_cn01(rng), x2 = sample_cn01(rng);
        const ComplexMatrix x = alamouti_encode(x1, x2);
        const Complex cross = x(0, 0) * std::conj(x(0, 1)) + x(1, 0) * std::conj(x(1, 1));
        expect(std::abs(cross) <= 1e-12);

        const std::size_t nref = 1 + s % 32;
        const IrsChannels irs = gen_irs_channels(rng, 1, nref, 4);
        const IrsPhaseConfig ph{0.9, sample_uniform_phase(rng, nref)};
        const ComplexMatrix heff = effective_irs_channel(irs, ph).h;
        for (std::size_t t = 0; t < 4; ++t) {
            Complex sum = 0.0;
            for (std::size_t r = 0; r < nref; ++r) sum += irs.g(0, r) * ph.alpha * std::polar(1.0, ph.thetas[r]) * irs.h(r, t);
            expect(std::abs(heff(0, t) - sum) <= 1e-12);
        }
    }

    for (std::size_t lt : {1, 2, 4, 8, 16}) {
        const UlaConfig cfg{lt, 0.0025, 0.005};
        for (double theta = -1.5; theta <= 1.5; theta += 0.25) {
            expect(std::abs(beam_gain(theta, theta, cfg) - std::sqrt(static_cast<double>(lt))) <= 1e-12);
        }
    }

    for (int i = 0; i < 4; ++i) {
        const std::array<Bit, 2> b{Bit(i >> 1), Bit(i & 1)};
        expect(qam4_demap(qam4_map(b)) == b);
    }

    const Interval w = wilson_ci(10, 1000, 1.96);
    expect(std::abs(w.low - 0.0054406953092705563) <= 1e-15 && std::abs(w.high - 0.018309665305392155) <= 1e-15);
    const Interval w0 = wilson_ci(0, 100, 1.96);
    expect(w0.low == 0.0 && std::abs(w0.high - 0.036994807476001911) <= 1e-15);

    return {bad == 0, fmt("%d violations (kernels: %s)", bad, std::string(kernels::active().name).c_str())};
}

Outcome reproducibility() {
    const RunSpec spec = parse_runspec("scheme=irs-tas-ostbc-hbf\nsnr=-12:2:-4\nframes=5000\npackets=4\n"
                                       "seed=2718\nlt=8\nnref=16\n");
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "tasirs_acceptance";
    fs::create_directories(dir);
    auto run = [&](unsigned w, const std::string& name) {
        const std::string path = (dir / name).string();
        write_curve(run_sweep(spec.scheme, spec.config, {w}), path);
        std::ifstream in(path, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string a = run(1, "w1.csv"), b = run(8, "w8.csv"), c = run(1, "w1_again.csv");
    fs::remove_all(dir);
    const bool same = !a.empty() && a == b && a == c;
    return {same, fmt("%zu-byte curve files %s across workers 1, 8 and a re-run", a.size(),
                      same ? "identical" : "differ")};
}

}  // namespace

int main() {
    std::printf("acceptance: %llu frames/point, %u worker(s), kernels %s\n",
                static_cast<unsigned long long>(kFrames), workers(), std::string(kernels::active().name).c_str());
    report(1, "Alamouti closed-form oracle", alamouti_oracle);
    report(2, "ABF exact shift and array gains", abf_exact_shift);
    report(3, "ZF precoding gain", zf_gain);
    report(4, "HBF beats ABF by the ZF gain", hbf_vs_abf);
    report(5, "IRS gain", irs_gain);
    report(6, "diversity ordering", diversity_ordering);
    report(7, "property suites", properties);
    report(8, "reproducibility", reproducibility);
    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
