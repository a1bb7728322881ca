#include "tasirs/tx.hpp"

#include "tasirs/errors.hpp"
#include "tasirs/kernels.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace tasirs {
namespace {

constexpr double kEnergyFactor = std::numbers::sqrt2 / 2.0;  // sqrt(E_s/2), E_s = 1

// Advance a 0-based increasing combination to its lexicographic successor.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void check_combination_args(std::size_t nt, std::size_t na) {
    if (na < 1 || na > nt) {
        throw ValidationError("cannot choose " + std::to_string(na) + " of " + std::to_string(nt) + " antennas");
    }
}

}  // namespace

std::vector<std::vector<std::size_t>> enumerate_combinations(std::size_t nt, std::size_t na) {
    check_combination_args(nt, na);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(na);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    do {
        auto& c = out.emplace_back(idx);
        for (auto& v : c) ++v;
    } while (next_combination(idx, nt));
    return out;
}

std::vector<std::size_t> SelectionResult::columns() const {
    std::vector<std::size_t> cols(antennas);
    for (auto& c : cols) --c;
    return cols;
}

SelectionResult select_antennas(const ComplexMatrix& h, std::size_t na) {
    if (h.empty()) throw ValidationError("select_antennas: empty channel");
    check_combination_args(h.cols(), na);

    // ||H_sel||_F^2 is the sum of the selected column energies.
    boost::container::small_vector<double, 8> col_energy(h.cols(), 0.0);
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c = 0; c < h.cols(); ++c) col_energy[c] += std::norm(h(r, c));

    std::vector<std::size_t> idx(na);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    SelectionResult best{{}, -1.0};
    do {
        double metric = 0.0;
        for (auto c : idx) metric += col_energy[c];
        if (metric > best.metric) best = {idx, metric};
    } while (next_combination(idx, h.cols()));
    for (auto& a : best.antennas) ++a;
    return best;
}

ZfPrecoder zf_precoder(const ComplexMatrix& h_sel, std::size_t nt_total) {
    if (h_sel.cols() != 2) throw ValidationError("zf_precoder: expected N_r x 2 selected channel");
    if (nt_total < 1) throw ValidationError("zf_precoder: N_t must be >= 1");
    ZfPrecoder p;
    p.p_zf = matmul(hermitian(h_sel), invert_gram(h_sel));
    // trace(P P^H) = ||P||_F^2
    const double tr = frobenius_norm_sq(p.p_zf);
    p.beta = std::sqrt(static_cast<double>(nt_total) / tr);
    const Complex d0 = p.p_zf(0, 0);
    const Complex d1 = p.p_zf.cols() == 1 ? p.p_zf(1, 0) : p.p_zf(1, 1);
    const std::array<Complex, 2> diag{p.beta * d0, p.beta * d1};
    p.p_diag = ComplexMatrix::diagonal(diag);
    return p;
}

double UlaConfig::wavenumber() const { return 2.0 * std::numbers::pi / lambda_m; }

void UlaConfig::validate() const {
    if (lt < 1) throw ValidationError("ULA needs at least one element (lt >= 1)");
    if (!(lambda_m > 0.0)) throw ValidationError("wavelength must be positive");
    if (!(d_m > 0.0 && d_m <= lambda_m / 2.0)) throw ValidationError("element spacing d must satisfy 0 < d <= lambda/2");
}

std::vector<Complex> array_response(double theta, const UlaConfig& cfg) {
    cfg.validate();
    const double delta = cfg.wavenumber() * cfg.d_m * std::sin(theta);
    std::vector<Complex> a(cfg.lt);
    for (std::size_t n = 0; n < cfg.lt; ++n) a[n] = std::polar(1.0, static_cast<double>(n) * delta);
    return a;
}

std::vector<Complex> ula_weight(double theta_aod, const UlaConfig& cfg) {
    auto w = array_response(theta_aod, cfg);
    const double s = 1.0 / std::sqrt(static_cast<double>(cfg.lt));
    for (auto& v : w) v *= s;
    return w;
}

Complex beam_gain(double steer, double toward, const UlaConfig& cfg) {
    const auto w = ula_weight(steer, cfg);
    const auto a = array_response(toward, cfg);
    return kernels::dotc(w, a);
}

EffectiveLink tas_effective_link(const ComplexMatrix& h_sel) { return {h_sel, kEnergyFactor}; }

EffectiveLink zf_effective_link(const ComplexMatrix& h_sel, const ZfPrecoder& prec) {
    return {matmul(h_sel, prec.p_diag), kEnergyFactor};
}

EffectiveLink abf_effective_link(const ComplexMatrix& h_sel, const UlaConfig& ula, std::array<double, 2> theta_aods) {
    if (h_sel.cols() != 2) throw ValidationError("abf_effective_link: expected N_r x 2 selected channel");
    const std::array<Complex, 2> g{beam_gain(theta_aods[0], theta_aods[0], ula),
                                   beam_gain(theta_aods[1], theta_aods[1], ula)};
    ComplexMatrix h = h_sel;
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t i = 0; i < 2; ++i) h(r, i) *= g[i];
    return {std::move(h), kEnergyFactor};
}

EffectiveLink hbf_effective_link(const ComplexMatrix& h_sel, const UlaConfig& ula, std::array<double, 2> theta_aods,
                                 const ZfPrecoder& prec) {
    EffectiveLink link = abf_effective_link(h_sel, ula, theta_aods);
    for (std::size_t r = 0; r < link.h_eff.rows(); ++r)
        for (std::size_t i = 0; i < 2; ++i) link.h_eff(r, i) *= prec.p_diag(i, i);
    return link;
}

}  // namespace tasirs
