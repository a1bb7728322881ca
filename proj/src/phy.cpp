#include "tasirs/phy.hpp"

#include "tasirs/errors.hpp"

#include <numbers>

namespace tasirs {

Complex qam4_map(std::span<const Bit> bits) {
    if (bits.size() != 2) throw ValidationError("qam4_map: expected 2 bits, got " + std::to_string(bits.size()));
    if (bits[0] > 1 || bits[1] > 1) throw ValidationError("qam4_map: bits must be 0 or 1");
    constexpr double a = std::numbers::sqrt2 / 2.0;
    return {bits[0] ? -a : a, bits[1] ? -a : a};
}

std::array<Bit, 2> qam4_demap(Complex z) {
    return {static_cast<Bit>(z.real() < 0.0), static_cast<Bit>(z.imag() < 0.0)};
}

ComplexMatrix alamouti_encode(Complex x1, Complex x2) {
    return ComplexMatrix(2, 2, {x1, -std::conj(x2), x2, std::conj(x1)});
}

DecisionPair alamouti_combine(std::span<const Complex> h_eff, Complex y1, Complex y2) {
    if (h_eff.size() != 2) throw ValidationError("alamouti_combine: effective channel must have 2 entries");
    const Complex h1 = h_eff[0], h2 = h_eff[1];
    return {std::conj(h1) * y1 + h2 * std::conj(y2),
            std::conj(h2) * y1 - h1 * std::conj(y2),
            std::norm(h1) + std::norm(h2)};
}

DecisionPair alamouti_combine(const ComplexMatrix& h_eff, const ComplexMatrix& y) {
    if (h_eff.cols() != 2 || y.cols() != 2 || h_eff.rows() != y.rows()) {
        throw ValidationError("alamouti_combine: expected N_r x 2 channel and received block of equal rows");
    }
    DecisionPair sum;
    for (std::size_t r = 0; r < h_eff.rows(); ++r) {
        const DecisionPair d = alamouti_combine(h_eff.row(r), y(r, 0), y(r, 1));
        sum.x1 += d.x1;
        sum.x2 += d.x2;
        sum.channel_gain += d.channel_gain;
    }
    return sum;
}

BitBlock detect_pair(const DecisionPair& d) {
    const auto a = qam4_demap(d.x1);
    const auto b = qam4_demap(d.x2);
    return {a[0], a[1], b[0], b[1]};
}

}  // namespace tasirs
