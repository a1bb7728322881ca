#pragma once

#include "tasirs/numerics.hpp"

#include <array>
#include <cstdint>
#include <span>

namespace tasirs {

using Bit = std::uint8_t;

// Four information bits carried by one Alamouti block: (b0 b1) -> x1, (b2 b3) -> x2.
using BitBlock = std::array<Bit, 4>;

// Gray-mapped unit-energy 4-QAM:
//   00 -> (+1+j)/sqrt2   01 -> (+1-j)/sqrt2   10 -> (-1+j)/sqrt2   11 -> (-1-j)/sqrt2
// First bit selects the sign of the real part, second bit the imaginary part.
// Throws ValidationError unless exactly two bits in {0,1} are given.
Complex qam4_map(std::span<const Bit> bits);

// Quadrant decision, inverse of qam4_map for any positive scaling. Points on
// an axis fall to the nonnegative half-plane (bit 0).
std::array<Bit, 2> qam4_demap(Complex z);

// X = [[x1, -conj(x2)], [x2, conj(x1)]]: row = antenna, column = symbol period.
ComplexMatrix alamouti_encode(Complex x1, Complex x2);

struct DecisionPair {
    Complex x1;
    Complex x2;
    double channel_gain = 0.0;  // |h1|^2 + |h2|^2, summed over receive antennas
};

// Linear Alamouti combining for one receive antenna with effective channel
// (h1, h2) and the two received samples.
DecisionPair alamouti_combine(std::span<const Complex> h_eff, Complex y1, Complex y2);

// Multi-antenna receiver: per-row combining summed over rows of h_eff (N_r x 2)
// and y (N_r x 2).
DecisionPair alamouti_combine(const ComplexMatrix& h_eff, const ComplexMatrix& y);

// No gain normalization: a positive real scale cannot move a 4-QAM point
// across a quadrant boundary.
BitBlock detect_pair(const DecisionPair& d);

}  // namespace tasirs
