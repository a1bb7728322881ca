#pragma once

#include "tasirs/numerics.hpp"
#include "tasirs/random.hpp"

#include <cmath>
#include <complex>

namespace tasirs::test {

inline ComplexMatrix random_matrix(RandomSource& rng, std::size_t rows, std::size_t cols) {
    return sample_complex_gaussian(rng, rows, cols);
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    return m;
}

inline ComplexMatrix scaled(ComplexMatrix m, Complex s) {
    m *= s;
    return m;
}

inline bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace tasirs::test
