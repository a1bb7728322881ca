#include "tasirs/numerics.hpp"

#include "tasirs/errors.hpp"
#include "tasirs/kernels.hpp"

#include <cmath>
#include <string>

namespace tasirs {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> row_major)
    : rows_(rows), cols_(cols), data_(row_major.begin(), row_major.end()) {
    if (data_.size() != rows * cols) {
        throw ValidationError("ComplexMatrix: " + std::to_string(row_major.size()) + " entries for a " +
                              std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::select_columns(std::span<const std::size_t> cols) const {
    ComplexMatrix out(rows_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= cols_) throw ValidationError("select_columns: column index out of range");
        for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, cols[j]);
    }
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ValidationError("matrix add: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ValidationError("matrix subtract: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& v : data_) v *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }

double frobenius_norm_sq(const ComplexMatrix& m) { return kernels::sum_abs2(m.entries()); }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ValidationError("matmul: inner dimensions differ (" + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                              std::to_string(b.cols()) + ")");
    }
    ComplexMatrix c(a.rows(), b.cols());
    const auto& k = kernels::active();
    // Row-oriented: C[i,:] += A[i,k] * B[k,:] keeps every access contiguous.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex* out = c.row(i).data();
        for (std::size_t j = 0; j < a.cols(); ++j) k.axpy(a(i, j), b.row(j).data(), out, b.cols());
    }
    return c;
}

ComplexMatrix hermitian(const ComplexMatrix& m) {
    ComplexMatrix h(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) h(c, r) = std::conj(m(r, c));
    return h;
}

ComplexMatrix invert_gram(const ComplexMatrix& h) {
    if (h.rows() == 0 || h.rows() > 2) {
        throw ValidationError("invert_gram: only 1 or 2 rows supported, got " + std::to_string(h.rows()));
    }
    const ComplexMatrix gram = matmul(h, hermitian(h));
    if (gram.rows() == 1) {
        const Complex det = gram(0, 0);
        if (std::abs(det) < kGramSingularityTol) throw SingularityError("invert_gram: singular 1x1 Gram matrix");
        return ComplexMatrix(1, 1, {1.0 / det});
    }
    const Complex det = gram(0, 0) * gram(1, 1) - gram(0, 1) * gram(1, 0);
    if (std::abs(det) < kGramSingularityTol) throw SingularityError("invert_gram: singular 2x2 Gram matrix");
    const Complex inv = 1.0 / det;
    return ComplexMatrix(2, 2, {gram(1, 1) * inv, -gram(0, 1) * inv, -gram(1, 0) * inv, gram(0, 0) * inv});
}

}  // namespace tasirs
