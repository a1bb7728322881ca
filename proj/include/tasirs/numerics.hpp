#pragma once

#include <boost/container/small_vector.hpp>

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>

namespace tasirs {

using Complex = std::complex<double>;

// Dense row-major complex matrix sized for link-level work: channel rows,
// 2x2 codewords, N_REF-wide cascades. Small shapes live inline.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> row_major);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Complex> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Complex> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::span<Complex> entries() noexcept { return {data_.data(), data_.size()}; }
    std::span<const Complex> entries() const noexcept { return {data_.data(), data_.size()}; }

    // Copy of the given columns, in order.
    ComplexMatrix select_columns(std::span<const std::size_t> cols) const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    boost::container::small_vector<Complex, 8> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);

double frobenius_norm_sq(const ComplexMatrix& m);

// Throws ValidationError when a.cols() != b.rows().
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix hermitian(const ComplexMatrix& m);

// |det| of the Gram matrix below this is treated as singular.
inline constexpr double kGramSingularityTol = 1e-12;

// Inverse of H H^H for H with one or two rows. Throws SingularityError when
// |det(H H^H)| < kGramSingularityTol, ValidationError for more than two rows.
ComplexMatrix invert_gram(const ComplexMatrix& h);

}  // namespace tasirs
