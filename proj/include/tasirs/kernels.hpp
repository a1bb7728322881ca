#pragma once

// Vector kernels behind the small complex linear algebra.
//
// Every kernel has a scalar reference implementation. An AVX2/FMA variant is
// compiled when the toolchain targets x86-64 and is selected at runtime if the
// CPU supports it. Variants agree to rounding, not bit-for-bit: summation order
// and fused multiply-adds differ. Set TASIRS_KERNELS=scalar in the environment
// to force the reference path.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace tasirs::kernels {

using cplx = std::complex<double>;

struct KernelTable {
    std::string_view name;
    // sum |x_i|^2
    double (*sum_abs2)(const cplx* x, std::size_t n);
    // sum a_i * b_i
    cplx (*dot)(const cplx* a, const cplx* b, std::size_t n);
    // sum conj(a_i) * b_i
    cplx (*dotc)(const cplx* a, const cplx* b, std::size_t n);
    // y_i += alpha * x_i
    void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
    // out_i = a_i * b_i
    void (*hadamard)(const cplx* a, const cplx* b, cplx* out, std::size_t n);
};

const KernelTable& scalar_table() noexcept;

// nullptr when the AVX2 variant was not built or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table() noexcept;

// The table chosen for this process; fixed after the first call.
const KernelTable& active() noexcept;

inline double sum_abs2(std::span<const cplx> x) { return active().sum_abs2(x.data(), x.size()); }

cplx dot(std::span<const cplx> a, std::span<const cplx> b);
cplx dotc(std::span<const cplx> a, std::span<const cplx> b);
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);
void hadamard(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);

}  // namespace tasirs::kernels
