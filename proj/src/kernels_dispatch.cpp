#include "tasirs/kernels.hpp"
#include "tasirs/errors.hpp"

#include <cstdlib>
#include <string>

namespace tasirs::kernels {

#if defined(TASIRS_HAVE_AVX2)
const KernelTable& avx2_table_unchecked() noexcept;
#endif

const KernelTable* avx2_table() noexcept {
#if defined(TASIRS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported ? &avx2_table_unchecked() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() noexcept {
    static const KernelTable& chosen = [&]() -> const KernelTable& {
        const char* env = std::getenv("TASIRS_KERNELS");
        if (env && std::string(env) == "scalar") return scalar_table();
        if (const KernelTable* t = avx2_table()) return *t;
        return scalar_table();
    }();
    return chosen;
}

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) throw ValidationError("dot: length mismatch");
    return active().dot(a.data(), b.data(), a.size());
}

cplx dotc(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) throw ValidationError("dotc: length mismatch");
    return active().dotc(a.data(), b.data(), a.size());
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    if (x.size() != y.size()) throw ValidationError("axpy: length mismatch");
    active().axpy(alpha, x.data(), y.data(), x.size());
}

void hadamard(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
    if (a.size() != b.size() || a.size() != out.size()) throw ValidationError("hadamard: length mismatch");
    active().hadamard(a.data(), b.data(), out.data(), a.size());
}

}  // namespace tasirs::kernels
