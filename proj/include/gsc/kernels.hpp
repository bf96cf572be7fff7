#pragma once

// Dense arithmetic kernels for the GF(p) elimination paths.
//
// Each kernel has a portable scalar reference implementation and an AVX2
// variant; the active set is chosen once at startup from CPU capabilities
// (override with GSC_KERNELS=scalar|avx2). The AVX2 fast path requires
// p < 2^16 so that a*x + y fits in 32 bits before Barrett reduction;
// larger moduli always take the scalar path.

#include <cstddef>
#include <cstdint>
#include <string>

namespace gsc::kernels {

struct Kernels {
    const char* name;
    // y[i] <- (y[i] + a*x[i]) mod p, all values canonical in [0,p)
    void (*axpy_mod)(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p);
    // y[i] <- (a*y[i]) mod p
    void (*scale_mod)(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p);
};

const Kernels& scalar_kernels();
const Kernels& avx2_kernels();  // valid only if avx2_supported()
bool avx2_supported();

// Active set: auto-selected, or forced by name ("scalar"/"avx2").
const Kernels& active_kernels();
void force_kernels(const std::string& name);

}  // namespace gsc::kernels
