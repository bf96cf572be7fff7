#include "gsc/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#define GSC_X86 1
#include <immintrin.h>
#else
#define GSC_X86 0
#endif

namespace gsc::kernels {

namespace {

void axpy_mod_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p) {
    if (a == 0) return;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t t = std::uint64_t(y[i]) + std::uint64_t(a) * x[i];
        y[i] = std::uint32_t(t % p);
    }
}

void scale_mod_scalar(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) y[i] = std::uint32_t((std::uint64_t(a) * y[i]) % p);
}

#if GSC_X86

// Barrett reduction of t < 2^32 with mu = floor(2^32/p): r = t - floor(t*mu/2^32)*p,
// then up to two conditional subtracts. Requires p < 2^16 so t = y + a*x < 2^32.
__attribute__((target("avx2"))) inline __m256i mulhi_epu32(__m256i a, __m256i b) {
    __m256i lo = _mm256_mul_epu32(a, b);                                    // lanes 0,2,4,6
    __m256i hi = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
    lo = _mm256_srli_epi64(lo, 32);
    return _mm256_blend_epi32(lo, hi, 0b10101010);
}

__attribute__((target("avx2"))) inline __m256i mullo32(__m256i a, __m256i b) { return _mm256_mullo_epi32(a, b); }

__attribute__((target("avx2"))) inline __m256i barrett32(__m256i t, __m256i vp, __m256i vmu) {
    __m256i q = mulhi_epu32(t, vmu);
    __m256i r = _mm256_sub_epi32(t, mullo32(q, vp));
    // r < 3p: two conditional subtracts (unsigned compare via min)
    r = _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
    r = _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
    return r;
}

__attribute__((target("avx2"))) void axpy_mod_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a,
                                                   std::size_t n, std::uint32_t p) {
    if (a == 0) return;
    if (p >= (1u << 16)) {
        axpy_mod_scalar(y, x, a, n, p);
        return;
    }
    const std::uint32_t mu = std::uint32_t((std::uint64_t(1) << 32) / p);
    const __m256i vp = _mm256_set1_epi32(int(p));
    const __m256i vmu = _mm256_set1_epi32(int(mu));
    const __m256i va = _mm256_set1_epi32(int(a));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i t = _mm256_add_epi32(vy, mullo32(va, vx));  // < p + (p-1)^2 < 2^32
        t = barrett32(t, vp, vmu);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), t);
    }
    axpy_mod_scalar(y + i, x + i, a, n - i, p);
}

__attribute__((target("avx2"))) void scale_mod_avx2(std::uint32_t* y, std::uint32_t a, std::size_t n,
                                                    std::uint32_t p) {
    if (p >= (1u << 16)) {
        scale_mod_scalar(y, a, n, p);
        return;
    }
    const std::uint32_t mu = std::uint32_t((std::uint64_t(1) << 32) / p);
    const __m256i vp = _mm256_set1_epi32(int(p));
    const __m256i vmu = _mm256_set1_epi32(int(mu));
    const __m256i va = _mm256_set1_epi32(int(a));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i t = barrett32(mullo32(va, vy), vp, vmu);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), t);
    }
    scale_mod_scalar(y + i, a, n - i, p);
}

#endif  // GSC_X86

const Kernels* g_active = nullptr;

const Kernels* autodetect() {
    if (const char* env = std::getenv("GSC_KERNELS")) {
        std::string s = env;
        if (s == "scalar") return &scalar_kernels();
        if (s == "avx2" && avx2_supported()) return &avx2_kernels();
    }
    return avx2_supported() ? &avx2_kernels() : &scalar_kernels();
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{"scalar", &axpy_mod_scalar, &scale_mod_scalar};
    return k;
}

bool avx2_supported() {
#if GSC_X86
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Kernels& avx2_kernels() {
#if GSC_X86
    static const Kernels k{"avx2", &axpy_mod_avx2, &scale_mod_avx2};
    return k;
#else
    return scalar_kernels();
#endif
}

const Kernels& active_kernels() {
    if (!g_active) g_active = autodetect();
    return *g_active;
}

void force_kernels(const std::string& name) {
    if (name == "scalar") g_active = &scalar_kernels();
    else if (name == "avx2") {
        if (!avx2_supported()) throw std::runtime_error("avx2 not supported on this CPU");
        g_active = &avx2_kernels();
    } else if (name == "auto") g_active = autodetect();
    else throw std::runtime_error("unknown kernel set: " + name);
}

}  // namespace gsc::kernels
