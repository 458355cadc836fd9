#include "gradecheck/modular.hpp"

#include <immintrin.h>

namespace gradecheck {

namespace {

// Montgomery reduction of four u64 products t -> four u32 (in the low halves
// of the u64 lanes). Exploits lo32(t + m*p) == 0: the carry into the high
// half is 1 exactly when lo32(t) != 0.
inline __m256i redc4(__m256i t, __m256i pv, __m256i ppv, __m256i lo32, __m256i one64) {
    __m256i mfull = _mm256_mul_epu32(t, ppv);          // lo32 = m
    __m256i mp = _mm256_mul_epu32(mfull, pv);          // m * p
    __m256i tlo = _mm256_and_si256(t, lo32);
    __m256i carry = _mm256_andnot_si256(_mm256_cmpeq_epi64(tlo, _mm256_setzero_si256()), one64);
    __m256i r = _mm256_add_epi64(_mm256_add_epi64(_mm256_srli_epi64(t, 32), _mm256_srli_epi64(mp, 32)), carry);
    // r < 2p, conditional subtract (values fit well inside signed range)
    __m256i sub = _mm256_sub_epi64(r, pv);
    __m256i keep = _mm256_cmpgt_epi64(pv, r);
    return _mm256_blendv_epi8(sub, r, keep);
}

void saxpy_avx2(std::uint32_t* row, const std::uint32_t* piv, std::size_t n,
                std::uint32_t f, std::uint32_t p, std::uint32_t pprime) {
    const __m256i fv = _mm256_set1_epi64x(f);
    const __m256i pv = _mm256_set1_epi64x(p);
    const __m256i ppv = _mm256_set1_epi64x(pprime);
    const __m256i lo32 = _mm256_set1_epi64x(0xffffffffULL);
    const __m256i one64 = _mm256_set1_epi64x(1);
    const __m256i p32 = _mm256_set1_epi32((int)p);
    const __m256i signbit = _mm256_set1_epi32((int)0x80000000u);

    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i v = _mm256_loadu_si256((const __m256i*)(piv + i));
        __m256i r = _mm256_loadu_si256((const __m256i*)(row + i));
        __m256i te = _mm256_mul_epu32(v, fv);
        __m256i to = _mm256_mul_epu32(_mm256_srli_epi64(v, 32), fv);
        __m256i pe = redc4(te, pv, ppv, lo32, one64);
        __m256i po = redc4(to, pv, ppv, lo32, one64);
        __m256i prod = _mm256_or_si256(pe, _mm256_slli_epi64(po, 32));
        // row - prod mod p, lanewise u32
        __m256i d = _mm256_sub_epi32(r, prod);
        __m256i under = _mm256_cmpgt_epi32(_mm256_xor_si256(prod, signbit), _mm256_xor_si256(r, signbit));
        d = _mm256_add_epi32(d, _mm256_and_si256(under, p32));
        _mm256_storeu_si256((__m256i*)(row + i), d);
    }
    for (; i < n; ++i) {
        std::uint32_t v = piv[i];
        if (!v) continue;
        std::uint32_t prod = MontCtx::redc((std::uint64_t)f * v, p, pprime);
        std::uint32_t r = row[i];
        row[i] = r >= prod ? r - prod : (std::uint32_t)(r + (std::uint64_t)p - prod);
    }
}

}  // namespace

const ModKernel* avx2_kernel() {
    static const ModKernel k{saxpy_avx2, "avx2"};
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    return &k;
}

}  // namespace gradecheck
