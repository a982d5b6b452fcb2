#include "torspect/kernels.hpp"

#ifdef TORSPECT_HAVE_AVX2_TU

#include <immintrin.h>

namespace torspect::kernels {

namespace {

/* Lanes are widened to 64 bits.  All multiplications go through
 * _mm256_mul_epu32, which is exact since both operands stay below 2^32. */

void axpy_acc_avx2(uint64_t* acc, const uint32_t* row, uint64_t c, std::size_t n)
{
    const __m256i vc = _mm256_set1_epi64x(static_cast<long long>(c));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m128i r32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(row + i));
        __m256i r64 = _mm256_cvtepu32_epi64(r32);
        __m256i prod = _mm256_mul_epu32(r64, vc);
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), _mm256_add_epi64(a, prod));
    }
    for (; i < n; ++i)
        acc[i] += c * row[i];
}

/* Barrett step for 64-bit lanes holding x < 2^52: q = floor(x/p) via exact
 * u64<->double conversion (the 2^52 magic-constant trick), then up to two
 * corrections to land in [0, p). */
struct Barrett {
    __m256i vp, vpm1, magic_i;
    __m256d inv, magic_d;
    explicit Barrett(uint32_t p)
    {
        vp = _mm256_set1_epi64x(p);
        vpm1 = _mm256_set1_epi64x(static_cast<long long>(p) - 1);
        magic_d = _mm256_set1_pd(0x1.0p52);
        magic_i = _mm256_castpd_si256(magic_d);
        inv = _mm256_set1_pd(1.0 / p);
    }
    __m256i reduce(__m256i x) const
    {
        __m256d xd = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(x, magic_i)), magic_d);
        __m256d qd = _mm256_floor_pd(_mm256_mul_pd(xd, inv));
        __m256i q = _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(qd, magic_d)), magic_i);
        __m256i r = _mm256_sub_epi64(x, _mm256_mul_epu32(q, vp));
        __m256i neg = _mm256_cmpgt_epi64(_mm256_setzero_si256(), r);
        r = _mm256_add_epi64(r, _mm256_and_si256(neg, vp));
        __m256i big = _mm256_cmpgt_epi64(r, vpm1);
        return _mm256_sub_epi64(r, _mm256_and_si256(big, vp));
    }
};

// Pack 4 x u64 lanes (each < 2^32) into 4 x u32.
inline __m128i pack_u64_lanes(__m256i x)
{
    const __m256i idx = _mm256_setr_epi32(0, 2, 4, 6, 1, 3, 5, 7);
    return _mm256_castsi256_si128(_mm256_permutevar8x32_epi32(x, idx));
}

void axpy_mod_avx2(uint32_t* out, const uint32_t* in, uint32_t c, std::size_t n, uint32_t p)
{
    const Barrett br(p);
    const __m256i vc = _mm256_set1_epi64x(c);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i in64 = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(in + i)));
        __m256i out64 =
            _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(out + i)));
        __m256i x = _mm256_add_epi64(out64, _mm256_mul_epu32(in64, vc));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), pack_u64_lanes(br.reduce(x)));
    }
    for (; i < n; ++i)
        out[i] = static_cast<uint32_t>((out[i] + static_cast<uint64_t>(c) * in[i]) % p);
}

void scale_mod_avx2(uint32_t* row, uint32_t c, std::size_t n, uint32_t p)
{
    const Barrett br(p);
    const __m256i vc = _mm256_set1_epi64x(c);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i r64 = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(row + i)));
        __m256i x = _mm256_mul_epu32(r64, vc);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(row + i), pack_u64_lanes(br.reduce(x)));
    }
    for (; i < n; ++i)
        row[i] = static_cast<uint32_t>(static_cast<uint64_t>(c) * row[i] % p);
}

void reduce_mod_plain(uint32_t* out, const uint64_t* acc, std::size_t n, uint32_t p)
{
    // Accumulators may exceed 2^52, outside the double trick's exact range.
    for (std::size_t i = 0; i < n; ++i)
        out[i] = static_cast<uint32_t>(acc[i] % p);
}

}  // namespace

const Ops& avx2_ops()
{
    static const Ops ops{axpy_acc_avx2, axpy_mod_avx2, scale_mod_avx2, reduce_mod_plain, "avx2"};
    return ops;
}

}  // namespace torspect::kernels

#endif  // TORSPECT_HAVE_AVX2_TU
