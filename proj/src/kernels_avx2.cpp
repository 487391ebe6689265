#include "lpc/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace lpc::kernels {

namespace {

// Per-nibble bit-reversal tables for PSHUFB: rev(b) = revlo[b&15]<<4 | revlo[b>>4].
const __m256i kNibRev = _mm256_setr_epi8(
    0, 8, 4, 12, 2, 10, 6, 14, 1, 9, 5, 13, 3, 11, 7, 15,
    0, 8, 4, 12, 2, 10, 6, 14, 1, 9, 5, 13, 3, 11, 7, 15);
const __m256i kLoNib = _mm256_set1_epi8(0x0F);

void reverse_bits_avx2(uint8_t* dst, const uint8_t* src, size_t n) {
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i lo = _mm256_and_si256(v, kLoNib);
        __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), kLoNib);
        __m256i r = _mm256_or_si256(
            _mm256_slli_epi16(_mm256_and_si256(_mm256_shuffle_epi8(kNibRev, lo), kLoNib), 4),
            _mm256_shuffle_epi8(kNibRev, hi));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
    }
    if (i < n) scalar_ops().reverse_bits(dst + i, src + i, n - i);
}

void split_planes_avx2(uint8_t* low, uint8_t* high, const uint8_t* src, size_t n,
                       uint8_t mask) {
    const __m256i m = _mm256_set1_epi8(static_cast<char>(mask));
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(low + i), _mm256_and_si256(v, m));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(high + i), _mm256_andnot_si256(m, v));
    }
    if (i < n) scalar_ops().split_planes(low + i, high + i, src + i, n - i, mask);
}

void compose_avx2(uint8_t* dst, const uint8_t* hi, const uint8_t* lo, size_t n) {
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(hi + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lo + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(a, b));
    }
    if (i < n) scalar_ops().compose(dst + i, hi + i, lo + i, n - i);
}

void xor_masked_avx2(uint8_t* buf, const uint8_t* ks, const uint8_t* mask, size_t n) {
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(buf + i));
        __m256i k = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ks + i));
        __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mask + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(buf + i),
                            _mm256_xor_si256(b, _mm256_and_si256(k, m)));
    }
    if (i < n) scalar_ops().xor_masked(buf + i, ks + i, mask + i, n - i);
}

void sub_i16_avx2(int16_t* dst, const uint8_t* a, const uint8_t* b, size_t n) {
    size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i av = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i)));
        __m256i bv = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i)));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_sub_epi16(av, bv));
    }
    if (i < n) scalar_ops().sub_i16(dst + i, a + i, b + i, n - i);
}

uint64_t sse_avx2(const uint8_t* a, const uint8_t* b, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i av = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i)));
        __m256i bv = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i)));
        __m256i d = _mm256_sub_epi16(av, bv);
        // |d| <= 255 so d*d fits i32; madd pairs into i32 lanes
        acc = _mm256_add_epi64(
            acc, _mm256_cvtepu32_epi64(_mm256_castsi256_si128(_mm256_madd_epi16(d, d))));
        acc = _mm256_add_epi64(
            acc, _mm256_cvtepu32_epi64(_mm256_extracti128_si256(_mm256_madd_epi16(d, d), 1)));
    }
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    if (i < n) total += scalar_ops().sse(a + i, b + i, n - i);
    return total;
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops table{
        "avx2",        reverse_bits_avx2, split_planes_avx2,
        compose_avx2,  xor_masked_avx2,   sub_i16_avx2,
        sse_avx2,
    };
    return table;
}

}  // namespace lpc::kernels

#endif  // x86_64
