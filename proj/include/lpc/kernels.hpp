#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel byte kernels used by the preprocessing, cipher and analysis
// stages. Each kernel has a scalar reference implementation and an AVX2
// variant; ops() returns a table selected once at startup from CPUID (the
// LPC_KERNEL environment variable forces "scalar" or "avx2" for testing).
// The two tables are bit-exact equivalent by contract and by test.

namespace lpc::kernels {

struct Ops {
    const char* name;
    // dst[i] = bit-reversal of src[i] (MSB<->LSB within each byte)
    void (*reverse_bits)(uint8_t* dst, const uint8_t* src, size_t n);
    // low[i] = src[i] & mask, high[i] = src[i] & ~mask
    void (*split_planes)(uint8_t* low, uint8_t* high, const uint8_t* src, size_t n, uint8_t mask);
    // dst[i] = hi[i] | lo[i]  (disjoint bit groups, equals hi + lo)
    void (*compose)(uint8_t* dst, const uint8_t* hi, const uint8_t* lo, size_t n);
    // buf[i] ^= ks[i] & mask[i]
    void (*xor_masked)(uint8_t* buf, const uint8_t* ks, const uint8_t* mask, size_t n);
    // dst[i] = int16(a[i]) - int16(b[i])
    void (*sub_i16)(int16_t* dst, const uint8_t* a, const uint8_t* b, size_t n);
    // sum of squared differences
    uint64_t (*sse)(const uint8_t* a, const uint8_t* b, size_t n);
};

const Ops& scalar_ops();
bool avx2_available();
const Ops& avx2_ops();  // only callable when avx2_available()

// Table chosen at first use: AVX2 when the CPU has it, else scalar.
const Ops& ops();

}  // namespace lpc::kernels
