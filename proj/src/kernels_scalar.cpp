#include "lpc/kernels.hpp"

namespace lpc::kernels {

namespace {

constexpr uint8_t reverse_byte(uint8_t v) {
    v = static_cast<uint8_t>((v & 0xF0u) >> 4 | (v & 0x0Fu) << 4);
    v = static_cast<uint8_t>((v & 0xCCu) >> 2 | (v & 0x33u) << 2);
    v = static_cast<uint8_t>((v & 0xAAu) >> 1 | (v & 0x55u) << 1);
    return v;
}

struct RevTable {
    uint8_t t[256];
    constexpr RevTable() : t{} {
        for (int i = 0; i < 256; ++i) t[i] = reverse_byte(static_cast<uint8_t>(i));
    }
};
constexpr RevTable kRev;

void reverse_bits_scalar(uint8_t* dst, const uint8_t* src, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = kRev.t[src[i]];
}

void split_planes_scalar(uint8_t* low, uint8_t* high, const uint8_t* src, size_t n,
                         uint8_t mask) {
    for (size_t i = 0; i < n; ++i) {
        low[i] = static_cast<uint8_t>(src[i] & mask);
        high[i] = static_cast<uint8_t>(src[i] & ~mask);
    }
}

void compose_scalar(uint8_t* dst, const uint8_t* hi, const uint8_t* lo, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = static_cast<uint8_t>(hi[i] | lo[i]);
}

void xor_masked_scalar(uint8_t* buf, const uint8_t* ks, const uint8_t* mask, size_t n) {
    for (size_t i = 0; i < n; ++i) buf[i] = static_cast<uint8_t>(buf[i] ^ (ks[i] & mask[i]));
}

void sub_i16_scalar(int16_t* dst, const uint8_t* a, const uint8_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i)
        dst[i] = static_cast<int16_t>(static_cast<int>(a[i]) - static_cast<int>(b[i]));
}

uint64_t sse_scalar(const uint8_t* a, const uint8_t* b, size_t n) {
    uint64_t acc = 0;
    for (size_t i = 0; i < n; ++i) {
        int d = static_cast<int>(a[i]) - static_cast<int>(b[i]);
        acc += static_cast<uint64_t>(d * d);
    }
    return acc;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops table{
        "scalar",          reverse_bits_scalar, split_planes_scalar,
        compose_scalar,    xor_masked_scalar,   sub_i16_scalar,
        sse_scalar,
    };
    return table;
}

}  // namespace lpc::kernels
