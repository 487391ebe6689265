#include <vector>

#include "doctest.h"
#include "lpc/kernels.hpp"
#include "testutil.hpp"

using lpc::kernels::Ops;

namespace {

uint8_t reverse_oracle(uint8_t v) {
    uint8_t out = 0;
    for (int k = 0; k < 8; ++k)
        if (v & (1u << k)) out |= 1u << (7 - k);
    return out;
}

std::vector<uint8_t> random_bytes(size_t n, uint32_t seed) {
    std::vector<uint8_t> v(n);
    for (auto& b : v) b = static_cast<uint8_t>(testutil::lcg(seed) >> 9);
    return v;
}

}  // namespace

TEST_CASE("scalar bit reversal matches the per-bit oracle") {
    std::vector<uint8_t> src(256), dst(256);
    for (int i = 0; i < 256; ++i) src[i] = static_cast<uint8_t>(i);
    lpc::kernels::scalar_ops().reverse_bits(dst.data(), src.data(), src.size());
    for (int i = 0; i < 256; ++i) CHECK(dst[i] == reverse_oracle(src[i]));
}

TEST_CASE("kernel variants are bit-exact equivalent") {
    if (!lpc::kernels::avx2_available()) {
        MESSAGE("avx2 not available on this machine, equivalence not exercised");
        return;
    }
    const Ops& sc = lpc::kernels::scalar_ops();
    const Ops& vx = lpc::kernels::avx2_ops();
    for (size_t n : {size_t{0}, size_t{1}, size_t{7}, size_t{31}, size_t{32}, size_t{33},
                     size_t{64}, size_t{255}, size_t{1000}, size_t{4101}}) {
        const auto a = random_bytes(n, 0xA0 + static_cast<uint32_t>(n));
        const auto b = random_bytes(n, 0xB0 + static_cast<uint32_t>(n));
        const auto m = random_bytes(n, 0xC0 + static_cast<uint32_t>(n));
        CAPTURE(n);

        std::vector<uint8_t> d1(n), d2(n);
        sc.reverse_bits(d1.data(), a.data(), n);
        vx.reverse_bits(d2.data(), a.data(), n);
        CHECK(d1 == d2);

        std::vector<uint8_t> lo1(n), hi1(n), lo2(n), hi2(n);
        sc.split_planes(lo1.data(), hi1.data(), a.data(), n, 0x07);
        vx.split_planes(lo2.data(), hi2.data(), a.data(), n, 0x07);
        CHECK(lo1 == lo2);
        CHECK(hi1 == hi2);

        sc.compose(d1.data(), hi1.data(), lo1.data(), n);
        vx.compose(d2.data(), hi1.data(), lo1.data(), n);
        CHECK(d1 == d2);
        CHECK(d1 == a);

        std::vector<uint8_t> x1 = a, x2 = a;
        sc.xor_masked(x1.data(), b.data(), m.data(), n);
        vx.xor_masked(x2.data(), b.data(), m.data(), n);
        CHECK(x1 == x2);

        std::vector<int16_t> s1(n), s2(n);
        sc.sub_i16(s1.data(), a.data(), b.data(), n);
        vx.sub_i16(s2.data(), a.data(), b.data(), n);
        CHECK(s1 == s2);

        CHECK(sc.sse(a.data(), b.data(), n) == vx.sse(a.data(), b.data(), n));
    }
}

TEST_CASE("selected table honors the override variable") {
    // whichever table is active, it must agree with scalar on a quick probe
    const Ops& chosen = lpc::kernels::ops();
    const auto a = random_bytes(500, 1);
    const auto b = random_bytes(500, 2);
    CHECK(chosen.sse(a.data(), b.data(), a.size()) ==
          lpc::kernels::scalar_ops().sse(a.data(), b.data(), a.size()));
    CHECK((std::string(chosen.name) == "scalar" || std::string(chosen.name) == "avx2"));
}

TEST_CASE("sse oracle") {
    const std::vector<uint8_t> a{0, 10, 255};
    const std::vector<uint8_t> b{3, 10, 0};
    CHECK(lpc::kernels::ops().sse(a.data(), b.data(), 3) == 9 + 0 + 255 * 255);
}
