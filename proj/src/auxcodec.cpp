#include "lpc/auxcodec.hpp"

#include <openssl/hmac.h>

#include <algorithm>
#include <stdexcept>

namespace lpc {

int ceil_log2(uint64_t n) {
    if (n == 0) throw std::invalid_argument("ceil_log2(0)");
    int k = 0;
    while ((uint64_t{1} << k) < n) ++k;
    return k;
}

FieldWidths field_widths(int rows, int cols, int tau, int lambda, int unusedBlocks) {
    FieldWidths w;
    w.blockCoord = 2 * ceil_log2(static_cast<uint64_t>(std::max(rows / tau, cols / tau)));
    w.pixelCoord = 2 * ceil_log2(static_cast<uint64_t>(tau));
    w.mergedPixel = w.pixelCoord + lambda;
    uint64_t pmax = std::max<uint64_t>({static_cast<uint64_t>(tau),
                                        static_cast<uint64_t>(unusedBlocks),
                                        static_cast<uint64_t>(lambda)});
    w.params = 3 * ceil_log2(pmax) + 4 * ceil_log2(static_cast<uint64_t>(std::max(rows, cols)));
    w.payloadPtr = 2 * ceil_log2(static_cast<uint64_t>(std::max(rows, cols)));
    w.regionCount = ceil_log2(static_cast<uint64_t>(tau) * tau + 1);
    return w;
}

size_t block_aux_bits(const BlockAux& aux, const FieldWidths& w, int, int lambda) {
    size_t bits = 1 + w.regionCount + aux.seeds.size() * lambda;
    if (!aux.merged.empty()) bits += w.regionCount + aux.merged.size() * w.mergedPixel;
    return bits;
}

void encode_block_aux(BitWriter& bw, const BlockAux& aux, const FieldWidths& w, int tau, int lambda) {
    const int coordBits = w.pixelCoord / 2;
    bw.put_bit(aux.merged.empty() ? 0 : 1);
    bw.put(aux.seeds.size(), w.regionCount);
    for (uint8_t s : aux.seeds) bw.put(s, lambda);
    if (!aux.merged.empty()) {
        bw.put(aux.merged.size(), w.regionCount);
        for (const auto& m : aux.merged) {
            if (m.r >= tau || m.c >= tau) throw std::invalid_argument("merged record out of tile");
            bw.put(m.r, coordBits);
            bw.put(m.c, coordBits);
            bw.put(m.value, lambda);
        }
    }
}

BlockAux decode_block_aux(BitReader& br, const FieldWidths& w, int, int lambda) {
    const int coordBits = w.pixelCoord / 2;
    BlockAux aux;
    bool hasMerged = br.get_bit() != 0;
    auto nRegions = br.get(w.regionCount);
    aux.seeds.reserve(nRegions);
    for (uint64_t i = 0; i < nRegions; ++i) aux.seeds.push_back(static_cast<uint8_t>(br.get(lambda)));
    if (hasMerged) {
        auto nMerged = br.get(w.regionCount);
        aux.merged.reserve(nMerged);
        for (uint64_t i = 0; i < nMerged; ++i) {
            MergedPixelRecord m;
            m.r = static_cast<uint16_t>(br.get(coordBits));
            m.c = static_cast<uint16_t>(br.get(coordBits));
            m.value = static_cast<uint8_t>(br.get(lambda));
            aux.merged.push_back(m);
        }
    }
    return aux;
}

void encode_params(BitWriter& bw, const ParamRecord& p) {
    bw.put(p.tau, 16);
    bw.put(p.lambda, 4);
    bw.put(p.unusedBlocks, 32);
    bw.put(p.recoveryOffset, 32);
    bw.put(p.recoveryLength, 32);
}

ParamRecord decode_params(BitReader& br) {
    ParamRecord p;
    p.tau = static_cast<uint16_t>(br.get(16));
    p.lambda = static_cast<uint8_t>(br.get(4));
    p.unusedBlocks = static_cast<uint32_t>(br.get(32));
    p.recoveryOffset = static_cast<uint32_t>(br.get(32));
    p.recoveryLength = static_cast<uint32_t>(br.get(32));
    return p;
}

uint32_t derive_mark(const std::vector<uint8_t>& key, const std::string& label) {
    uint8_t digest[32];
    unsigned int len = 0;
    HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()),
         reinterpret_cast<const uint8_t*>(label.data()), label.size(), digest, &len);
    return (uint32_t{digest[0]} << 24) | (uint32_t{digest[1]} << 16) |
           (uint32_t{digest[2]} << 8) | uint32_t{digest[3]};
}

}  // namespace lpc
