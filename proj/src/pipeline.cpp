#include "lpc/pipeline.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "lpc/cipher.hpp"
#include "lpc/convert.hpp"
#include "lpc/errors.hpp"
#include "lpc/kernels.hpp"

namespace lpc {

namespace {

// tail layout, last kHeaderBits low-plane bits of the image:
// [start marker 32][parameter record 116][end marker 32][payload pointer 32]
constexpr int kStartMarkOff = 0;
constexpr int kEndMarkOff = kMarkBits + kParamRecordBits;    // 148
constexpr int kPayloadPtrOff = kEndMarkOff + kMarkBits;      // 180

uint64_t read_plane0_field(const Image8& img, int64_t start, int width) {
    uint64_t v = 0;
    for (int k = 0; k < width; ++k) v = v << 1 | static_cast<uint64_t>(plane0_bit(img, start + k));
    return v;
}

void write_plane0_field(Image8& img, int64_t start, uint64_t value, int width) {
    for (int k = 0; k < width; ++k)
        set_plane0_bit(img, start + k, static_cast<int>(value >> (width - 1 - k)) & 1);
}

// Freed bits of a reserved image in stream order: block positions theta
// onward, pixels in tile raster order, bit positions lambda-3 down to 0.
// Bit 0 of a pixel at or past payloadStart belongs to the payload area or
// the tail and is skipped. Visits at most `limit` bits.
template <typename F>
void for_each_room_bit(int cols, int blockRows, int blockCols, int tau, int lambda, int theta,
                       int64_t payloadStart, int64_t limit, F&& visit) {
    int64_t seen = 0;
    for (int p = theta; p < blockRows * blockCols && seen < limit; ++p) {
        const int r0 = p / blockCols * tau, c0 = p % blockCols * tau;
        for (int j = 0; j < tau * tau && seen < limit; ++j) {
            const int64_t raster = static_cast<int64_t>(r0 + j / tau) * cols + c0 + j % tau;
            for (int bit = lambda - 3; bit >= 0 && seen < limit; --bit) {
                if (bit == 0 && raster >= payloadStart) continue;
                visit(raster, bit);
                ++seen;
            }
        }
    }
}

struct Analysis {
    PlaneSplit planes;
    BlockGrid grid;
    std::vector<ConversionResult> conv;
    std::vector<BlockAux> aux;
    FieldWidths widths;  // the block-count-independent fields only
    ReservedLayout layout;
    CapacityReport report;
    bool usable = false;
};

Analysis analyze(const Image8& img, const PrepConfig& cfg) {
    cfg.validate(img.rows, img.cols);
    const int M = img.rows, N = img.cols, tau = cfg.tau, lambda = cfg.lambda;
    const int64_t MN = static_cast<int64_t>(M) * N;

    Analysis a;
    a.planes = split_planes(invert_image(img), lambda);
    a.grid = partition_blocks(a.planes.low, tau);
    const int m = a.grid.blockRows, n = a.grid.blockCols, count = m * n;
    a.widths = field_widths(M, N, tau, lambda, 0);
    const int64_t roomPerTile = static_cast<int64_t>(tau) * tau * (lambda - 2);

    a.conv.resize(count);
    a.aux.resize(count);
    std::vector<uint8_t> used(count);
    for (int b = 0; b < count; ++b) {
        a.conv[b] = convert_block(a.grid.tiles[b], tau, tau, lambda);
        a.aux[b].seeds.reserve(a.conv[b].finalPartition.regions.size());
        for (const Region& reg : a.conv[b].finalPartition.regions) a.aux[b].seeds.push_back(reg.seed);
        a.aux[b].merged = a.conv[b].merged;
        const size_t cost = block_aux_bits(a.aux[b], a.widths, tau, lambda);
        used[b] = cost + a.widths.blockCoord < static_cast<size_t>(roomPerTile) ? 1 : 0;
    }

    ReservedLayout& lay = a.layout;
    lay.rows = M;
    lay.cols = N;
    lay.tau = tau;
    lay.lambda = lambda;
    lay.blockRows = m;
    lay.blockCols = n;
    lay.blockOfSlot.reserve(count);
    for (int b = 0; b < count; ++b)
        if (!used[b]) lay.blockOfSlot.push_back(b);
    lay.unusedBlocks = static_cast<int>(lay.blockOfSlot.size());
    for (int b = 0; b < count; ++b)
        if (used[b]) lay.blockOfSlot.push_back(b);
    const int theta = lay.unusedBlocks;
    const int64_t gamma = count - theta;

    int64_t rec = static_cast<int64_t>(theta) * a.widths.blockCoord;
    for (int p = theta; p < count; ++p)
        rec += static_cast<int64_t>(block_aux_bits(a.aux[lay.blockOfSlot[p]], a.widths, tau, lambda));
    lay.recoveryLength = rec;

    if (theta > 0) {
        const int p = theta - 1;
        lay.preservedEnd = (static_cast<int64_t>(p / n) * tau + tau - 1) * N + p % n * tau + tau;
    }
    lay.payloadStart = std::max<int64_t>({lay.preservedEnd, MN - gamma * roomPerTile + rec, 0});

    CapacityReport& rep = a.report;
    rep.rows = M;
    rep.cols = N;
    rep.tau = tau;
    rep.lambda = lambda;
    rep.blockCount = count;
    rep.unusedBlocks = theta;
    rep.roomTotal = gamma * roomPerTile;
    rep.auxTotal = rec;
    rep.payloadStart = lay.payloadStart;
    rep.capacityBits = MN - kHeaderBits - lay.payloadStart;
    rep.bitsPerPixel = static_cast<double>(rep.capacityBits) / static_cast<double>(MN);
    const FieldWidths wt = field_widths(M, N, tau, lambda, theta);
    int64_t ref = rep.roomTotal - static_cast<int64_t>(theta) * a.widths.blockCoord;
    rep.regionsPerBlock.reserve(count);
    rep.mergesPerBlock.reserve(count);
    for (int b = 0; b < count; ++b) {
        rep.regionsPerBlock.push_back(static_cast<int>(a.aux[b].seeds.size()));
        rep.mergesPerBlock.push_back(static_cast<int>(a.aux[b].merged.size()));
        if (used[b])
            ref -= static_cast<int64_t>(a.aux[b].seeds.size()) * lambda +
                   static_cast<int64_t>(a.aux[b].merged.size()) * a.widths.mergedPixel;
    }
    ref -= wt.params + wt.payloadPtr;
    rep.referenceBits = ref;
    rep.usedFlags = std::move(used);

    // usable: a net area exists and the tail lands entirely on converted blocks
    a.usable = rep.capacityBits >= 0;
    for (int64_t i = MN - kHeaderBits; a.usable && i < MN; ++i) {
        const int pos = static_cast<int>(i / N) / tau * n + static_cast<int>(i % N) / tau;
        if (pos < theta) a.usable = false;
    }
    return a;
}

}  // namespace

ReserveResult reserve_rooms(const Image8& img, const PrepConfig& cfg) {
    Analysis a = analyze(img, cfg);
    if (!a.usable)
        throw CapacityError("image unsupported: net capacity " +
                            std::to_string(a.report.capacityBits) + " bits");
    const int M = a.layout.rows, N = a.layout.cols, tau = a.layout.tau, lambda = a.layout.lambda;
    const int n = a.layout.blockCols;
    const int theta = a.layout.unusedBlocks;
    const int count = a.layout.blockRows * n;
    const int64_t MN = static_cast<int64_t>(M) * N;

    Image8 low(M, N);
    for (int p = 0; p < count; ++p) {
        const int b = a.layout.blockOfSlot[p];
        const std::vector<uint8_t>& tile = p < theta ? a.grid.tiles[b] : a.conv[b].convertedTile;
        place_block(low, tile, tau, p / n, p % n);
    }

    BitWriter rec;
    for (int p = 0; p < theta; ++p) {
        const int b = a.layout.blockOfSlot[p];
        rec.put(static_cast<uint64_t>(b / n), a.widths.blockCoord / 2);
        rec.put(static_cast<uint64_t>(b % n), a.widths.blockCoord / 2);
    }
    for (int p = theta; p < count; ++p)
        encode_block_aux(rec, a.aux[a.layout.blockOfSlot[p]], a.widths, tau, lambda);
    assert(static_cast<int64_t>(rec.bit_size()) == a.layout.recoveryLength);

    const std::vector<uint8_t> recBits = rec.bits();
    size_t k = 0;
    for_each_room_bit(N, a.layout.blockRows, n, tau, lambda, theta, a.layout.payloadStart,
                      static_cast<int64_t>(recBits.size()), [&](int64_t raster, int bit) {
                          low.pixels[raster] = static_cast<uint8_t>(
                              (low.pixels[raster] & ~(1u << bit)) | (recBits[k++] << bit));
                      });
    if (k != recBits.size())
        throw CapacityError("image unsupported: recovery stream does not fit");

    BitWriter hdr;
    hdr.put(0, kMarkBits);
    ParamRecord params;
    params.tau = static_cast<uint16_t>(tau);
    params.lambda = static_cast<uint8_t>(lambda);
    params.unusedBlocks = static_cast<uint32_t>(theta);
    params.recoveryOffset = static_cast<uint32_t>(a.layout.preservedEnd);
    params.recoveryLength = static_cast<uint32_t>(a.layout.recoveryLength);
    encode_params(hdr, params);
    hdr.put(0, kMarkBits);
    hdr.put(static_cast<uint64_t>(a.layout.payloadStart), kPayloadPtrBits);

    Image8 out = compose_planes(a.planes.high, low);
    const std::vector<uint8_t> hb = hdr.bits();
    for (size_t i = 0; i < hb.size(); ++i)
        set_plane0_bit(out, MN - kHeaderBits + static_cast<int64_t>(i), hb[i]);
    return ReserveResult{std::move(out), std::move(a.layout), std::move(a.report)};
}

CapacityReport measure_capacity(const Image8& img, const PrepConfig& cfg) {
    return analyze(img, cfg).report;
}

Image8 protect_image(const Image8& img, const std::vector<uint8_t>& encKey,
                     const PrepConfig& cfg) {
    ReserveResult rr = reserve_rooms(img, cfg);
    Image8 out = std::move(rr.image);
    const int64_t MN = static_cast<int64_t>(out.rows) * out.cols;
    const int64_t tail = MN - kHeaderBits;
    const int64_t ps = rr.layout.payloadStart;

    // the vacant area must read as keystream, never as stale zeros
    const int64_t fillBits = tail - ps;
    const std::vector<uint8_t> fill =
        keystream(encKey, "fill", static_cast<size_t>((fillBits + 7) / 8));
    for (int64_t j = 0; j < fillBits; ++j)
        set_plane0_bit(out, ps + j, (fill[j / 8] >> (7 - j % 8)) & 1);

    write_plane0_field(out, tail + kStartMarkOff, derive_mark(encKey, "start"), kMarkBits);
    write_plane0_field(out, tail + kEndMarkOff, derive_mark(encKey, "end"), kMarkBits);

    // everything is enciphered except the low bit of the payload area and of
    // the payload pointer, which later parties must reach without this key
    std::vector<uint8_t> mask(static_cast<size_t>(MN), 0xFF);
    for (int64_t j = ps; j < tail; ++j) mask[j] = 0xFE;
    for (int64_t j = MN - kPayloadPtrBits; j < MN; ++j) mask[j] = 0xFE;
    xor_image_masked(out, encKey, "image", mask);
    return out;
}

Image8 embed_payload(const Image8& protectedImg, const std::vector<uint8_t>& payload,
                     const std::vector<uint8_t>& hideKey) {
    const int64_t MN = static_cast<int64_t>(protectedImg.rows) * protectedImg.cols;
    if (MN < kHeaderBits) throw FormatError("image too small to carry a reserved area");
    Image8 out = protectedImg;
    const int64_t tail = MN - kHeaderBits;
    const auto ps =
        static_cast<int64_t>(read_plane0_field(out, MN - kPayloadPtrBits, kPayloadPtrBits));
    if (ps > tail) throw FormatError("payload pointer out of range");
    const int64_t room = tail - ps;
    const int64_t need = static_cast<int64_t>(payload.size()) * 8 + kMarkBits;
    if (need > room)
        throw CapacityError("payload needs " + std::to_string(need) +
                            " bits, reserved area holds " + std::to_string(room) + " bits");

    std::vector<uint8_t> bits(payload.size() * 8);
    for (size_t i = 0; i < bits.size(); ++i) bits[i] = (payload[i / 8] >> (7 - i % 8)) & 1;
    xor_bits(bits, hideKey, "payload");
    for (size_t i = 0; i < bits.size(); ++i)
        set_plane0_bit(out, ps + static_cast<int64_t>(i), bits[i]);
    write_plane0_field(out, ps + static_cast<int64_t>(bits.size()),
                       derive_mark(hideKey, "end-payload"), kMarkBits);

    // the pointer leaves the embedding step enciphered under the hide key
    std::vector<uint8_t> ptr(kPayloadPtrBits);
    for (int c = 0; c < kPayloadPtrBits; ++c)
        ptr[c] = static_cast<uint8_t>(plane0_bit(out, MN - kPayloadPtrBits + c));
    xor_bits(ptr, hideKey, "pointer");
    for (int c = 0; c < kPayloadPtrBits; ++c) set_plane0_bit(out, MN - kPayloadPtrBits + c, ptr[c]);
    return out;
}

std::vector<uint8_t> extract_payload(const Image8& embeddedImg,
                                     const std::vector<uint8_t>& hideKey) {
    const int64_t MN = static_cast<int64_t>(embeddedImg.rows) * embeddedImg.cols;
    if (MN < kHeaderBits) throw FormatError("image too small to carry a reserved area");
    const int64_t tail = MN - kHeaderBits;

    std::vector<uint8_t> ptr(kPayloadPtrBits);
    for (int c = 0; c < kPayloadPtrBits; ++c)
        ptr[c] = static_cast<uint8_t>(plane0_bit(embeddedImg, MN - kPayloadPtrBits + c));
    xor_bits(ptr, hideKey, "pointer");
    int64_t ps = 0;
    for (uint8_t b : ptr) ps = ps << 1 | b;
    if (ps > tail || tail - ps < kMarkBits) throw KeyError("wrong hide key");

    const int64_t area = tail - ps;
    std::vector<uint8_t> cr(static_cast<size_t>(area));
    for (int64_t j = 0; j < area; ++j)
        cr[j] = static_cast<uint8_t>(plane0_bit(embeddedImg, ps + j));

    const uint32_t endMark = derive_mark(hideKey, "end-payload");
    uint32_t window = 0;
    for (int c = 0; c < kMarkBits; ++c) window = window << 1 | cr[c];
    int64_t len = -1;
    for (int64_t j = 0; j + kMarkBits <= area; ++j) {
        if (window == endMark && j % 8 == 0) {
            len = j;
            break;
        }
        if (j + kMarkBits < area) window = window << 1 | cr[j + kMarkBits];
    }
    if (len < 0) throw KeyError("wrong hide key or no payload present");

    std::vector<uint8_t> bits(cr.begin(), cr.begin() + len);
    xor_bits(bits, hideKey, "payload");
    std::vector<uint8_t> payload(static_cast<size_t>(len / 8), 0);
    for (int64_t i = 0; i < len; ++i)
        payload[i / 8] = static_cast<uint8_t>(payload[i / 8] << 1 | bits[i]);
    return payload;
}

Image8 recover_image(const Image8& embeddedImg, const std::vector<uint8_t>& encKey) {
    const int M = embeddedImg.rows, N = embeddedImg.cols;
    const int64_t MN = static_cast<int64_t>(M) * N;
    if (MN < kHeaderBits) throw FormatError("image too small to carry a reserved area");
    const int64_t tail = MN - kHeaderBits;

    const std::vector<uint8_t> ks = keystream(encKey, "image", static_cast<size_t>(MN));

    // peek the enciphered part of the tail before touching any pixel
    std::vector<uint8_t> hb(kPayloadPtrOff);
    for (int c = 0; c < kPayloadPtrOff; ++c)
        hb[c] = static_cast<uint8_t>(plane0_bit(embeddedImg, tail + c) ^ (ks[tail + c] & 1));
    BitReader br(hb);
    const auto startMark = static_cast<uint32_t>(br.get(kMarkBits));
    const ParamRecord params = decode_params(br);
    const auto endMark = static_cast<uint32_t>(br.get(kMarkBits));
    if (startMark != derive_mark(encKey, "start") || endMark != derive_mark(encKey, "end"))
        throw KeyError("wrong image key");

    const int tau = params.tau, lambda = params.lambda;
    PrepConfig cfg;
    cfg.tau = tau;
    cfg.lambda = lambda;
    try {
        cfg.validate(M, N);
    } catch (const ConfigError& e) {
        throw FormatError(std::string("corrupt parameter record: ") + e.what());
    }
    const int m = M / tau, n = N / tau, count = m * n;
    const int theta = static_cast<int>(params.unusedBlocks);
    if (theta > count) throw FormatError("corrupt parameter record: preserved block count");
    const int64_t gamma = count - theta;
    const int64_t roomPerTile = static_cast<int64_t>(tau) * tau * (lambda - 2);
    const auto rec = static_cast<int64_t>(params.recoveryLength);
    if (rec > gamma * roomPerTile) throw FormatError("corrupt parameter record: recovery length");

    int64_t preservedEnd = 0;
    if (theta > 0) {
        const int p = theta - 1;
        preservedEnd = (static_cast<int64_t>(p / n) * tau + tau - 1) * N + p % n * tau + tau;
    }
    if (static_cast<int64_t>(params.recoveryOffset) != preservedEnd)
        throw FormatError("corrupt parameter record: preserved area offset");
    const int64_t ps = std::max<int64_t>({preservedEnd, MN - gamma * roomPerTile + rec, 0});
    if (ps > tail) throw FormatError("corrupt parameter record: no net area");

    Image8 work = embeddedImg;
    std::vector<uint8_t> mask(static_cast<size_t>(MN), 0xFF);
    for (int64_t j = ps; j < tail; ++j) mask[j] = 0xFE;
    for (int64_t j = MN - kPayloadPtrBits; j < MN; ++j) mask[j] = 0xFE;
    kernels::ops().xor_masked(work.pixels.data(), ks.data(), mask.data(), work.pixels.size());

    const PlaneSplit planes = split_planes(work, lambda);
    const BlockGrid grid = partition_blocks(planes.low, tau);
    const FieldWidths w = field_widths(M, N, tau, lambda, 0);

    std::vector<uint8_t> recBits;
    recBits.reserve(static_cast<size_t>(rec));
    for_each_room_bit(N, m, n, tau, lambda, theta, ps, rec, [&](int64_t raster, int bit) {
        recBits.push_back((work.pixels[raster] >> bit) & 1);
    });
    if (static_cast<int64_t>(recBits.size()) != rec)
        throw FormatError("recovery stream truncated");

    BitReader rb(recBits);
    std::vector<char> preservedAt(count, 0);
    std::vector<int> preservedBlock(theta);
    for (int p = 0; p < theta; ++p) {
        const auto row = static_cast<int>(rb.get(w.blockCoord / 2));
        const auto col = static_cast<int>(rb.get(w.blockCoord / 2));
        if (row >= m || col >= n)
            throw FormatError("recovery stream: block coordinate out of range");
        const int b = row * n + col;
        if (preservedAt[b]) throw FormatError("recovery stream: duplicate block coordinate");
        preservedAt[b] = 1;
        preservedBlock[p] = b;
    }

    Image8 low(M, N);
    for (int p = 0; p < theta; ++p)
        place_block(low, grid.tiles[p], tau, preservedBlock[p] / n, preservedBlock[p] % n);

    std::vector<int> convertedBlock;
    convertedBlock.reserve(static_cast<size_t>(gamma));
    for (int b = 0; b < count; ++b)
        if (!preservedAt[b]) convertedBlock.push_back(b);

    std::vector<uint8_t> cmap(static_cast<size_t>(tau) * tau);
    std::vector<uint8_t> orig(cmap.size());
    for (int64_t j = 0; j < gamma; ++j) {
        const std::vector<uint8_t>& tile = grid.tiles[theta + j];
        for (size_t i = 0; i < cmap.size(); ++i) cmap[i] = tile[i] >> (lambda - 2);
        const RegionPartition part = divide_regions(cmap, tau, tau);
        const BlockAux aux = decode_block_aux(rb, w, tau, lambda);
        if (aux.seeds.size() != part.regions.size())
            throw FormatError("recovery stream: region structure mismatch");
        for (size_t i = 0; i < orig.size(); ++i) orig[i] = aux.seeds[part.labels[i]];
        for (auto it = aux.merged.rbegin(); it != aux.merged.rend(); ++it) {
            if (it->r >= tau || it->c >= tau)
                throw FormatError("recovery stream: merged pixel out of range");
            orig[static_cast<size_t>(it->r) * tau + it->c] = it->value;
        }
        const int b = convertedBlock[static_cast<size_t>(j)];
        place_block(low, orig, tau, b / n, b % n);
    }
    if (rb.pos() != static_cast<size_t>(rec))
        throw FormatError("recovery stream length mismatch");

    return inverse_preprocess(compose_planes(planes.high, low));
}

RecoverResult recover_full(const Image8& embeddedImg, const std::vector<uint8_t>& encKey,
                           const std::vector<uint8_t>& hideKey) {
    RecoverResult res;
    res.payload = extract_payload(embeddedImg, hideKey);
    res.image = recover_image(embeddedImg, encKey);
    return res;
}

}  // namespace lpc
