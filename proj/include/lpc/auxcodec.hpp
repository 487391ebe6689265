#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpc/bitstream.hpp"
#include "lpc/convert.hpp"

namespace lpc {

// Smallest k with 2^k >= n; ceil_log2(1) == 0.
int ceil_log2(uint64_t n);

// Bit widths of the serialized bookkeeping fields for an image geometry.
struct FieldWidths {
    int blockCoord;    // row+col pair of a block index
    int pixelCoord;    // row+col pair inside a tile
    int mergedPixel;   // pixelCoord plus the pixel value
    int params;        // tau, lambda, theta counts plus offsets
    int payloadPtr;    // absolute position of the payload start
    int regionCount;   // count of regions or merges inside one tile
};

FieldWidths field_widths(int rows, int cols, int tau, int lambda, int unusedBlocks);

// Per-tile description sufficient to rebuild the original low plane.
struct BlockAux {
    std::vector<uint8_t> seeds;               // one per region, in region id order
    std::vector<MergedPixelRecord> merged;    // chronological order
};

size_t block_aux_bits(const BlockAux& aux, const FieldWidths& w, int tau, int lambda);
void encode_block_aux(BitWriter& bw, const BlockAux& aux, const FieldWidths& w, int tau, int lambda);
BlockAux decode_block_aux(BitReader& br, const FieldWidths& w, int tau, int lambda);

// Fixed-layout parameter record carried in the image tail.
struct ParamRecord {
    uint16_t tau = 0;
    uint8_t lambda = 0;
    uint32_t unusedBlocks = 0;
    uint32_t recoveryOffset = 0;   // absolute low-plane bit index of the recovery stream
    uint32_t recoveryLength = 0;   // total recovery stream length in bits
};

inline constexpr int kParamRecordBits = 116;
inline constexpr int kMarkBits = 32;
inline constexpr int kPayloadPtrBits = 32;
inline constexpr int kHeaderBits = kMarkBits + kParamRecordBits + kMarkBits + kPayloadPtrBits;

void encode_params(BitWriter& bw, const ParamRecord& p);
ParamRecord decode_params(BitReader& br);

// Keyed 32-bit marker bound to a label; used to delimit and authenticate
// the bookkeeping regions.
uint32_t derive_mark(const std::vector<uint8_t>& key, const std::string& label);

}  // namespace lpc
