#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpc/auxcodec.hpp"
#include "lpc/bitprep.hpp"
#include "lpc/image.hpp"

namespace lpc {

// Everything measurable about one reservation pass, kept whether or not the
// image turns out to be usable (capacityBits < 0 means unsupported).
struct CapacityReport {
    int rows = 0, cols = 0;
    int tau = 0, lambda = 0;
    int blockCount = 0;
    int unusedBlocks = 0;
    int64_t roomTotal = 0;       // freed bits across converted tiles
    int64_t auxTotal = 0;        // recovery stream length in bits
    int64_t payloadStart = 0;    // first raster index available to a payload
    int64_t capacityBits = 0;    // net embeddable area, end marker included
    int64_t referenceBits = 0;   // closed-form estimate, bookkeeping at list prices
    double bitsPerPixel = 0.0;
    std::vector<int> regionsPerBlock;
    std::vector<int> mergesPerBlock;
    std::vector<uint8_t> usedFlags;  // per original block index
};

struct ReservedLayout {
    int rows = 0, cols = 0;
    int tau = 0, lambda = 0;
    int blockRows = 0, blockCols = 0;
    int unusedBlocks = 0;
    std::vector<int> blockOfSlot;  // output block position -> original block index
    int64_t recoveryLength = 0;
    int64_t preservedEnd = 0;  // raster index one past the last preserved tile
    int64_t payloadStart = 0;
};

struct ReserveResult {
    Image8 image;  // rooms freed, bookkeeping in place, markers still zero
    ReservedLayout layout;
    CapacityReport report;
};

// Keyless reservation transform. Throws CapacityError when the image cannot
// host the bookkeeping (the report inside the exception-free variant below
// still says how far off it was).
ReserveResult reserve_rooms(const Image8& img, const PrepConfig& cfg);

// Same analysis without materializing an output image; never throws on
// capacity shortfalls, so it also reports unsupported images honestly.
CapacityReport measure_capacity(const Image8& img, const PrepConfig& cfg);

// Content owner: reserve, fill the vacant area and markers, encrypt.
Image8 protect_image(const Image8& img, const std::vector<uint8_t>& encKey,
                     const PrepConfig& cfg);

// Data hider: writes the payload plus a keyed end marker into the reserved
// area; needs only the hide key and the image itself.
Image8 embed_payload(const Image8& protectedImg, const std::vector<uint8_t>& payload,
                     const std::vector<uint8_t>& hideKey);

// Receiver with the hide key alone.
std::vector<uint8_t> extract_payload(const Image8& embeddedImg,
                                     const std::vector<uint8_t>& hideKey);

// Receiver with the image key alone: bit-exact original, payload ignored.
Image8 recover_image(const Image8& embeddedImg, const std::vector<uint8_t>& encKey);

struct RecoverResult {
    Image8 image;
    std::vector<uint8_t> payload;
};

// Receiver with both keys.
RecoverResult recover_full(const Image8& embeddedImg, const std::vector<uint8_t>& encKey,
                           const std::vector<uint8_t>& hideKey);

}  // namespace lpc
