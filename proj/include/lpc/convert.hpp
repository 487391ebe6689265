#pragma once

#include <cstdint>
#include <vector>

#include "lpc/region.hpp"

namespace lpc {

inline constexpr int kDefaultColorBudget = 10000;

struct MergedPixelRecord {
    uint16_t r = 0;  // in-tile coordinates, 0-based
    uint16_t c = 0;
    uint8_t value = 0;  // the lambda-bit value the pixel held before the merge
    bool operator==(const MergedPixelRecord&) const = default;
};

struct ColoringResult {
    bool ok = false;
    // per-region color 0..3; -1 where unassigned (on failure, exactly the
    // regions before failRegion are assigned)
    std::vector<int8_t> colors;
    int failRegion = -1;
};

// Greedy assignment in region-id order, colors tried ascending, with
// chronological backtracking. budget caps node visits (entries into a
// region), clamped to >= 1 so a lone region always colors.
ColoringResult color_regions(const RegionPartition& part, int budget);

struct MergePair {
    int bPrime = -1;        // region to absorb (smallest of failing + its neighbors)
    int bDoublePrime = -1;  // absorbing region (largest qualifying neighbor of bPrime)
};

// Selection on coloring failure. Ties break to the smaller id; bDoublePrime
// prefers already-colored regions when any neighbor is colored.
MergePair choose_merge_pair(const RegionPartition& part, int failRegion,
                            const std::vector<int8_t>& colors);

// Records every pixel of bPrime (raster order), then overwrites them with
// bDoublePrime's seed. The union is 4-connected since the two are adjacent.
void apply_merge(std::vector<uint8_t>& tile, const RegionPartition& part, const MergePair& mp,
                 std::vector<MergedPixelRecord>& records);

struct ConversionResult {
    std::vector<uint8_t> colors;              // per final region, 0..3
    std::vector<MergedPixelRecord> merged;    // in the order merges happened
    RegionPartition finalPartition;           // of the post-merge tile
    std::vector<uint8_t> convertedTile;       // color << (lambda-2) per pixel
};

// Divide, color, and on failure merge + restart until colorable. Never fails:
// each merge removes a region and one region is trivially colorable.
ConversionResult convert_block(std::vector<uint8_t> tile, int rows, int cols, int lambda,
                               int budget = kDefaultColorBudget);

// True iff flood-filling convertedTile reproduces finalPartition exactly
// (same label map, hence same region sets and enumeration order). This is
// the property that makes extraction-side region discovery deterministic.
bool verify_coloring(const ConversionResult& res);

}  // namespace lpc
