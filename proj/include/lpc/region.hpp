#pragma once

#include <cstdint>
#include <vector>

namespace lpc {

struct PixelPos {
    uint16_t r = 0;
    uint16_t c = 0;
    bool operator==(const PixelPos&) const = default;
};

struct Region {
    int id = 0;
    uint8_t seed = 0;                // the shared pixel value
    std::vector<PixelPos> pixels;    // raster order
    std::vector<PixelPos> boundary;  // pixels with a differing 4-neighbor, raster order
    std::vector<int> adjacent;       // region ids, ascending
};

struct RegionPartition {
    int rows = 0;
    int cols = 0;
    std::vector<int32_t> labels;  // region id per pixel, row-major
    std::vector<Region> regions;  // indexed by id; ids in raster order of first pixel

    int32_t label(int r, int c) const { return labels[static_cast<size_t>(r) * cols + c]; }
};

// Flood fill into maximal 4-connected equal-value regions. Seeds are taken in
// raster order, so region ids are ordered by each region's first pixel; this
// ordering is what makes the decode side reproduce the encode side exactly.
RegionPartition divide_regions(const std::vector<uint8_t>& tile, int rows, int cols);

// Adjacency recomputed from boundary pixels alone (each boundary pixel's
// differing 4-neighbors). Equals the label-pair adjacency stored in the
// partition; kept as an independent route and used as such in tests.
std::vector<std::vector<int>> detect_adjacency(const RegionPartition& part);

}  // namespace lpc
