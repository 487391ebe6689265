#pragma once

#include <cstdint>
#include <vector>

#include "lpc/image.hpp"

namespace lpc {

struct PrepConfig {
    int lambda = 3;  // low-plane width, 3..8
    int tau = 32;    // block side, >= 2, divides both image dimensions

    // Throws ConfigError; needs image dims for the divisibility check.
    void validate(int rows, int cols) const;
};

struct PlaneSplit {
    Image8 low;   // values < 2^lambda
    Image8 high;  // values with the low lambda bits zero
};

struct BlockGrid {
    int blockRows = 0;
    int blockCols = 0;
    int tau = 0;
    // raster order, each tile tau*tau row-major
    std::vector<std::vector<uint8_t>> tiles;

    int count() const { return blockRows * blockCols; }
};

// Bit-order inversion inside a byte: bit k moves to bit 7-k.
uint8_t invert_pixel_bits(uint8_t v);
Image8 invert_image(const Image8& img);

PlaneSplit split_planes(const Image8& img, int lambda);

BlockGrid partition_blocks(const Image8& grid, int tau);

// Writes a tile back into a grid at block position (br, bc).
void place_block(Image8& grid, const std::vector<uint8_t>& tile, int tau, int br, int bc);

// high | low, elementwise; the inverse of split_planes.
Image8 compose_planes(const Image8& high, const Image8& low);

// Final inverse step of reconstruction: undo the bit-order inversion.
Image8 inverse_preprocess(const Image8& img);

}  // namespace lpc
