#include "lpc/bitprep.hpp"

#include <string>

#include "lpc/errors.hpp"
#include "lpc/kernels.hpp"

namespace lpc {

void PrepConfig::validate(int rows, int cols) const {
    if (lambda < 3 || lambda > 8)
        throw ConfigError("lambda must be in [3, 8], got " + std::to_string(lambda));
    if (tau < 2) throw ConfigError("tau must be >= 2, got " + std::to_string(tau));
    if (rows <= 0 || cols <= 0) throw ConfigError("empty image");
    if (rows % tau != 0 || cols % tau != 0)
        throw ConfigError("tau=" + std::to_string(tau) + " does not divide image " +
                          std::to_string(cols) + "x" + std::to_string(rows));
}

uint8_t invert_pixel_bits(uint8_t v) {
    uint8_t out;
    kernels::ops().reverse_bits(&out, &v, 1);
    return out;
}

Image8 invert_image(const Image8& img) {
    Image8 out(img.rows, img.cols);
    kernels::ops().reverse_bits(out.pixels.data(), img.pixels.data(), img.size());
    return out;
}

PlaneSplit split_planes(const Image8& img, int lambda) {
    PlaneSplit s{Image8(img.rows, img.cols), Image8(img.rows, img.cols)};
    uint8_t mask = static_cast<uint8_t>((1u << lambda) - 1u);
    kernels::ops().split_planes(s.low.pixels.data(), s.high.pixels.data(), img.pixels.data(),
                                img.size(), mask);
    return s;
}

BlockGrid partition_blocks(const Image8& grid, int tau) {
    BlockGrid bg;
    bg.tau = tau;
    bg.blockRows = grid.rows / tau;
    bg.blockCols = grid.cols / tau;
    bg.tiles.reserve(static_cast<size_t>(bg.count()));
    for (int br = 0; br < bg.blockRows; ++br) {
        for (int bc = 0; bc < bg.blockCols; ++bc) {
            std::vector<uint8_t> tile(static_cast<size_t>(tau) * tau);
            for (int r = 0; r < tau; ++r) {
                const uint8_t* src = &grid.pixels[static_cast<size_t>(br * tau + r) * grid.cols +
                                                  static_cast<size_t>(bc) * tau];
                std::copy(src, src + tau, tile.begin() + static_cast<size_t>(r) * tau);
            }
            bg.tiles.push_back(std::move(tile));
        }
    }
    return bg;
}

void place_block(Image8& grid, const std::vector<uint8_t>& tile, int tau, int br, int bc) {
    for (int r = 0; r < tau; ++r) {
        uint8_t* dst = &grid.pixels[static_cast<size_t>(br * tau + r) * grid.cols +
                                    static_cast<size_t>(bc) * tau];
        std::copy(tile.begin() + static_cast<size_t>(r) * tau,
                  tile.begin() + static_cast<size_t>(r + 1) * tau, dst);
    }
}

Image8 compose_planes(const Image8& high, const Image8& low) {
    Image8 out(high.rows, high.cols);
    kernels::ops().compose(out.pixels.data(), high.pixels.data(), low.pixels.data(), out.size());
    return out;
}

Image8 inverse_preprocess(const Image8& img) { return invert_image(img); }

}  // namespace lpc
