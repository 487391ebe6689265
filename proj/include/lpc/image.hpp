#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace lpc {

// 8-bit grayscale image, row-major. Also reused for single bit-plane groups
// (e.g. the low λ-bit plane), where values are simply < 2^λ.
struct Image8 {
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> pixels;

    Image8() = default;
    Image8(int r, int c, uint8_t fill = 0)
        : rows(r), cols(c), pixels(static_cast<size_t>(r) * c, fill) {}

    uint8_t& at(int r, int c) { return pixels[static_cast<size_t>(r) * cols + c]; }
    uint8_t at(int r, int c) const { return pixels[static_cast<size_t>(r) * cols + c]; }
    size_t size() const { return pixels.size(); }

    bool operator==(const Image8&) const = default;
};

// Binary PGM (P5), maxval 255 only. Throws FormatError with a distinct
// message for bad magic, bad header fields, unsupported maxval and a
// truncated raster.
Image8 load_pgm(std::istream& in);
Image8 load_pgm(const std::filesystem::path& path);

// Canonical header: "P5\n<width> <height>\n255\n".
void save_pgm(const Image8& img, std::ostream& out);
void save_pgm(const Image8& img, const std::filesystem::path& path);

}  // namespace lpc
