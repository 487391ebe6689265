#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lpc/bitprep.hpp"
#include "lpc/image.hpp"

namespace lpc {

// Peak signal-to-noise ratio in dB; +infinity when the images are identical.
// Throws ConfigError on mismatched dimensions.
double psnr(const Image8& a, const Image8& b);

// Signed differences between horizontal and vertical pixel neighbors.
struct DiffMaps {
    int rows = 0, cols = 0;
    std::vector<int16_t> horiz;  // rows x (cols-1), img(r,c+1) - img(r,c)
    std::vector<int16_t> vert;   // (rows-1) x cols, img(r+1,c) - img(r,c)
};

DiffMaps diff_maps(const Image8& img);

// Shannon entropy in bits of the pooled neighbor-difference histogram.
double diff_entropy_bits(const Image8& img);

struct UniformityReport {
    double chiSquare = 0.0;  // 256-bin goodness of fit against uniform
    double pValue = 0.0;     // upper tail at 255 degrees of freedom
    std::array<double, 8> planeOnesFraction{};  // per bit plane, plane 0 = LSB
    double diffEntropyBits = 0.0;
};

UniformityReport uniformity_report(const Image8& img);

// One CSV row per block-side setting; capacityBits < 0 flags an unsupported
// combination rather than omitting the row.
std::string capacity_csv(const std::string& name, const Image8& img,
                         const std::vector<int>& taus, int lambda);
std::string capacity_csv_header();

}  // namespace lpc
