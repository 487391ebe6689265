#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lpc/image.hpp"

namespace testutil {

// deterministic rng, good enough for test data
inline uint32_t lcg(uint32_t& s) {
    s = s * 1664525u + 1013904223u;
    return s;
}

inline uint32_t rnd(uint32_t& s, uint32_t bound) { return (lcg(s) >> 8) % bound; }

inline lpc::Image8 gradient_image(int rows, int cols, bool horizontal) {
    lpc::Image8 img(rows, cols);
    const int span = horizontal ? rows + cols - 2 : rows - 1;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const int v = horizontal ? r + c : r;
            img.at(r, c) = static_cast<uint8_t>(span == 0 ? 0 : v * 255 / span);
        }
    return img;
}

inline lpc::Image8 flat_image(int rows, int cols, uint8_t v) {
    lpc::Image8 img(rows, cols, v);
    return img;
}

// horizontal bands of the given height, alternating two values
inline lpc::Image8 stripe_image(int rows, int cols, int period, uint8_t a, uint8_t b) {
    lpc::Image8 img(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) img.at(r, c) = (r / period) % 2 ? b : a;
    return img;
}

// vertical bands
inline lpc::Image8 vstripe_image(int rows, int cols, int period, uint8_t a, uint8_t b) {
    lpc::Image8 img(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) img.at(r, c) = (c / period) % 2 ? b : a;
    return img;
}

inline lpc::Image8 noise_image(int rows, int cols, uint32_t seed,
                               const std::vector<uint8_t>& levels) {
    lpc::Image8 img(rows, cols);
    for (auto& p : img.pixels) p = levels[rnd(seed, static_cast<uint32_t>(levels.size()))];
    return img;
}

// gradient with the last `noiseRows` rows replaced by leveled noise
inline lpc::Image8 hybrid_image(int rows, int cols, int noiseRows, uint32_t seed,
                                const std::vector<uint8_t>& levels) {
    lpc::Image8 img = gradient_image(rows, cols, true);
    for (int r = rows - noiseRows; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            img.at(r, c) = levels[rnd(seed, static_cast<uint32_t>(levels.size()))];
    return img;
}

struct NamedImage {
    std::string name;
    lpc::Image8 img;
};

// synthetic corpus: smooth, flat, banded and noise-hybrid content at three
// sizes, all divisible by block sides 8, 16 and 32
inline std::vector<NamedImage> corpus() {
    std::vector<NamedImage> v;
    v.push_back({"grad512h", gradient_image(512, 512, true)});
    v.push_back({"grad512v", gradient_image(512, 512, false)});
    v.push_back({"flat512", flat_image(512, 512, 128)});
    v.push_back({"stripes512", stripe_image(512, 512, 16, 64, 192)});
    v.push_back({"ramp512", gradient_image(512, 512, true)});
    for (auto& p : v.back().img.pixels) p = static_cast<uint8_t>(255 - p);
    v.push_back({"grad256", gradient_image(256, 256, true)});
    v.push_back({"hyb256bin", hybrid_image(256, 256, 64, 7u, {0, 255})});
    v.push_back({"hyb256quad", hybrid_image(256, 256, 64, 11u, {0, 64, 128, 192})});
    v.push_back({"grad128", gradient_image(128, 128, false)});
    v.push_back({"vstripes128", vstripe_image(128, 128, 32, 32, 224)});
    return v;
}

inline std::vector<uint8_t> random_payload(size_t nBytes, uint32_t seed) {
    std::vector<uint8_t> out(nBytes);
    for (auto& b : out) b = static_cast<uint8_t>(lcg(seed) >> 13);
    return out;
}

// independent connected-component oracle: union-find over equal-value
// 4-neighbors, labels renumbered in first-occurrence raster order
inline std::vector<int32_t> uf_components(const std::vector<uint8_t>& grid, int rows, int cols) {
    std::vector<int> parent(static_cast<size_t>(rows) * cols);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const int i = r * cols + c;
            if (c + 1 < cols && grid[i] == grid[i + 1]) unite(i, i + 1);
            if (r + 1 < rows && grid[i] == grid[i + cols]) unite(i, i + cols);
        }
    std::vector<int32_t> out(parent.size());
    std::vector<int32_t> idOf(parent.size(), -1);
    int32_t next = 0;
    for (size_t i = 0; i < parent.size(); ++i) {
        const int root = find(static_cast<int>(i));
        if (idOf[root] < 0) idOf[root] = next++;
        out[i] = idOf[root];
    }
    return out;
}

inline std::vector<uint8_t> random_tile(int side, uint32_t& seed, int levels, int lambda) {
    std::vector<uint8_t> tile(static_cast<size_t>(side) * side);
    const uint32_t top = 1u << lambda;
    std::vector<uint8_t> palette(levels);
    for (auto& p : palette) p = static_cast<uint8_t>(rnd(seed, top));
    for (auto& t : tile) t = palette[rnd(seed, static_cast<uint32_t>(levels))];
    return tile;
}

}  // namespace testutil
