#include <map>
#include <set>

#include "doctest.h"
#include "lpc/region.hpp"
#include "testutil.hpp"

using namespace lpc;

namespace {

// 10x10 grid with 14 regions; the expected seed sequence and adjacency table
// below were produced by an independent flood-fill oracle and frozen here.
const std::vector<uint8_t> kFixture = {
    96,  96,  128, 128, 128, 128, 128, 128, 128, 128,  //
    128, 128, 128, 128, 128, 128, 128, 128, 128, 128,  //
    96,  96,  96,  96,  96,  96,  96,  96,  96,  128,  //
    128, 128, 64,  64,  96,  96,  96,  96,  96,  128,  //
    96,  96,  96,  32,  64,  96,  96,  96,  96,  128,  //
    96,  96,  96,  64,  64,  96,  128, 96,  96,  128,  //
    128, 128, 128, 128, 128, 96,  96,  96,  96,  128,  //
    128, 128, 128, 128, 128, 96,  32,  32,  96,  128,  //
    160, 160, 160, 160, 160, 32,  32,  32,  96,  64,   //
    128, 128, 128, 128, 128, 128, 128, 128, 64,  64,   //
};

const std::vector<uint8_t> kExpectedSeeds = {96, 128, 96, 128, 64,  96, 32,
                                             64, 128, 128, 32, 160, 64, 128};

const std::map<int, std::set<int>> kExpectedAdjacency = {
    {0, {1}},
    {1, {0, 2, 12}},
    {2, {1, 3, 4, 7, 8, 9, 10, 12}},
    {3, {2, 4, 5}},
    {4, {2, 3, 5, 6}},
    {5, {3, 4, 6, 7, 9}},
    {6, {4, 5, 7}},
    {7, {2, 5, 6, 9}},
    {8, {2}},
    {9, {2, 5, 7, 11}},
    {10, {2, 11, 13}},
    {11, {9, 10, 13}},
    {12, {1, 2, 13}},
    {13, {10, 11, 12}},
};

}  // namespace

TEST_CASE("fixture grid divides into the frozen region structure") {
    const RegionPartition part = divide_regions(kFixture, 10, 10);
    REQUIRE(part.regions.size() == 14);
    for (size_t i = 0; i < part.regions.size(); ++i) {
        CAPTURE(i);
        CHECK(part.regions[i].seed == kExpectedSeeds[i]);
        CHECK(part.regions[i].id == static_cast<int>(i));
        const std::set<int> got(part.regions[i].adjacent.begin(), part.regions[i].adjacent.end());
        CHECK(got == kExpectedAdjacency.at(static_cast<int>(i)));
    }
    // ids are assigned in raster order of each region's first pixel
    size_t firstSeen = 0;
    for (const Region& reg : part.regions) {
        const size_t first = static_cast<size_t>(reg.pixels[0].r) * 10 + reg.pixels[0].c;
        CHECK(part.labels[first] == reg.id);
        if (reg.id > 0) CHECK(first > firstSeen);
        firstSeen = first;
    }
}

TEST_CASE("boundary-pixel adjacency route agrees with the stored one") {
    const RegionPartition part = divide_regions(kFixture, 10, 10);
    const auto dual = detect_adjacency(part);
    REQUIRE(dual.size() == part.regions.size());
    for (size_t i = 0; i < dual.size(); ++i) CHECK(dual[i] == part.regions[i].adjacent);
}

TEST_CASE("labels match the union-find oracle on random grids") {
    uint32_t seed = 99;
    for (int iter = 0; iter < 200; ++iter) {
        const int rows = 2 + static_cast<int>(testutil::rnd(seed, 14));
        const int cols = 2 + static_cast<int>(testutil::rnd(seed, 14));
        const int levels = 2 + static_cast<int>(testutil::rnd(seed, 3));
        std::vector<uint8_t> grid(static_cast<size_t>(rows) * cols);
        for (auto& g : grid) g = static_cast<uint8_t>(testutil::rnd(seed, levels));
        const RegionPartition part = divide_regions(grid, rows, cols);
        const auto oracle = testutil::uf_components(grid, rows, cols);
        CAPTURE(rows);
        CAPTURE(cols);
        CHECK(part.labels == oracle);
    }
}

TEST_CASE("degenerate grids") {
    const RegionPartition one = divide_regions({7, 7, 7, 7}, 2, 2);
    CHECK(one.regions.size() == 1);
    CHECK(one.regions[0].adjacent.empty());
    CHECK(one.regions[0].pixels.size() == 4);
    CHECK(one.regions[0].boundary.empty());

    // checkerboard: every pixel its own region, diagonal is not connectivity
    const RegionPartition cb = divide_regions({0, 1, 1, 0}, 2, 2);
    CHECK(cb.regions.size() == 4);
    for (const Region& reg : cb.regions) {
        CHECK(reg.pixels.size() == 1);
        CHECK(reg.adjacent.size() == 2);
        CHECK(reg.boundary.size() == 1);
    }
}

TEST_CASE("region pixel lists are raster ordered and cover the grid") {
    const RegionPartition part = divide_regions(kFixture, 10, 10);
    size_t total = 0;
    for (const Region& reg : part.regions) {
        total += reg.pixels.size();
        for (size_t k = 1; k < reg.pixels.size(); ++k) {
            const auto& a = reg.pixels[k - 1];
            const auto& b = reg.pixels[k];
            CHECK(static_cast<int>(a.r) * 10 + a.c < static_cast<int>(b.r) * 10 + b.c);
        }
    }
    CHECK(total == 100);
}
