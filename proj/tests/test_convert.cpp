#include <algorithm>

#include "doctest.h"
#include "lpc/convert.hpp"
#include "testutil.hpp"

using namespace lpc;

namespace {

// rebuild a tile the way the receiving side does: seed value per final
// region, then the merge log undone back to front
std::vector<uint8_t> rebuild_tile(const ConversionResult& res, int rows, int cols) {
    std::vector<uint8_t> tile(static_cast<size_t>(rows) * cols);
    for (size_t i = 0; i < tile.size(); ++i)
        tile[i] = res.finalPartition.regions[res.finalPartition.labels[i]].seed;
    for (auto it = res.merged.rbegin(); it != res.merged.rend(); ++it)
        tile[static_cast<size_t>(it->r) * cols + it->c] = it->value;
    return tile;
}

}  // namespace

TEST_CASE("coloring a constant tile") {
    const std::vector<uint8_t> tile(16, 3);
    const ConversionResult res = convert_block(tile, 4, 4, 3);
    CHECK(res.merged.empty());
    REQUIRE(res.colors.size() == 1);
    CHECK(res.colors[0] == 0);
    CHECK(res.convertedTile == std::vector<uint8_t>(16, 0));
    CHECK(verify_coloring(res));
}

TEST_CASE("adjacent regions get distinct colors") {
    uint32_t seed = 5;
    for (int iter = 0; iter < 300; ++iter) {
        const int side = 4 + static_cast<int>(testutil::rnd(seed, 9));
        const int levels = 2 + static_cast<int>(testutil::rnd(seed, 6));
        const auto tile = testutil::random_tile(side, seed, levels, 3);
        const ConversionResult res = convert_block(tile, side, side, 3);
        CAPTURE(side);
        for (const Region& reg : res.finalPartition.regions) {
            CHECK(res.colors[reg.id] < 4);
            for (int nb : reg.adjacent) CHECK(res.colors[reg.id] != res.colors[nb]);
        }
        for (size_t i = 0; i < tile.size(); ++i)
            CHECK(res.convertedTile[i] == res.colors[res.finalPartition.labels[i]] << 1);
        CHECK(verify_coloring(res));
        CHECK(rebuild_tile(res, side, side) == tile);
    }
}

TEST_CASE("a tight budget forces a merge with an exact record") {
    const std::vector<uint8_t> tile = {
        10, 10, 10, 10,  //
        10, 10, 10, 10,  //
        20, 20, 20, 20,  //
        20, 95, 20, 20,  //
    };
    const ConversionResult res = convert_block(tile, 4, 4, 3, 2);
    REQUIRE(res.merged.size() == 1);
    CHECK(res.merged[0] == MergedPixelRecord{3, 1, 95});
    CHECK(res.finalPartition.regions.size() == 2);
    CHECK(verify_coloring(res));
    CHECK(rebuild_tile(res, 4, 4) == tile);
}

TEST_CASE("merges cascade until the tile colors, still reversible") {
    // four-level noise with budget 1 merges all the way down to one region
    uint32_t seed = 17;
    const auto tile = testutil::random_tile(8, seed, 4, 3);
    const ConversionResult res = convert_block(tile, 8, 8, 3, 1);
    CHECK(res.finalPartition.regions.size() == 1);
    CHECK(!res.merged.empty());
    CHECK(verify_coloring(res));
    CHECK(rebuild_tile(res, 8, 8) == tile);
}

TEST_CASE("merge pair selection rules") {
    SUBCASE("absorbed region is the smallest of the failing one and its neighbors") {
        const RegionPartition part = divide_regions({1, 1, 1, 2, 3, 3}, 2, 3);
        // regions: 0 = three 1s, 1 = single 2, 2 = two 3s
        const MergePair mp = choose_merge_pair(part, 0, {-1, -1, -1});
        CHECK(mp.bPrime == 1);
        CHECK(mp.bDoublePrime == 0);  // larger of the two neighbors of region 1
    }
    SUBCASE("absorbing region prefers colored neighbors and low ids on ties") {
        const RegionPartition part = divide_regions({5, 5, 8, 7, 7,  //
                                                     5, 5, 8, 7, 7},
                                                    2, 5);
        // regions: 0 = four 5s, 1 = two 8s, 2 = four 7s
        CHECK(choose_merge_pair(part, 1, {-1, -1, -1}).bPrime == 1);
        CHECK(choose_merge_pair(part, 1, {-1, -1, -1}).bDoublePrime == 0);  // size tie, low id
        CHECK(choose_merge_pair(part, 1, {-1, -1, 0}).bDoublePrime == 2);   // colored wins
        CHECK(choose_merge_pair(part, 1, {0, -1, 0}).bDoublePrime == 0);    // both colored, low id
    }
    SUBCASE("size tie for the absorbed region breaks to the lower id") {
        const RegionPartition part = divide_regions({2, 1, 3}, 1, 3);
        const MergePair mp = choose_merge_pair(part, 1, {-1, -1, -1});
        CHECK(mp.bPrime == 0);
        CHECK(mp.bDoublePrime == 1);
    }
}

TEST_CASE("apply_merge rewrites the absorbed region and logs prior values") {
    std::vector<uint8_t> tile = {1, 1, 2, 3, 3, 3};
    const RegionPartition part = divide_regions(tile, 2, 3);
    // absorb region 1 (the single 2 at (0,2)) into region 2 (the 3s)
    std::vector<MergedPixelRecord> log;
    apply_merge(tile, part, MergePair{1, 2}, log);
    CHECK(tile == std::vector<uint8_t>{1, 1, 3, 3, 3, 3});
    REQUIRE(log.size() == 1);
    CHECK(log[0] == MergedPixelRecord{0, 2, 2});
}

TEST_CASE("coloring respects the visit budget") {
    const RegionPartition part = divide_regions({1, 2, 1, 2, 1, 2}, 1, 6);
    const ColoringResult full = color_regions(part, 6);
    CHECK(full.ok);
    CHECK(full.colors == std::vector<int8_t>{0, 1, 0, 1, 0, 1});

    const ColoringResult tight = color_regions(part, 3);
    CHECK(!tight.ok);
    CHECK(tight.failRegion == 3);
    CHECK(tight.colors == std::vector<int8_t>{0, 1, 0, -1, -1, -1});

    // budgets below one are clamped so a lone region always colors
    const RegionPartition one = divide_regions({9}, 1, 1);
    CHECK(color_regions(one, 0).ok);
    CHECK(color_regions(one, -5).ok);
}
