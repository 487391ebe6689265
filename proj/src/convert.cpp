#include "lpc/convert.hpp"

#include <algorithm>
#include <cassert>

namespace lpc {

ColoringResult color_regions(const RegionPartition& part, int budget) {
    const int n = static_cast<int>(part.regions.size());
    ColoringResult res;
    res.colors.assign(n, -1);
    if (n == 0) {
        res.ok = true;
        return res;
    }
    if (budget < 1) budget = 1;

    std::vector<int8_t> tryc(n, 0);
    int visits = 0;
    int i = 0;
    while (i < n) {
        if (++visits > budget) {
            res.failRegion = i;
            return res;
        }
        int c = tryc[i];
        for (; c < 4; ++c) {
            bool conflict = false;
            for (int j : part.regions[i].adjacent) {
                if (res.colors[j] == c) {
                    conflict = true;
                    break;
                }
            }
            if (!conflict) break;
        }
        if (c < 4) {
            res.colors[i] = static_cast<int8_t>(c);
            tryc[i] = static_cast<int8_t>(c + 1);
            ++i;
            if (i < n) tryc[i] = 0;
        } else {
            res.colors[i] = -1;
            tryc[i] = 0;
            if (i == 0) {
                res.failRegion = 0;
                return res;
            }
            --i;
            res.colors[i] = -1;
        }
    }
    res.ok = true;
    return res;
}

MergePair choose_merge_pair(const RegionPartition& part, int failRegion,
                            const std::vector<int8_t>& colors) {
    MergePair mp;

    auto smaller = [&](int a, int b) {
        size_t sa = part.regions[a].pixels.size(), sb = part.regions[b].pixels.size();
        return sa != sb ? sa < sb : a < b;
    };
    mp.bPrime = failRegion;
    for (int j : part.regions[failRegion].adjacent)
        if (smaller(j, mp.bPrime)) mp.bPrime = j;

    const uint8_t seed = part.regions[mp.bPrime].seed;
    auto larger = [&](int a, int b) {
        size_t sa = part.regions[a].pixels.size(), sb = part.regions[b].pixels.size();
        return sa != sb ? sa > sb : a < b;
    };
    int bestColored = -1, bestAny = -1;
    for (int j : part.regions[mp.bPrime].adjacent) {
        if (part.regions[j].seed == seed) continue;  // cannot happen post flood fill
        if (bestAny == -1 || larger(j, bestAny)) bestAny = j;
        if (colors[j] != -1 && (bestColored == -1 || larger(j, bestColored))) bestColored = j;
    }
    mp.bDoublePrime = bestColored != -1 ? bestColored : bestAny;
    assert(mp.bDoublePrime != -1 && "region with no differing neighbor cannot fail coloring");
    return mp;
}

void apply_merge(std::vector<uint8_t>& tile, const RegionPartition& part, const MergePair& mp,
                 std::vector<MergedPixelRecord>& records) {
    const uint8_t newValue = part.regions[mp.bDoublePrime].seed;
    for (const PixelPos& p : part.regions[mp.bPrime].pixels) {
        size_t i = static_cast<size_t>(p.r) * part.cols + p.c;
        records.push_back({p.r, p.c, tile[i]});
        tile[i] = newValue;
    }
}

ConversionResult convert_block(std::vector<uint8_t> tile, int rows, int cols, int lambda,
                               int budget) {
    ConversionResult out;
    for (;;) {
        RegionPartition part = divide_regions(tile, rows, cols);
        ColoringResult cr = color_regions(part, budget);
        if (!cr.ok) {
            MergePair mp = choose_merge_pair(part, cr.failRegion, cr.colors);
            apply_merge(tile, part, mp, out.merged);
            continue;
        }
        out.colors.assign(cr.colors.begin(), cr.colors.end());
        out.finalPartition = std::move(part);
        break;
    }
    const int shift = lambda - 2;
    out.convertedTile.resize(tile.size());
    for (size_t i = 0; i < tile.size(); ++i)
        out.convertedTile[i] =
            static_cast<uint8_t>(out.colors[out.finalPartition.labels[i]] << shift);
    return out;
}

bool verify_coloring(const ConversionResult& res) {
    RegionPartition redone = divide_regions(res.convertedTile, res.finalPartition.rows,
                                            res.finalPartition.cols);
    return redone.labels == res.finalPartition.labels;
}

}  // namespace lpc
