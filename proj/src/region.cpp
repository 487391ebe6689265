#include "lpc/region.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace lpc {

RegionPartition divide_regions(const std::vector<uint8_t>& tile, int rows, int cols) {
    RegionPartition part;
    part.rows = rows;
    part.cols = cols;
    part.labels.assign(static_cast<size_t>(rows) * cols, -1);

    auto idx = [cols](int r, int c) { return static_cast<size_t>(r) * cols + c; };

    int next = 0;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (part.labels[idx(r, c)] != -1) continue;
            const uint8_t v = tile[idx(r, c)];
            std::queue<PixelPos> q;
            q.push({static_cast<uint16_t>(r), static_cast<uint16_t>(c)});
            part.labels[idx(r, c)] = next;
            while (!q.empty()) {
                PixelPos p = q.front();
                q.pop();
                const int dr[4] = {-1, 1, 0, 0};
                const int dc[4] = {0, 0, -1, 1};
                for (int k = 0; k < 4; ++k) {
                    int nr = p.r + dr[k], nc = p.c + dc[k];
                    if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) continue;
                    if (part.labels[idx(nr, nc)] == -1 && tile[idx(nr, nc)] == v) {
                        part.labels[idx(nr, nc)] = next;
                        q.push({static_cast<uint16_t>(nr), static_cast<uint16_t>(nc)});
                    }
                }
            }
            Region reg;
            reg.id = next;
            reg.seed = v;
            part.regions.push_back(std::move(reg));
            ++next;
        }
    }

    // One raster pass collects pixel lists, boundary pixels and the
    // label-pair adjacency.
    std::vector<std::set<int>> adj(part.regions.size());
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            int32_t id = part.labels[idx(r, c)];
            PixelPos p{static_cast<uint16_t>(r), static_cast<uint16_t>(c)};
            part.regions[id].pixels.push_back(p);
            bool edge = false;
            const int dr[4] = {-1, 1, 0, 0};
            const int dc[4] = {0, 0, -1, 1};
            for (int k = 0; k < 4; ++k) {
                int nr = r + dr[k], nc = c + dc[k];
                if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) continue;
                int32_t nid = part.labels[idx(nr, nc)];
                if (nid != id) {
                    edge = true;
                    adj[id].insert(nid);
                }
            }
            if (edge) part.regions[id].boundary.push_back(p);
        }
    }
    for (size_t i = 0; i < part.regions.size(); ++i)
        part.regions[i].adjacent.assign(adj[i].begin(), adj[i].end());

    return part;
}

std::vector<std::vector<int>> detect_adjacency(const RegionPartition& part) {
    std::vector<std::set<int>> adj(part.regions.size());
    for (const Region& reg : part.regions) {
        for (const PixelPos& p : reg.boundary) {
            const int dr[4] = {-1, 1, 0, 0};
            const int dc[4] = {0, 0, -1, 1};
            for (int k = 0; k < 4; ++k) {
                int nr = p.r + dr[k], nc = p.c + dc[k];
                if (nr < 0 || nr >= part.rows || nc < 0 || nc >= part.cols) continue;
                int32_t nid = part.label(nr, nc);
                if (nid != reg.id) adj[reg.id].insert(nid);
            }
        }
    }
    std::vector<std::vector<int>> out(adj.size());
    for (size_t i = 0; i < adj.size(); ++i) out[i].assign(adj[i].begin(), adj[i].end());
    return out;
}

}  // namespace lpc
