#include "lpc/analysis.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <limits>
#include <sstream>

#include "lpc/errors.hpp"
#include "lpc/kernels.hpp"
#include "lpc/pipeline.hpp"

namespace lpc {

double psnr(const Image8& a, const Image8& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw ConfigError("psnr: dimension mismatch");
    const size_t n = a.pixels.size();
    const uint64_t sse = kernels::ops().sse(a.pixels.data(), b.pixels.data(), n);
    if (sse == 0) return std::numeric_limits<double>::infinity();
    const double mse = static_cast<double>(sse) / static_cast<double>(n);
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

DiffMaps diff_maps(const Image8& img) {
    const int M = img.rows, N = img.cols;
    DiffMaps d;
    d.rows = M;
    d.cols = N;
    d.horiz.resize(static_cast<size_t>(M) * (N - 1));
    d.vert.resize(static_cast<size_t>(M - 1) * N);
    const auto& ops = kernels::ops();
    for (int r = 0; r < M; ++r) {
        const uint8_t* row = img.pixels.data() + static_cast<size_t>(r) * N;
        ops.sub_i16(d.horiz.data() + static_cast<size_t>(r) * (N - 1), row + 1, row,
                    static_cast<size_t>(N - 1));
    }
    for (int r = 0; r + 1 < M; ++r) {
        const uint8_t* row = img.pixels.data() + static_cast<size_t>(r) * N;
        ops.sub_i16(d.vert.data() + static_cast<size_t>(r) * N, row + N, row,
                    static_cast<size_t>(N));
    }
    return d;
}

double diff_entropy_bits(const Image8& img) {
    const DiffMaps d = diff_maps(img);
    std::array<uint64_t, 511> hist{};
    for (int16_t v : d.horiz) ++hist[v + 255];
    for (int16_t v : d.vert) ++hist[v + 255];
    const double total = static_cast<double>(d.horiz.size() + d.vert.size());
    double h = 0.0;
    for (uint64_t c : hist) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / total;
        h -= p * std::log2(p);
    }
    return h;
}

UniformityReport uniformity_report(const Image8& img) {
    UniformityReport rep;
    std::array<uint64_t, 256> counts{};
    for (uint8_t v : img.pixels) ++counts[v];
    const double expected = static_cast<double>(img.pixels.size()) / 256.0;
    double chi = 0.0;
    for (uint64_t c : counts) {
        const double d = static_cast<double>(c) - expected;
        chi += d * d / expected;
    }
    rep.chiSquare = chi;
    const boost::math::chi_squared dist(255.0);
    rep.pValue = boost::math::cdf(boost::math::complement(dist, chi));
    for (int k = 0; k < 8; ++k) {
        uint64_t ones = 0;
        for (uint8_t v : img.pixels) ones += (v >> k) & 1u;
        rep.planeOnesFraction[k] =
            static_cast<double>(ones) / static_cast<double>(img.pixels.size());
    }
    rep.diffEntropyBits = diff_entropy_bits(img);
    return rep;
}

std::string capacity_csv_header() {
    return "image,rows,cols,tau,lambda,blocks,unused_blocks,room_bits,aux_bits,"
           "payload_start,capacity_bits,reference_bits,bits_per_pixel\n";
}

std::string capacity_csv(const std::string& name, const Image8& img,
                         const std::vector<int>& taus, int lambda) {
    std::ostringstream out;
    for (int tau : taus) {
        PrepConfig cfg;
        cfg.tau = tau;
        cfg.lambda = lambda;
        const CapacityReport rep = measure_capacity(img, cfg);
        out << name << ',' << rep.rows << ',' << rep.cols << ',' << rep.tau << ',' << rep.lambda
            << ',' << rep.blockCount << ',' << rep.unusedBlocks << ',' << rep.roomTotal << ','
            << rep.auxTotal << ',' << rep.payloadStart << ',' << rep.capacityBits << ','
            << rep.referenceBits << ',' << rep.bitsPerPixel << '\n';
    }
    return out.str();
}

}  // namespace lpc
