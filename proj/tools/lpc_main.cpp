#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lpc/analysis.hpp"
#include "lpc/cipher.hpp"
#include "lpc/errors.hpp"
#include "lpc/image.hpp"
#include "lpc/pipeline.hpp"

namespace {

// exit codes: 0 ok, 1 usage, 2 capacity, 3 wrong key, 4 malformed input

std::vector<uint8_t> resolve_key(const std::string& flagValue, const char* envName,
                                 const char* what) {
    std::string hex = flagValue;
    if (hex.empty()) {
        const char* env = std::getenv(envName);
        if (env) hex = env;
    }
    if (hex.empty())
        throw lpc::ConfigError(std::string("missing ") + what + " (flag or " + envName + ")");
    return lpc::parse_key_hex(hex);
}

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lpc::FormatError("cannot open " + path);
    return std::vector<uint8_t>(std::istreambuf_iterator<char>(in),
                                std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::vector<uint8_t>& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw lpc::FormatError("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    if (!out) throw lpc::FormatError("short write to " + path);
}

struct CommonOpts {
    std::string in, out;
    std::string encKey, hideKey;
    int tau = 32;
    int lambda = 3;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reversible data hiding in encrypted grayscale PGM images"};
    app.require_subcommand(1);
    CommonOpts o;
    std::string payloadPath, refPath, csvPath;
    std::vector<int> taus{8, 16, 32};

    auto* protect = app.add_subcommand("protect", "reserve room and encrypt a cover image");
    protect->add_option("-i,--in", o.in, "cover image (PGM P5)")->required();
    protect->add_option("-o,--out", o.out, "protected image")->required();
    protect->add_option("--tau", o.tau, "block side (default 32)");
    protect->add_option("--lambda", o.lambda, "low plane width (default 3)");
    protect->add_option("--enc-key", o.encKey, "image key, 64 hex chars (or LPC_ENC_KEY)");

    auto* embed = app.add_subcommand("embed", "hide a payload inside a protected image");
    embed->add_option("-i,--in", o.in, "protected image")->required();
    embed->add_option("-o,--out", o.out, "embedded image")->required();
    embed->add_option("-p,--payload", payloadPath, "payload file")->required();
    embed->add_option("--hide-key", o.hideKey, "hide key, 64 hex chars (or LPC_HIDE_KEY)");

    auto* extract = app.add_subcommand("extract", "pull the payload out of an embedded image");
    extract->add_option("-i,--in", o.in, "embedded image")->required();
    extract->add_option("-o,--out", o.out, "payload output file")->required();
    extract->add_option("--hide-key", o.hideKey, "hide key, 64 hex chars (or LPC_HIDE_KEY)");

    auto* decrypt = app.add_subcommand("decrypt", "restore the original image, payload ignored");
    decrypt->add_option("-i,--in", o.in, "protected or embedded image")->required();
    decrypt->add_option("-o,--out", o.out, "recovered image")->required();
    decrypt->add_option("--enc-key", o.encKey, "image key, 64 hex chars (or LPC_ENC_KEY)");

    auto* recover = app.add_subcommand("recover", "restore the original image and the payload");
    recover->add_option("-i,--in", o.in, "embedded image")->required();
    recover->add_option("-o,--out", o.out, "recovered image")->required();
    recover->add_option("-p,--payload", payloadPath, "payload output file")->required();
    recover->add_option("--enc-key", o.encKey, "image key, 64 hex chars (or LPC_ENC_KEY)");
    recover->add_option("--hide-key", o.hideKey, "hide key, 64 hex chars (or LPC_HIDE_KEY)");

    auto* capacity = app.add_subcommand("capacity", "report embeddable bits per block side");
    capacity->add_option("-i,--in", o.in, "cover image (PGM P5)")->required();
    capacity->add_option("--tau", taus, "block sides to evaluate (default 8 16 32)");
    capacity->add_option("--lambda", o.lambda, "low plane width (default 3)");
    capacity->add_option("-o,--out", csvPath, "write CSV here instead of stdout");

    auto* analyze = app.add_subcommand("analyze", "pixel statistics of an image");
    analyze->add_option("-i,--in", o.in, "image to analyze")->required();
    analyze->add_option("-r,--ref", refPath, "reference image for PSNR");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (protect->parsed()) {
            const lpc::Image8 img = lpc::load_pgm(o.in);
            lpc::PrepConfig cfg;
            cfg.tau = o.tau;
            cfg.lambda = o.lambda;
            const auto key = resolve_key(o.encKey, "LPC_ENC_KEY", "image key");
            lpc::save_pgm(lpc::protect_image(img, key, cfg), o.out);
        } else if (embed->parsed()) {
            const lpc::Image8 img = lpc::load_pgm(o.in);
            const auto key = resolve_key(o.hideKey, "LPC_HIDE_KEY", "hide key");
            lpc::save_pgm(lpc::embed_payload(img, read_file(payloadPath), key), o.out);
        } else if (extract->parsed()) {
            const lpc::Image8 img = lpc::load_pgm(o.in);
            const auto key = resolve_key(o.hideKey, "LPC_HIDE_KEY", "hide key");
            write_file(o.out, lpc::extract_payload(img, key));
        } else if (decrypt->parsed()) {
            const lpc::Image8 img = lpc::load_pgm(o.in);
            const auto key = resolve_key(o.encKey, "LPC_ENC_KEY", "image key");
            lpc::save_pgm(lpc::recover_image(img, key), o.out);
        } else if (recover->parsed()) {
            const lpc::Image8 img = lpc::load_pgm(o.in);
            const auto encKey = resolve_key(o.encKey, "LPC_ENC_KEY", "image key");
            const auto hideKey = resolve_key(o.hideKey, "LPC_HIDE_KEY", "hide key");
            const lpc::RecoverResult res = lpc::recover_full(img, encKey, hideKey);
            lpc::save_pgm(res.image, o.out);
            write_file(payloadPath, res.payload);
        } else if (capacity->parsed()) {
            const lpc::Image8 img = lpc::load_pgm(o.in);
            const std::string csv =
                lpc::capacity_csv_header() + lpc::capacity_csv(o.in, img, taus, o.lambda);
            if (csvPath.empty()) {
                std::cout << csv;
            } else {
                write_file(csvPath, std::vector<uint8_t>(csv.begin(), csv.end()));
            }
        } else if (analyze->parsed()) {
            const lpc::Image8 img = lpc::load_pgm(o.in);
            const lpc::UniformityReport rep = lpc::uniformity_report(img);
            std::cout << "chi_square: " << rep.chiSquare << '\n';
            std::cout << "p_value: " << rep.pValue << '\n';
            for (int k = 0; k < 8; ++k)
                std::cout << "plane_" << k << "_ones: " << rep.planeOnesFraction[k] << '\n';
            std::cout << "diff_entropy_bits: " << rep.diffEntropyBits << '\n';
            if (!refPath.empty())
                std::cout << "psnr_db: " << lpc::psnr(lpc::load_pgm(refPath), img) << '\n';
        }
    } catch (const lpc::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const lpc::CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const lpc::KeyError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const lpc::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
