#include "lpc/cipher.hpp"

#include <openssl/hmac.h>

#include <cctype>
#include <cstring>

#include "lpc/errors.hpp"
#include "lpc/kernels.hpp"

namespace lpc {

std::vector<uint8_t> parse_key_hex(const std::string& hex) {
    if (hex.size() != 64) throw ConfigError("key must be 64 hex characters");
    auto nibble = [](char ch) -> int {
        if (ch >= '0' && ch <= '9') return ch - '0';
        if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
        if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
        throw ConfigError("key must be 64 hex characters");
    };
    std::vector<uint8_t> key(32);
    for (size_t i = 0; i < 32; ++i)
        key[i] = static_cast<uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
    return key;
}

std::vector<uint8_t> keystream(const std::vector<uint8_t>& key, const std::string& label,
                               size_t nBytes) {
    std::vector<uint8_t> out(nBytes);
    std::vector<uint8_t> msg(label.size() + 8);
    std::memcpy(msg.data(), label.data(), label.size());
    uint8_t digest[32];
    for (size_t off = 0, counter = 0; off < nBytes; off += 32, ++counter) {
        for (int b = 0; b < 8; ++b)
            msg[label.size() + b] = static_cast<uint8_t>(counter >> (8 * (7 - b)));
        unsigned int len = 0;
        HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), msg.data(), msg.size(),
             digest, &len);
        std::memcpy(out.data() + off, digest, std::min<size_t>(32, nBytes - off));
    }
    return out;
}

void xor_bits(std::vector<uint8_t>& bits, const std::vector<uint8_t>& key,
              const std::string& label) {
    auto ks = keystream(key, label, (bits.size() + 7) / 8);
    for (size_t i = 0; i < bits.size(); ++i) bits[i] ^= (ks[i / 8] >> (7 - i % 8)) & 1u;
}

void xor_image_masked(Image8& img, const std::vector<uint8_t>& key, const std::string& label,
                      const std::vector<uint8_t>& mask) {
    if (mask.size() != img.pixels.size()) throw ConfigError("mask size mismatch");
    auto ks = keystream(key, label, img.pixels.size());
    kernels::ops().xor_masked(img.pixels.data(), ks.data(), mask.data(), img.pixels.size());
}

}  // namespace lpc
