#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpc/image.hpp"

namespace lpc {

// 256-bit key parsed from 64 hex characters.
std::vector<uint8_t> parse_key_hex(const std::string& hex);

// Deterministic keystream: 32-byte blocks keyed by (key, label, counter).
std::vector<uint8_t> keystream(const std::vector<uint8_t>& key, const std::string& label,
                               size_t nBytes);

// XOR a 0/1 bit vector against the keystream, MSB-first within each byte.
// Involutive: applying twice restores the input.
void xor_bits(std::vector<uint8_t>& bits, const std::vector<uint8_t>& key,
              const std::string& label);

// XOR every pixel with its keystream byte through a per-pixel mask
// (0xFF = whole pixel, 0xFE = leave the lowest bit alone).
void xor_image_masked(Image8& img, const std::vector<uint8_t>& key, const std::string& label,
                      const std::vector<uint8_t>& mask);

inline int plane0_bit(const Image8& img, size_t idx) { return img.pixels[idx] & 1; }
inline void set_plane0_bit(Image8& img, size_t idx, int bit) {
    img.pixels[idx] = static_cast<uint8_t>((img.pixels[idx] & 0xFE) | (bit & 1));
}

}  // namespace lpc
