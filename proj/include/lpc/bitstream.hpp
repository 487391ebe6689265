#pragma once

#include <cstdint>
#include <vector>

#include "lpc/errors.hpp"

namespace lpc {

// MSB-first bit streams over a byte buffer. Field values are written
// big-endian within their width.

class BitWriter {
  public:
    void put(uint64_t value, int width) {
        for (int b = width - 1; b >= 0; --b) put_bit((value >> b) & 1u);
    }
    void put_bit(uint64_t bit) {
        if (nbits_ % 8 == 0) buf_.push_back(0);
        if (bit) buf_[nbits_ / 8] |= static_cast<uint8_t>(0x80u >> (nbits_ % 8));
        ++nbits_;
    }
    size_t bit_size() const { return nbits_; }
    const std::vector<uint8_t>& bytes() const { return buf_; }

    // bits as 0/1 values, handy for scattering into room addresses
    std::vector<uint8_t> bits() const {
        std::vector<uint8_t> out(nbits_);
        for (size_t i = 0; i < nbits_; ++i) out[i] = (buf_[i / 8] >> (7 - i % 8)) & 1u;
        return out;
    }

  private:
    std::vector<uint8_t> buf_;
    size_t nbits_ = 0;
};

class BitReader {
  public:
    BitReader(const uint8_t* bits, size_t nbits) : bits_(bits), nbits_(nbits) {}
    explicit BitReader(const std::vector<uint8_t>& bits) : bits_(bits.data()), nbits_(bits.size()) {}
    // the reader only borrows the buffer, so a temporary cannot back it
    explicit BitReader(std::vector<uint8_t>&&) = delete;

    // Reads a width-bit big-endian field from a stream of 0/1 bytes.
    uint64_t get(int width) {
        uint64_t v = 0;
        for (int i = 0; i < width; ++i) v = (v << 1) | get_bit();
        return v;
    }
    uint64_t get_bit() {
        if (pos_ >= nbits_) throw FormatError("bitstream: read past end");
        return bits_[pos_++] & 1u;
    }
    size_t remaining() const { return nbits_ - pos_; }
    size_t pos() const { return pos_; }

  private:
    const uint8_t* bits_;
    size_t nbits_;
    size_t pos_ = 0;
};

}  // namespace lpc
