#pragma once

#include <array>
#include <cstdint>

#include "mavsec/bytes.hpp"
#include "mavsec/crypto/types.hpp"

namespace mavsec::crypto {

/// ChaCha20 with a 96-bit nonce and 32-bit block counter (20 rounds).
class ChaCha20 {
 public:
  static constexpr std::size_t kBlockLen = 64;

  ChaCha20(const Key256& key, const Nonce96& nonce) noexcept {
    state_[0] = 0x61707865;
    state_[1] = 0x3320646e;
    state_[2] = 0x79622d32;
    state_[3] = 0x6b206574;
    for (int k = 0; k < 8; ++k) state_[4 + k] = load_le32(key.bytes.data() + 4 * k);
    state_[12] = nonce.counter;
    for (int k = 0; k < 3; ++k) state_[13 + k] = load_le32(nonce.bytes.data() + 4 * k);
  }

  std::uint32_t block_counter() const noexcept { return state_[12]; }

  /// Produces the keystream block for the current counter, then advances it.
  std::array<std::uint8_t, kBlockLen> next_block() noexcept {
    std::array<std::uint32_t, 16> w;
    block_words(w);
    std::array<std::uint8_t, kBlockLen> out;
    for (std::size_t k = 0; k < 16; ++k) store_le<std::uint32_t>(out.data() + 4 * k, w[k]);
    return out;
  }

  /// XORs keystream into `data`; each call starts on a fresh block.
  void xcrypt(std::span<std::uint8_t> data) noexcept {
    std::array<std::uint32_t, 16> w;
    std::size_t off = 0;
    for (; off + kBlockLen <= data.size(); off += kBlockLen) {
      block_words(w);
      for (std::size_t k = 0; k < 16; ++k) {
        std::uint8_t* p = data.data() + off + 4 * k;
        store_le<std::uint32_t>(p, load_le<std::uint32_t>(p) ^ w[k]);
      }
    }
    if (off < data.size()) {
      block_words(w);
      for (std::size_t k = 0; off + k < data.size(); ++k) {
        data[off + k] ^= static_cast<std::uint8_t>(w[k / 4] >> (8 * (k % 4)));
      }
    }
  }

 private:
  static constexpr std::uint32_t rotl(std::uint32_t v, int s) noexcept { return (v << s) | (v >> (32 - s)); }

  // Locals rather than array slots so the rounds stay in registers.
  void block_words(std::array<std::uint32_t, 16>& out) noexcept {
    std::uint32_t x0 = state_[0], x1 = state_[1], x2 = state_[2], x3 = state_[3];
    std::uint32_t x4 = state_[4], x5 = state_[5], x6 = state_[6], x7 = state_[7];
    std::uint32_t x8 = state_[8], x9 = state_[9], x10 = state_[10], x11 = state_[11];
    std::uint32_t x12 = state_[12], x13 = state_[13], x14 = state_[14], x15 = state_[15];
    const auto qr = [](std::uint32_t& a, std::uint32_t& b, std::uint32_t& c, std::uint32_t& d) {
      a += b; d = rotl(d ^ a, 16);
      c += d; b = rotl(b ^ c, 12);
      a += b; d = rotl(d ^ a, 8);
      c += d; b = rotl(b ^ c, 7);
    };
    for (int round = 0; round < 10; ++round) {
      qr(x0, x4, x8, x12);
      qr(x1, x5, x9, x13);
      qr(x2, x6, x10, x14);
      qr(x3, x7, x11, x15);
      qr(x0, x5, x10, x15);
      qr(x1, x6, x11, x12);
      qr(x2, x7, x8, x13);
      qr(x3, x4, x9, x14);
    }
    out = {x0 + state_[0],   x1 + state_[1],   x2 + state_[2],   x3 + state_[3],
           x4 + state_[4],   x5 + state_[5],   x6 + state_[6],   x7 + state_[7],
           x8 + state_[8],   x9 + state_[9],   x10 + state_[10], x11 + state_[11],
           x12 + state_[12], x13 + state_[13], x14 + state_[14], x15 + state_[15]};
    ++state_[12];
  }

  std::array<std::uint32_t, 16> state_{};
};

inline Bytes chacha20_xcrypt(const Key256& key, const Nonce96& nonce, ByteView data) {
  Bytes out(data.begin(), data.end());
  ChaCha20(key, nonce).xcrypt(out);
  return out;
}

}  // namespace mavsec::crypto
