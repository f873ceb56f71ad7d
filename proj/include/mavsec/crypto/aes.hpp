#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>

#include "mavsec/crypto/types.hpp"

namespace mavsec::crypto {

using Block = std::array<std::uint8_t, 16>;

namespace detail {

constexpr std::uint8_t xtime(std::uint8_t x) noexcept {
  return static_cast<std::uint8_t>((x << 1) ^ ((x & 0x80) ? 0x1b : 0x00));
}

constexpr std::uint8_t gmul(std::uint8_t a, std::uint8_t b) noexcept {
  std::uint8_t p = 0;
  while (b != 0) {
    if (b & 1) p ^= a;
    a = xtime(a);
    b >>= 1;
  }
  return p;
}

constexpr std::uint8_t rotl8(std::uint8_t x, int s) noexcept {
  return static_cast<std::uint8_t>((x << s) | (x >> (8 - s)));
}

// S-box from the multiplicative inverse in GF(2^8) followed by the affine map.
constexpr std::array<std::uint8_t, 256> make_sbox() {
  std::array<std::uint8_t, 256> s{};
  for (int x = 0; x < 256; ++x) {
    std::uint8_t inv = 0;
    if (x != 0) {
      for (int y = 1; y < 256; ++y) {
        if (gmul(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y)) == 1) {
          inv = static_cast<std::uint8_t>(y);
          break;
        }
      }
    }
    s[x] = static_cast<std::uint8_t>(inv ^ rotl8(inv, 1) ^ rotl8(inv, 2) ^ rotl8(inv, 3) ^ rotl8(inv, 4) ^ 0x63);
  }
  return s;
}

inline constexpr std::array<std::uint8_t, 256> kSbox = make_sbox();

constexpr std::array<std::uint8_t, 256> make_inv_sbox() {
  std::array<std::uint8_t, 256> inv{};
  for (int x = 0; x < 256; ++x) inv[kSbox[x]] = static_cast<std::uint8_t>(x);
  return inv;
}

inline constexpr std::array<std::uint8_t, 256> kInvSbox = make_inv_sbox();

constexpr std::uint32_t word(std::uint8_t b0, std::uint8_t b1, std::uint8_t b2, std::uint8_t b3) noexcept {
  return (static_cast<std::uint32_t>(b0) << 24) | (static_cast<std::uint32_t>(b1) << 16) |
         (static_cast<std::uint32_t>(b2) << 8) | b3;
}

constexpr std::uint32_t ror32(std::uint32_t x, int s) noexcept { return (x >> s) | (x << (32 - s)); }

// Column tables for the combined SubBytes/ShiftRows/MixColumns round. The
// other three tables are byte rotations of these, done at lookup time.
constexpr std::array<std::uint32_t, 256> make_te0() {
  std::array<std::uint32_t, 256> t{};
  for (int x = 0; x < 256; ++x) {
    const std::uint8_t s = kSbox[x];
    t[x] = word(gmul(s, 2), s, s, gmul(s, 3));
  }
  return t;
}

constexpr std::array<std::uint32_t, 256> make_td0() {
  std::array<std::uint32_t, 256> t{};
  for (int x = 0; x < 256; ++x) {
    const std::uint8_t s = kInvSbox[x];
    t[x] = word(gmul(s, 14), gmul(s, 9), gmul(s, 13), gmul(s, 11));
  }
  return t;
}

inline constexpr std::array<std::uint32_t, 256> kTe0 = make_te0();
inline constexpr std::array<std::uint32_t, 256> kTd0 = make_td0();

inline std::uint32_t load_be32(const std::uint8_t* p) noexcept { return word(p[0], p[1], p[2], p[3]); }

inline void store_be32(std::uint8_t* p, std::uint32_t v) noexcept {
  p[0] = static_cast<std::uint8_t>(v >> 24);
  p[1] = static_cast<std::uint8_t>(v >> 16);
  p[2] = static_cast<std::uint8_t>(v >> 8);
  p[3] = static_cast<std::uint8_t>(v);
}

inline std::uint32_t sub_word(std::uint32_t w) noexcept {
  return word(kSbox[w >> 24], kSbox[(w >> 16) & 0xff], kSbox[(w >> 8) & 0xff], kSbox[w & 0xff]);
}

// InvMixColumns of one column, used to build the equivalent inverse schedule.
inline std::uint32_t inv_mix_column(std::uint32_t w) noexcept {
  const auto b0 = static_cast<std::uint8_t>(w >> 24), b1 = static_cast<std::uint8_t>(w >> 16),
             b2 = static_cast<std::uint8_t>(w >> 8), b3 = static_cast<std::uint8_t>(w);
  return word(gmul(b0, 14) ^ gmul(b1, 11) ^ gmul(b2, 13) ^ gmul(b3, 9),
              gmul(b0, 9) ^ gmul(b1, 14) ^ gmul(b2, 11) ^ gmul(b3, 13),
              gmul(b0, 13) ^ gmul(b1, 9) ^ gmul(b2, 14) ^ gmul(b3, 11),
              gmul(b0, 11) ^ gmul(b1, 13) ^ gmul(b2, 9) ^ gmul(b3, 14));
}

}  // namespace detail

/// AES-256 with the key schedule expanded once. Table-driven; no constant-time
/// guarantee.
class Aes256 {
 public:
  static constexpr int kRounds = 14;
  static constexpr int kScheduleWords = 4 * (kRounds + 1);

  explicit Aes256(const Key256& key) noexcept {
    using namespace detail;
    for (int i = 0; i < 8; ++i) enc_[i] = load_be32(key.bytes.data() + 4 * i);
    std::uint8_t rcon = 0x01;
    for (int i = 8; i < kScheduleWords; ++i) {
      std::uint32_t t = enc_[i - 1];
      if (i % 8 == 0) {
        t = sub_word((t << 8) | (t >> 24)) ^ (static_cast<std::uint32_t>(rcon) << 24);
        rcon = xtime(rcon);
      } else if (i % 8 == 4) {
        t = sub_word(t);
      }
      enc_[i] = enc_[i - 8] ^ t;
    }
    // Equivalent inverse cipher: reverse round order, InvMixColumns on the
    // middle round keys.
    for (int r = 0; r <= kRounds; ++r) {
      for (int c = 0; c < 4; ++c) {
        const std::uint32_t w = enc_[4 * (kRounds - r) + c];
        dec_[4 * r + c] = (r == 0 || r == kRounds) ? w : inv_mix_column(w);
      }
    }
  }

  void encrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    using namespace detail;
    const std::uint32_t* rk = enc_.data();
    std::uint32_t s0 = load_be32(in) ^ rk[0], s1 = load_be32(in + 4) ^ rk[1], s2 = load_be32(in + 8) ^ rk[2],
                  s3 = load_be32(in + 12) ^ rk[3];
    for (int r = 1; r < kRounds; ++r) {
      rk += 4;
      const std::uint32_t t0 = kTe0[s0 >> 24] ^ ror32(kTe0[(s1 >> 16) & 0xff], 8) ^
                               ror32(kTe0[(s2 >> 8) & 0xff], 16) ^ ror32(kTe0[s3 & 0xff], 24) ^ rk[0];
      const std::uint32_t t1 = kTe0[s1 >> 24] ^ ror32(kTe0[(s2 >> 16) & 0xff], 8) ^
                               ror32(kTe0[(s3 >> 8) & 0xff], 16) ^ ror32(kTe0[s0 & 0xff], 24) ^ rk[1];
      const std::uint32_t t2 = kTe0[s2 >> 24] ^ ror32(kTe0[(s3 >> 16) & 0xff], 8) ^
                               ror32(kTe0[(s0 >> 8) & 0xff], 16) ^ ror32(kTe0[s1 & 0xff], 24) ^ rk[2];
      const std::uint32_t t3 = kTe0[s3 >> 24] ^ ror32(kTe0[(s0 >> 16) & 0xff], 8) ^
                               ror32(kTe0[(s1 >> 8) & 0xff], 16) ^ ror32(kTe0[s2 & 0xff], 24) ^ rk[3];
      s0 = t0;
      s1 = t1;
      s2 = t2;
      s3 = t3;
    }
    rk += 4;
    const auto last = [](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d, std::uint32_t k) {
      return word(kSbox[a >> 24], kSbox[(b >> 16) & 0xff], kSbox[(c >> 8) & 0xff], kSbox[d & 0xff]) ^ k;
    };
    store_be32(out, last(s0, s1, s2, s3, rk[0]));
    store_be32(out + 4, last(s1, s2, s3, s0, rk[1]));
    store_be32(out + 8, last(s2, s3, s0, s1, rk[2]));
    store_be32(out + 12, last(s3, s0, s1, s2, rk[3]));
  }

  void decrypt_block(const std::uint8_t* in, std::uint8_t* out) const noexcept {
    using namespace detail;
    const std::uint32_t* rk = dec_.data();
    std::uint32_t s0 = load_be32(in) ^ rk[0], s1 = load_be32(in + 4) ^ rk[1], s2 = load_be32(in + 8) ^ rk[2],
                  s3 = load_be32(in + 12) ^ rk[3];
    for (int r = 1; r < kRounds; ++r) {
      rk += 4;
      const std::uint32_t t0 = kTd0[s0 >> 24] ^ ror32(kTd0[(s3 >> 16) & 0xff], 8) ^
                               ror32(kTd0[(s2 >> 8) & 0xff], 16) ^ ror32(kTd0[s1 & 0xff], 24) ^ rk[0];
      const std::uint32_t t1 = kTd0[s1 >> 24] ^ ror32(kTd0[(s0 >> 16) & 0xff], 8) ^
                               ror32(kTd0[(s3 >> 8) & 0xff], 16) ^ ror32(kTd0[s2 & 0xff], 24) ^ rk[1];
      const std::uint32_t t2 = kTd0[s2 >> 24] ^ ror32(kTd0[(s1 >> 16) & 0xff], 8) ^
                               ror32(kTd0[(s0 >> 8) & 0xff], 16) ^ ror32(kTd0[s3 & 0xff], 24) ^ rk[2];
      const std::uint32_t t3 = kTd0[s3 >> 24] ^ ror32(kTd0[(s2 >> 16) & 0xff], 8) ^
                               ror32(kTd0[(s1 >> 8) & 0xff], 16) ^ ror32(kTd0[s0 & 0xff], 24) ^ rk[3];
      s0 = t0;
      s1 = t1;
      s2 = t2;
      s3 = t3;
    }
    rk += 4;
    const auto last = [](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d, std::uint32_t k) {
      return word(kInvSbox[a >> 24], kInvSbox[(b >> 16) & 0xff], kInvSbox[(c >> 8) & 0xff], kInvSbox[d & 0xff]) ^ k;
    };
    store_be32(out, last(s0, s3, s2, s1, rk[0]));
    store_be32(out + 4, last(s1, s0, s3, s2, rk[1]));
    store_be32(out + 8, last(s2, s1, s0, s3, rk[2]));
    store_be32(out + 12, last(s3, s2, s1, s0, rk[3]));
  }

  Block encrypt_block(const Block& in) const noexcept {
    Block out{};
    encrypt_block(in.data(), out.data());
    return out;
  }

  Block decrypt_block(const Block& in) const noexcept {
    Block out{};
    decrypt_block(in.data(), out.data());
    return out;
  }

 private:
  std::array<std::uint32_t, kScheduleWords> enc_{};
  std::array<std::uint32_t, kScheduleWords> dec_{};
};

inline Block aes256_encrypt_block(const Key256& key, const Block& block) noexcept {
  return Aes256(key).encrypt_block(block);
}

}  // namespace mavsec::crypto
