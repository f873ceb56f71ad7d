#pragma once

#include <algorithm>
#include <cstdint>

#include "mavsec/bytes.hpp"
#include "mavsec/crypto/aes.hpp"

namespace mavsec::crypto {

inline constexpr std::size_t kAesBlock = 16;

namespace detail {

// Big-endian 128-bit increment (mod 2^128).
inline void increment_be128(Block& ctr) noexcept {
  for (int i = 15; i >= 0; --i) {
    if (++ctr[static_cast<std::size_t>(i)] != 0) break;
  }
}

}  // namespace detail

/// CTR keystream application; block i is encrypted counter IV+i.
/// Encryption and decryption are the same call.
inline void ctr_xcrypt_inplace(const Aes256& aes, const Iv128& iv, std::span<std::uint8_t> data) noexcept {
  Block counter = iv.bytes;
  Block keystream{};
  for (std::size_t off = 0; off < data.size(); off += kAesBlock) {
    aes.encrypt_block(counter.data(), keystream.data());
    const std::size_t n = std::min(kAesBlock, data.size() - off);
    for (std::size_t k = 0; k < n; ++k) data[off + k] ^= keystream[k];
    detail::increment_be128(counter);
  }
}

inline Bytes ctr_xcrypt(const Key256& key, const Iv128& iv, ByteView data) {
  Bytes out(data.begin(), data.end());
  ctr_xcrypt_inplace(Aes256(key), iv, out);
  return out;
}

/// PKCS#7-padded length: always adds 1..16 bytes.
constexpr std::size_t cbc_padded_len(std::size_t plaintext_len) noexcept {
  return (plaintext_len / kAesBlock + 1) * kAesBlock;
}

/// Raw CBC over whole blocks, no padding. `data.size()` must be a multiple of 16.
inline void cbc_encrypt_blocks(const Aes256& aes, const Iv128& iv, std::span<std::uint8_t> data) {
  if (data.size() % kAesBlock != 0) throw Error(Errc::BadLength, "CBC input is not a whole number of blocks");
  const std::uint8_t* prev = iv.bytes.data();
  for (std::size_t off = 0; off < data.size(); off += kAesBlock) {
    std::uint8_t* blk = data.data() + off;
    for (std::size_t k = 0; k < kAesBlock; ++k) blk[k] ^= prev[k];
    aes.encrypt_block(blk, blk);
    prev = blk;
  }
}

inline void cbc_decrypt_blocks(const Aes256& aes, const Iv128& iv, std::span<std::uint8_t> data) {
  if (data.size() % kAesBlock != 0) throw Error(Errc::BadLength, "CBC input is not a whole number of blocks");
  Block prev = iv.bytes;
  Block saved{};
  for (std::size_t off = 0; off < data.size(); off += kAesBlock) {
    std::uint8_t* blk = data.data() + off;
    std::copy_n(blk, kAesBlock, saved.begin());
    aes.decrypt_block(blk, blk);
    for (std::size_t k = 0; k < kAesBlock; ++k) blk[k] ^= prev[k];
    prev = saved;
  }
}

inline Bytes cbc_encrypt(const Aes256& aes, const Iv128& iv, ByteView plaintext) {
  const std::size_t padded = cbc_padded_len(plaintext.size());
  Bytes out(padded, static_cast<std::uint8_t>(padded - plaintext.size()));
  std::copy(plaintext.begin(), plaintext.end(), out.begin());
  cbc_encrypt_blocks(aes, iv, out);
  return out;
}

inline Bytes cbc_decrypt(const Aes256& aes, const Iv128& iv, ByteView ciphertext) {
  if (ciphertext.empty() || ciphertext.size() % kAesBlock != 0) {
    throw Error(Errc::BadLength, "CBC ciphertext length " + std::to_string(ciphertext.size()));
  }
  Bytes out(ciphertext.begin(), ciphertext.end());
  cbc_decrypt_blocks(aes, iv, out);
  const std::uint8_t pad = out.back();
  if (pad == 0 || pad > kAesBlock) throw Error(Errc::BadPadding, "pad byte out of range");
  for (std::size_t k = out.size() - pad; k < out.size(); ++k) {
    if (out[k] != pad) throw Error(Errc::BadPadding, "inconsistent pad bytes");
  }
  out.resize(out.size() - pad);
  return out;
}

inline Bytes cbc_encrypt(const Key256& key, const Iv128& iv, ByteView plaintext) {
  return cbc_encrypt(Aes256(key), iv, plaintext);
}

inline Bytes cbc_decrypt(const Key256& key, const Iv128& iv, ByteView ciphertext) {
  return cbc_decrypt(Aes256(key), iv, ciphertext);
}

}  // namespace mavsec::crypto
