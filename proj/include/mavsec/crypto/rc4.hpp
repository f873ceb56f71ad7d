#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <utility>

#include "mavsec/bytes.hpp"

namespace mavsec::crypto {

/// RC4 permutation and PRGA indices. Only swaps touch `s`, so it stays a
/// permutation of 0..255. No keystream bytes are dropped after scheduling.
struct Rc4State {
  std::array<std::uint8_t, 256> s{};
  std::uint8_t i = 0;
  std::uint8_t j = 0;

  friend bool operator==(const Rc4State&, const Rc4State&) = default;
};

/// Key scheduling. Key length must be 1..256 bytes.
inline Rc4State rc4_ksa(ByteView key) {
  if (key.empty() || key.size() > 256) {
    throw Error(Errc::BadKeyLength, "RC4 key must be 1..256 bytes, got " + std::to_string(key.size()));
  }
  Rc4State st;
  std::iota(st.s.begin(), st.s.end(), std::uint8_t{0});
  std::uint8_t j = 0;
  for (std::size_t i = 0; i < 256; ++i) {
    j = static_cast<std::uint8_t>(j + st.s[i] + key[i % key.size()]);
    std::swap(st.s[i], st.s[j]);
  }
  return st;
}

inline void rc4_xcrypt_inplace(Rc4State& st, std::span<std::uint8_t> data) noexcept {
  std::uint8_t i = st.i, j = st.j;
  for (std::uint8_t& b : data) {
    i = static_cast<std::uint8_t>(i + 1);
    j = static_cast<std::uint8_t>(j + st.s[i]);
    std::swap(st.s[i], st.s[j]);
    b ^= st.s[static_cast<std::uint8_t>(st.s[i] + st.s[j])];
  }
  st.i = i;
  st.j = j;
}

/// Advances `st` by data.size() keystream bytes.
inline Bytes rc4_xcrypt(Rc4State& st, ByteView data) {
  Bytes out(data.begin(), data.end());
  rc4_xcrypt_inplace(st, out);
  return out;
}

}  // namespace mavsec::crypto
