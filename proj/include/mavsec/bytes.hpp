#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "mavsec/error.hpp"

namespace mavsec {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline std::string to_hex(ByteView data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

namespace detail {
constexpr int hex_value(char c) noexcept {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace detail

/// Decodes an even-length hex string; throws ConfigError on malformed input.
inline Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw Error(Errc::ConfigError, "odd-length hex string");
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = detail::hex_value(hex[2 * i]);
    const int lo = detail::hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw Error(Errc::ConfigError, "invalid hex digit");
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

template <std::size_t N>
std::array<std::uint8_t, N> fixed_from_hex(std::string_view hex) {
  if (hex.size() != 2 * N) {
    throw Error(Errc::ConfigError,
                "expected " + std::to_string(2 * N) + " hex characters, got " +
                    std::to_string(hex.size()));
  }
  const Bytes raw = from_hex(hex);
  std::array<std::uint8_t, N> out{};
  std::copy(raw.begin(), raw.end(), out.begin());
  return out;
}

inline ByteView as_bytes(std::string_view s) noexcept {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

// Little-endian field access used by the wire format and message payloads.
template <typename T>
void store_le(std::uint8_t* dst, T value) noexcept {
  using U = std::make_unsigned_t<T>;
  auto u = static_cast<U>(value);
  for (std::size_t i = 0; i < sizeof(T); ++i) dst[i] = static_cast<std::uint8_t>(u >> (8 * i));
}

template <typename T>
T load_le(const std::uint8_t* src) noexcept {
  using U = std::make_unsigned_t<T>;
  U u = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) u |= static_cast<U>(static_cast<U>(src[i]) << (8 * i));
  return static_cast<T>(u);
}

inline void store_be64(std::uint8_t* dst, std::uint64_t v) noexcept {
  for (int i = 7; i >= 0; --i) {
    dst[i] = static_cast<std::uint8_t>(v);
    v >>= 8;
  }
}

inline std::uint32_t load_le32(const std::uint8_t* p) noexcept { return load_le<std::uint32_t>(p); }

}  // namespace mavsec
