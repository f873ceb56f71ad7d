#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "mavsec/bytes.hpp"

namespace mavsec {

inline constexpr std::uint16_t kCrcSeed = 0xFFFF;

namespace detail {

// CRC-16/X.25 (a.k.a. MCRF4XX in the accumulator form): reflected 0x1021,
// i.e. 0x8408 when shifting right.
constexpr std::array<std::uint16_t, 256> make_x25_table() {
  std::array<std::uint16_t, 256> table{};
  for (unsigned n = 0; n < 256; ++n) {
    std::uint16_t c = static_cast<std::uint16_t>(n);
    for (int k = 0; k < 8; ++k) c = (c & 1) ? static_cast<std::uint16_t>((c >> 1) ^ 0x8408) : static_cast<std::uint16_t>(c >> 1);
    table[n] = c;
  }
  return table;
}

inline constexpr auto kX25Table = make_x25_table();

}  // namespace detail

constexpr std::uint16_t crc16_x25_update(std::uint16_t state, std::uint8_t byte) noexcept {
  return static_cast<std::uint16_t>((state >> 8) ^ detail::kX25Table[(state ^ byte) & 0xFF]);
}

constexpr std::uint16_t crc16_x25_update(std::uint16_t state, ByteView data) noexcept {
  for (std::uint8_t b : data) state = crc16_x25_update(state, b);
  return state;
}

constexpr std::uint16_t crc16_x25_update(std::uint16_t state, std::string_view text) noexcept {
  for (char c : text) state = crc16_x25_update(state, static_cast<std::uint8_t>(c));
  return state;
}

}  // namespace mavsec
