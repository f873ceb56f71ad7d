#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mavsec/bytes.hpp"
#include "mavsec/error.hpp"

namespace mavsec::crypto {

struct Key256 {
  std::array<std::uint8_t, 32> bytes{};

  static Key256 from_hex(std::string_view hex) { return {fixed_from_hex<32>(hex)}; }
  std::string to_hex() const { return mavsec::to_hex(bytes); }
  friend bool operator==(const Key256&, const Key256&) = default;
};

struct Iv128 {
  std::array<std::uint8_t, 16> bytes{};

  static Iv128 from_hex(std::string_view hex) { return {fixed_from_hex<16>(hex)}; }
  friend bool operator==(const Iv128&, const Iv128&) = default;
};

struct Nonce96 {
  std::array<std::uint8_t, 12> bytes{};
  std::uint32_t counter = 0;  // initial block counter

  friend bool operator==(const Nonce96&, const Nonce96&) = default;
};

enum class CipherId : std::uint8_t { None, AesCtr, AesCbc, Rc4, ChaCha20 };

inline constexpr std::array<CipherId, 5> kAllCiphers = {CipherId::None, CipherId::AesCtr, CipherId::AesCbc,
                                                        CipherId::Rc4, CipherId::ChaCha20};

constexpr std::string_view to_string(CipherId id) noexcept {
  switch (id) {
    case CipherId::None: return "none";
    case CipherId::AesCtr: return "aes-ctr";
    case CipherId::AesCbc: return "aes-cbc";
    case CipherId::Rc4: return "rc4";
    case CipherId::ChaCha20: return "chacha20";
  }
  return "?";
}

inline std::optional<CipherId> cipher_from_string(std::string_view s) noexcept {
  for (CipherId id : kAllCiphers) {
    if (to_string(id) == s) return id;
  }
  return std::nullopt;
}

inline CipherId parse_cipher(std::string_view s) {
  if (auto id = cipher_from_string(s)) return *id;
  throw Error(Errc::ConfigError, "unknown cipher '" + std::string(s) + "'");
}

}  // namespace mavsec::crypto
