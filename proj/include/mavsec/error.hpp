#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mavsec {

enum class Errc {
  BadMagic,
  Truncated,
  ChecksumMismatch,
  UnknownMessageId,
  InvalidFrame,
  BadLength,
  BadPadding,
  BadKeyLength,
  CounterExhausted,
  PayloadTooLong,
  HeartbeatRequired,
  ReplayDetected,
  CounterRecoveryFailed,
  ConfigMismatch,
  ConfigError,
  BindFailure,
  HarnessFailure,
  MismatchedDurations,
  IoError,
};

constexpr std::string_view to_string(Errc e) noexcept {
  switch (e) {
    case Errc::BadMagic: return "BadMagic";
    case Errc::Truncated: return "Truncated";
    case Errc::ChecksumMismatch: return "ChecksumMismatch";
    case Errc::UnknownMessageId: return "UnknownMessageId";
    case Errc::InvalidFrame: return "InvalidFrame";
    case Errc::BadLength: return "BadLength";
    case Errc::BadPadding: return "BadPadding";
    case Errc::BadKeyLength: return "BadKeyLength";
    case Errc::CounterExhausted: return "CounterExhausted";
    case Errc::PayloadTooLong: return "PayloadTooLong";
    case Errc::HeartbeatRequired: return "HeartbeatRequired";
    case Errc::ReplayDetected: return "ReplayDetected";
    case Errc::CounterRecoveryFailed: return "CounterRecoveryFailed";
    case Errc::ConfigMismatch: return "ConfigMismatch";
    case Errc::ConfigError: return "ConfigError";
    case Errc::BindFailure: return "BindFailure";
    case Errc::HarnessFailure: return "HarnessFailure";
    case Errc::MismatchedDurations: return "MismatchedDurations";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the Errc codes so
/// callers can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  explicit Error(Errc code) : std::runtime_error(std::string(to_string(code))), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mavsec
