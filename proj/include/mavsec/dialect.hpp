#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>

#include "mavsec/crc.hpp"
#include "mavsec/error.hpp"

namespace mavsec {

struct FieldSpec {
  std::string_view type;
  std::string_view name;
  std::uint8_t array_len = 0;
};

/// CRC_EXTRA seed: X.25 over "NAME " followed by "type name " for each
/// field in wire order (array fields also fold in their length), folded to
/// one byte. This is the procedure MAVLink generators use, so the constants
/// below interoperate with stock MAVLink 2 peers.
constexpr std::uint8_t compute_crc_extra(std::string_view msg_name,
                                         std::initializer_list<FieldSpec> wire_fields) noexcept {
  std::uint16_t crc = crc16_x25_update(kCrcSeed, msg_name);
  crc = crc16_x25_update(crc, std::uint8_t{' '});
  for (const FieldSpec& f : wire_fields) {
    crc = crc16_x25_update(crc, f.type);
    crc = crc16_x25_update(crc, std::uint8_t{' '});
    crc = crc16_x25_update(crc, f.name);
    crc = crc16_x25_update(crc, std::uint8_t{' '});
    if (f.array_len != 0) crc = crc16_x25_update(crc, f.array_len);
  }
  return static_cast<std::uint8_t>((crc & 0xFF) ^ (crc >> 8));
}

struct MessageDef {
  std::uint32_t msg_id = 0;  // 24-bit
  std::string name;
  std::uint8_t payload_len = 0;
  std::uint8_t crc_extra = 0;

  friend bool operator==(const MessageDef&, const MessageDef&) = default;
};

class Dialect {
 public:
  Dialect() = default;
  Dialect(std::initializer_list<MessageDef> defs) {
    for (const auto& d : defs) add(d);
  }

  void add(MessageDef def) {
    if (def.msg_id > 0xFFFFFF) throw Error(Errc::ConfigError, "msg_id exceeds 24 bits");
    const auto id = def.msg_id;
    if (!defs_.emplace(id, std::move(def)).second) {
      throw Error(Errc::ConfigError, "duplicate msg_id " + std::to_string(id));
    }
  }

  /// nullptr on miss.
  const MessageDef* find(std::uint32_t msg_id) const noexcept {
    auto it = defs_.find(msg_id);
    return it == defs_.end() ? nullptr : &it->second;
  }

  const MessageDef& at(std::uint32_t msg_id) const {
    if (const MessageDef* d = find(msg_id)) return *d;
    throw Error(Errc::UnknownMessageId, "msg_id " + std::to_string(msg_id));
  }

  std::size_t size() const noexcept { return defs_.size(); }
  auto begin() const noexcept { return defs_.begin(); }
  auto end() const noexcept { return defs_.end(); }

 private:
  std::map<std::uint32_t, MessageDef> defs_;
};

namespace msg {

inline constexpr std::uint32_t kHeartbeatId = 0;
inline constexpr std::uint32_t kSysStatusId = 1;
inline constexpr std::uint32_t kAttitudeId = 30;
inline constexpr std::uint32_t kGlobalPositionIntId = 33;

// Seed constants, checked against compute_crc_extra in the unit tests and
// equal to the values shipped in the common MAVLink dialect.
inline constexpr std::uint8_t kHeartbeatCrcExtra = compute_crc_extra(
    "HEARTBEAT", {{"uint32_t", "custom_mode"},
                  {"uint8_t", "type"},
                  {"uint8_t", "autopilot"},
                  {"uint8_t", "base_mode"},
                  {"uint8_t", "system_status"},
                  {"uint8_t", "mavlink_version"}});

inline constexpr std::uint8_t kSysStatusCrcExtra = compute_crc_extra(
    "SYS_STATUS", {{"uint32_t", "onboard_control_sensors_present"},
                   {"uint32_t", "onboard_control_sensors_enabled"},
                   {"uint32_t", "onboard_control_sensors_health"},
                   {"uint16_t", "load"},
                   {"uint16_t", "voltage_battery"},
                   {"int16_t", "current_battery"},
                   {"uint16_t", "drop_rate_comm"},
                   {"uint16_t", "errors_comm"},
                   {"uint16_t", "errors_count1"},
                   {"uint16_t", "errors_count2"},
                   {"uint16_t", "errors_count3"},
                   {"uint16_t", "errors_count4"},
                   {"int8_t", "battery_remaining"}});

inline constexpr std::uint8_t kAttitudeCrcExtra = compute_crc_extra(
    "ATTITUDE", {{"uint32_t", "time_boot_ms"},
                 {"float", "roll"},
                 {"float", "pitch"},
                 {"float", "yaw"},
                 {"float", "rollspeed"},
                 {"float", "pitchspeed"},
                 {"float", "yawspeed"}});

inline constexpr std::uint8_t kGlobalPositionIntCrcExtra = compute_crc_extra(
    "GLOBAL_POSITION_INT", {{"uint32_t", "time_boot_ms"},
                            {"int32_t", "lat"},
                            {"int32_t", "lon"},
                            {"int32_t", "alt"},
                            {"int32_t", "relative_alt"},
                            {"int16_t", "vx"},
                            {"int16_t", "vy"},
                            {"int16_t", "vz"},
                            {"uint16_t", "hdg"}});

}  // namespace msg

/// HEARTBEAT, SYS_STATUS, ATTITUDE and GLOBAL_POSITION_INT (no extensions).
inline const Dialect& minimal_dialect() {
  static const Dialect dialect{
      {msg::kHeartbeatId, "HEARTBEAT", 9, msg::kHeartbeatCrcExtra},
      {msg::kSysStatusId, "SYS_STATUS", 31, msg::kSysStatusCrcExtra},
      {msg::kAttitudeId, "ATTITUDE", 28, msg::kAttitudeCrcExtra},
      {msg::kGlobalPositionIntId, "GLOBAL_POSITION_INT", 28, msg::kGlobalPositionIntCrcExtra},
  };
  return dialect;
}

}  // namespace mavsec
