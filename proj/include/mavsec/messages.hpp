#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mavsec/bytes.hpp"
#include "mavsec/dialect.hpp"

namespace mavsec::msg {

// Payload codecs for the minimal dialect. Fields are laid out in MAVLink
// wire order (largest type first) and never zero-truncated.

struct Heartbeat {
  static constexpr std::uint32_t kId = kHeartbeatId;
  static constexpr std::size_t kLen = 9;
  static constexpr std::uint8_t kMavlinkVersion = 3;
  static constexpr std::uint8_t kMaxType = 44;       // MAV_TYPE upper bound
  static constexpr std::uint8_t kMaxAutopilot = 20;  // MAV_AUTOPILOT upper bound
  static constexpr std::uint8_t kMaxSystemStatus = 8;

  std::uint32_t custom_mode = 0;
  std::uint8_t type = 0;
  std::uint8_t autopilot = 0;
  std::uint8_t base_mode = 0;
  std::uint8_t system_status = 0;
  std::uint8_t mavlink_version = kMavlinkVersion;

  Bytes encode() const {
    Bytes p(kLen);
    store_le(p.data(), custom_mode);
    p[4] = type;
    p[5] = autopilot;
    p[6] = base_mode;
    p[7] = system_status;
    p[8] = mavlink_version;
    return p;
  }

  static std::optional<Heartbeat> decode(ByteView p) {
    if (p.size() != kLen) return std::nullopt;
    Heartbeat h;
    h.custom_mode = load_le<std::uint32_t>(p.data());
    h.type = p[4];
    h.autopilot = p[5];
    h.base_mode = p[6];
    h.system_status = p[7];
    h.mavlink_version = p[8];
    return h;
  }

  bool well_formed() const noexcept {
    return type <= kMaxType && autopilot <= kMaxAutopilot && system_status <= kMaxSystemStatus &&
           mavlink_version == kMavlinkVersion;
  }

  friend bool operator==(const Heartbeat&, const Heartbeat&) = default;
};

struct SysStatus {
  static constexpr std::uint32_t kId = kSysStatusId;
  static constexpr std::size_t kLen = 31;

  std::uint32_t sensors_present = 0;
  std::uint32_t sensors_enabled = 0;
  std::uint32_t sensors_health = 0;
  std::uint16_t load = 0;             // 0.1 %
  std::uint16_t voltage_battery = 0;  // mV
  std::int16_t current_battery = -1;  // cA
  std::uint16_t drop_rate_comm = 0;   // 0.01 %
  std::uint16_t errors_comm = 0;
  std::array<std::uint16_t, 4> errors_count{};
  std::int8_t battery_remaining = -1;  // %

  Bytes encode() const {
    Bytes p(kLen);
    store_le(p.data() + 0, sensors_present);
    store_le(p.data() + 4, sensors_enabled);
    store_le(p.data() + 8, sensors_health);
    store_le(p.data() + 12, load);
    store_le(p.data() + 14, voltage_battery);
    store_le(p.data() + 16, current_battery);
    store_le(p.data() + 18, drop_rate_comm);
    store_le(p.data() + 20, errors_comm);
    for (std::size_t k = 0; k < 4; ++k) store_le(p.data() + 22 + 2 * k, errors_count[k]);
    p[30] = static_cast<std::uint8_t>(battery_remaining);
    return p;
  }

  static std::optional<SysStatus> decode(ByteView p) {
    if (p.size() != kLen) return std::nullopt;
    SysStatus s;
    s.sensors_present = load_le<std::uint32_t>(p.data() + 0);
    s.sensors_enabled = load_le<std::uint32_t>(p.data() + 4);
    s.sensors_health = load_le<std::uint32_t>(p.data() + 8);
    s.load = load_le<std::uint16_t>(p.data() + 12);
    s.voltage_battery = load_le<std::uint16_t>(p.data() + 14);
    s.current_battery = load_le<std::int16_t>(p.data() + 16);
    s.drop_rate_comm = load_le<std::uint16_t>(p.data() + 18);
    s.errors_comm = load_le<std::uint16_t>(p.data() + 20);
    for (std::size_t k = 0; k < 4; ++k) s.errors_count[k] = load_le<std::uint16_t>(p.data() + 22 + 2 * k);
    s.battery_remaining = static_cast<std::int8_t>(p[30]);
    return s;
  }

  bool well_formed() const noexcept {
    return load <= 1000 && drop_rate_comm <= 10000 && battery_remaining >= -1 && battery_remaining <= 100;
  }

  friend bool operator==(const SysStatus&, const SysStatus&) = default;
};

namespace detail {
inline float load_f32(const std::uint8_t* p) noexcept { return std::bit_cast<float>(load_le<std::uint32_t>(p)); }
inline void store_f32(std::uint8_t* p, float v) noexcept { store_le(p, std::bit_cast<std::uint32_t>(v)); }
inline bool within(float v, double bound) noexcept { return std::isfinite(v) && std::fabs(v) <= bound; }
}  // namespace detail

struct Attitude {
  static constexpr std::uint32_t kId = kAttitudeId;
  static constexpr std::size_t kLen = 28;
  static constexpr double kMaxRate = 50.0;  // rad/s

  std::uint32_t time_boot_ms = 0;
  float roll = 0, pitch = 0, yaw = 0;
  float rollspeed = 0, pitchspeed = 0, yawspeed = 0;

  Bytes encode() const {
    Bytes p(kLen);
    store_le(p.data(), time_boot_ms);
    const float v[6] = {roll, pitch, yaw, rollspeed, pitchspeed, yawspeed};
    for (std::size_t k = 0; k < 6; ++k) detail::store_f32(p.data() + 4 + 4 * k, v[k]);
    return p;
  }

  static std::optional<Attitude> decode(ByteView p) {
    if (p.size() != kLen) return std::nullopt;
    Attitude a;
    a.time_boot_ms = load_le<std::uint32_t>(p.data());
    float* v[6] = {&a.roll, &a.pitch, &a.yaw, &a.rollspeed, &a.pitchspeed, &a.yawspeed};
    for (std::size_t k = 0; k < 6; ++k) *v[k] = detail::load_f32(p.data() + 4 + 4 * k);
    return a;
  }

  bool well_formed() const noexcept {
    constexpr double pi = std::numbers::pi + 1e-6;
    return detail::within(roll, pi) && detail::within(pitch, pi / 2) && detail::within(yaw, pi) &&
           detail::within(rollspeed, kMaxRate) && detail::within(pitchspeed, kMaxRate) &&
           detail::within(yawspeed, kMaxRate);
  }

  friend bool operator==(const Attitude&, const Attitude&) = default;
};

struct GlobalPositionInt {
  static constexpr std::uint32_t kId = kGlobalPositionIntId;
  static constexpr std::size_t kLen = 28;

  std::uint32_t time_boot_ms = 0;
  std::int32_t lat = 0;  // degE7
  std::int32_t lon = 0;  // degE7
  std::int32_t alt = 0;  // mm AMSL
  std::int32_t relative_alt = 0;
  std::int16_t vx = 0, vy = 0, vz = 0;  // cm/s
  std::uint16_t hdg = UINT16_MAX;       // cdeg, UINT16_MAX if unknown

  Bytes encode() const {
    Bytes p(kLen);
    store_le(p.data() + 0, time_boot_ms);
    store_le(p.data() + 4, lat);
    store_le(p.data() + 8, lon);
    store_le(p.data() + 12, alt);
    store_le(p.data() + 16, relative_alt);
    store_le(p.data() + 20, vx);
    store_le(p.data() + 22, vy);
    store_le(p.data() + 24, vz);
    store_le(p.data() + 26, hdg);
    return p;
  }

  static std::optional<GlobalPositionInt> decode(ByteView p) {
    if (p.size() != kLen) return std::nullopt;
    GlobalPositionInt g;
    g.time_boot_ms = load_le<std::uint32_t>(p.data() + 0);
    g.lat = load_le<std::int32_t>(p.data() + 4);
    g.lon = load_le<std::int32_t>(p.data() + 8);
    g.alt = load_le<std::int32_t>(p.data() + 12);
    g.relative_alt = load_le<std::int32_t>(p.data() + 16);
    g.vx = load_le<std::int16_t>(p.data() + 20);
    g.vy = load_le<std::int16_t>(p.data() + 22);
    g.vz = load_le<std::int16_t>(p.data() + 24);
    g.hdg = load_le<std::uint16_t>(p.data() + 26);
    return g;
  }

  bool well_formed() const noexcept {
    return lat >= -900000000 && lat <= 900000000 && lon >= -1800000000 && lon <= 1800000000 &&
           (hdg < 36000 || hdg == UINT16_MAX);
  }

  friend bool operator==(const GlobalPositionInt&, const GlobalPositionInt&) = default;
};

namespace detail {
template <typename M>
bool decodes_well_formed(ByteView payload) {
  auto m = M::decode(payload);
  return m && m->well_formed();
}
}  // namespace detail

/// Message-level sanity check of a decrypted payload. This is the only
/// wrong-key signal available since the channel carries no MAC. Ids outside
/// the minimal dialect have no rules and pass.
inline bool payload_well_formed(std::uint32_t msg_id, ByteView payload) {
  switch (msg_id) {
    case Heartbeat::kId: return detail::decodes_well_formed<Heartbeat>(payload);
    case SysStatus::kId: return detail::decodes_well_formed<SysStatus>(payload);
    case Attitude::kId: return detail::decodes_well_formed<Attitude>(payload);
    case GlobalPositionInt::kId: return detail::decodes_well_formed<GlobalPositionInt>(payload);
    default: return true;
  }
}

using FieldList = std::vector<std::pair<std::string, std::string>>;

/// Decoded field name/value pairs for logging; empty if the payload does not decode.
inline FieldList describe(std::uint32_t msg_id, ByteView payload) {
  FieldList out;
  const auto f = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return std::string(buf);
  };
  const auto i = [](long long v) { return std::to_string(v); };
  switch (msg_id) {
    case Heartbeat::kId:
      if (auto m = Heartbeat::decode(payload)) {
        out = {{"custom_mode", i(m->custom_mode)}, {"type", i(m->type)}, {"autopilot", i(m->autopilot)},
               {"base_mode", i(m->base_mode)}, {"system_status", i(m->system_status)},
               {"mavlink_version", i(m->mavlink_version)}};
      }
      break;
    case SysStatus::kId:
      if (auto m = SysStatus::decode(payload)) {
        out = {{"load", i(m->load)}, {"voltage_battery", i(m->voltage_battery)},
               {"current_battery", i(m->current_battery)}, {"battery_remaining", i(m->battery_remaining)},
               {"drop_rate_comm", i(m->drop_rate_comm)}};
      }
      break;
    case Attitude::kId:
      if (auto m = Attitude::decode(payload)) {
        out = {{"time_boot_ms", i(m->time_boot_ms)}, {"roll", f(m->roll)}, {"pitch", f(m->pitch)},
               {"yaw", f(m->yaw)}, {"rollspeed", f(m->rollspeed)}, {"pitchspeed", f(m->pitchspeed)},
               {"yawspeed", f(m->yawspeed)}};
      }
      break;
    case GlobalPositionInt::kId:
      if (auto m = GlobalPositionInt::decode(payload)) {
        out = {{"time_boot_ms", i(m->time_boot_ms)}, {"lat", i(m->lat)}, {"lon", i(m->lon)}, {"alt", i(m->alt)},
               {"relative_alt", i(m->relative_alt)}, {"vx", i(m->vx)}, {"vy", i(m->vy)}, {"vz", i(m->vz)},
               {"hdg", i(m->hdg)}};
      }
      break;
    default: break;
  }
  return out;
}

}  // namespace mavsec::msg
