#pragma once

#include <pthread.h>
#include <time.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <numbers>
#include <optional>
#include <stop_token>
#include <string>
#include <thread>
#include <vector>

#include "mavsec/channel.hpp"
#include "mavsec/dialect.hpp"
#include "mavsec/frame.hpp"
#include "mavsec/messages.hpp"
#include "mavsec/udp.hpp"

namespace mavsec::sim {

using Clock = std::chrono::steady_clock;

inline constexpr double kMaxRate = std::numeric_limits<double>::infinity();
inline constexpr int kLostLinkMissedHeartbeats = 3;

// Identity of the simulated vehicle (quadrotor running ArduPilot) and GCS.
inline constexpr std::uint8_t kDroneSysId = 1;
inline constexpr std::uint8_t kDroneCompId = 1;
inline constexpr std::uint8_t kGcsSysId = 255;
inline constexpr std::uint8_t kGcsCompId = 190;

enum class Role { Drone, Gcs };

struct EndpointConfig {
  Role role = Role::Drone;
  net::Endpoint bind{"0.0.0.0", net::kDefaultPort};
  std::optional<net::Endpoint> peer;
  std::filesystem::path session_path;
  std::optional<SessionConfig> session;  // wins over session_path when set
  double hb_period_s = 1.0;
  double telemetry_rate_hz = 0.0;  // kMaxRate: as fast as the socket allows
  double duration_s = 10.0;
  std::filesystem::path log_path;

  void validate() const {
    if (!(duration_s > 0) || !std::isfinite(duration_s)) throw Error(Errc::ConfigError, "duration must be > 0");
    if (!(hb_period_s > 0) || !std::isfinite(hb_period_s)) throw Error(Errc::ConfigError, "heartbeat period must be > 0");
    if (!(telemetry_rate_hz >= 0)) throw Error(Errc::ConfigError, "telemetry rate must be >= 0");
    if (role == Role::Drone && !peer) throw Error(Errc::ConfigError, "drone needs a peer address");
    if (!session && session_path.empty()) throw Error(Errc::ConfigError, "no session configuration");
  }

  SessionConfig load_session() const { return session ? *session : load_session_config(session_path); }
};

// ---------------------------------------------------------------------------
// Synthetic flight data

struct TrajectoryParams {
  double roll_amplitude = 0.35;  // rad
  double roll_period = 8.0;      // s
  double pitch_amplitude = 0.20;
  double pitch_period = 6.0;
  double radius_m = 100.0;
  double speed_mps = 10.0;
  std::int32_t home_lat = -353632620;  // degE7
  std::int32_t home_lon = 1491652370;
  std::int32_t home_alt_mm = 584000;
  std::int32_t cruise_rel_alt_mm = 50000;
};

struct TelemetrySample {
  std::uint32_t time_ms = 0;
  float roll = 0, pitch = 0, yaw = 0;
  float rollspeed = 0, pitchspeed = 0, yawspeed = 0;
  std::int32_t lat = 0, lon = 0;  // degE7
  std::int32_t alt = 0;           // mm
  std::int32_t relative_alt = 0;  // mm
  std::int16_t vx = 0, vy = 0, vz = 0;
  std::uint16_t hdg = 0;

  msg::Attitude attitude() const { return {time_ms, roll, pitch, yaw, rollspeed, pitchspeed, yawspeed}; }
  msg::GlobalPositionInt global_position() const {
    return {time_ms, lat, lon, alt, relative_alt, vx, vy, vz, hdg};
  }

  friend bool operator==(const TelemetrySample&, const TelemetrySample&) = default;
};

/// Level start, sinusoidal roll/pitch, constant-speed circle around home.
/// Pure function of t.
inline TelemetrySample gen_telemetry(double t, const TrajectoryParams& p = {}) {
  constexpr double two_pi = 2 * std::numbers::pi;
  constexpr double m_per_deg = 111319.49;
  TelemetrySample s;
  s.time_ms = static_cast<std::uint32_t>(std::llround(t * 1000.0));

  const double wr = two_pi / p.roll_period, wp = two_pi / p.pitch_period;
  s.roll = static_cast<float>(p.roll_amplitude * std::sin(wr * t));
  s.pitch = static_cast<float>(p.pitch_amplitude * std::sin(wp * t));
  s.rollspeed = static_cast<float>(p.roll_amplitude * wr * std::cos(wr * t));
  s.pitchspeed = static_cast<float>(p.pitch_amplitude * wp * std::cos(wp * t));

  const double omega = p.speed_mps / p.radius_m;
  const double theta = omega * t;
  const double north = p.radius_m * std::sin(theta), east = p.radius_m * (1 - std::cos(theta));
  const double heading = std::fmod(theta, two_pi);  // course over ground, 0 = north
  s.yaw = static_cast<float>(std::remainder(heading, two_pi));
  s.yawspeed = static_cast<float>(omega);

  const double lat_deg = p.home_lat * 1e-7;
  s.lat = p.home_lat + static_cast<std::int32_t>(std::llround(north / m_per_deg * 1e7));
  s.lon = p.home_lon +
          static_cast<std::int32_t>(std::llround(east / (m_per_deg * std::cos(lat_deg * std::numbers::pi / 180)) * 1e7));
  s.relative_alt = p.cruise_rel_alt_mm;
  s.alt = p.home_alt_mm + p.cruise_rel_alt_mm;
  s.vx = static_cast<std::int16_t>(std::lround(p.speed_mps * std::cos(theta) * 100));
  s.vy = static_cast<std::int16_t>(std::lround(p.speed_mps * std::sin(theta) * 100));
  s.vz = 0;
  s.hdg = static_cast<std::uint16_t>(std::lround(heading * 18000 / std::numbers::pi) % 36000);
  return s;
}

inline msg::SysStatus gen_sys_status(double t) {
  msg::SysStatus s;
  s.sensors_present = s.sensors_enabled = s.sensors_health = 0x0020FC2F;
  s.load = static_cast<std::uint16_t>(250 + std::lround(50 * std::sin(t)));
  s.voltage_battery = static_cast<std::uint16_t>(12600 - std::min<long>(2000, std::lround(t * 2)));
  s.current_battery = 1500;
  s.battery_remaining = static_cast<std::int8_t>(std::max<long>(0, 100 - std::lround(t / 60)));
  return s;
}

/// Unfinalized frame (checksum 0); sealing computes the real one.
inline FrameV2 raw_frame(std::uint32_t msg_id, Bytes payload, std::uint8_t sys_id, std::uint8_t comp_id,
                         std::uint8_t seq = 0) {
  FrameV2 f;
  f.msg_id = msg_id;
  f.payload = std::move(payload);
  f.sys_id = sys_id;
  f.comp_id = comp_id;
  f.seq = seq;
  return f;
}

inline FrameV2 make_frame(std::uint32_t msg_id, Bytes payload, std::uint8_t sys_id, std::uint8_t comp_id,
                          std::uint8_t seq = 0) {
  FrameV2 f = raw_frame(msg_id, std::move(payload), sys_id, comp_id, seq);
  finalize_checksum(f, minimal_dialect());
  return f;
}

/// Vehicle heartbeat: quadrotor (2), ArduPilot (3), custom mode enabled
/// with stabilize and manual input flags (0x51), MAV_STATE_ACTIVE (4).
inline FrameV2 gen_heartbeat(std::uint64_t tick) {
  msg::Heartbeat hb{.custom_mode = 0, .type = 2, .autopilot = 3, .base_mode = 0x51, .system_status = 4};
  return make_frame(msg::kHeartbeatId, hb.encode(), kDroneSysId, kDroneCompId, static_cast<std::uint8_t>(tick));
}

/// Ground station heartbeat: MAV_TYPE_GCS (6), MAV_AUTOPILOT_INVALID (8).
inline FrameV2 gen_gcs_heartbeat(std::uint64_t tick) {
  msg::Heartbeat hb{.custom_mode = 0, .type = 6, .autopilot = 8, .base_mode = 0, .system_status = 4};
  return make_frame(msg::kHeartbeatId, hb.encode(), kGcsSysId, kGcsCompId, static_cast<std::uint8_t>(tick));
}

// ---------------------------------------------------------------------------
// Shared endpoint plumbing

/// Snapshot-able counters. Loops are the only writers; readers (the bench
/// collector) only load.
struct EndpointCounters {
  std::atomic<std::uint64_t> frames_sent{0};
  std::atomic<std::uint64_t> bytes_sent{0};
  std::atomic<std::uint64_t> heartbeats_sent{0};
  std::atomic<std::uint64_t> send_failures{0};
  std::atomic<std::uint64_t> datagrams_received{0};
  std::atomic<std::uint64_t> frames_ok{0};
  std::atomic<std::uint64_t> checksum_failures{0};
  std::atomic<std::uint64_t> replay_rejections{0};
  std::atomic<std::uint64_t> decode_failures{0};
  std::atomic<std::uint64_t> parse_failures{0};
  std::atomic<std::uint64_t> heartbeats_received{0};
  std::atomic<std::uint64_t> lost_link_events{0};
  std::atomic<bool> live{false};
  std::atomic<bool> lost_link{false};
};

/// CPU time of the threads running one endpoint, readable from another thread.
class ThreadCpuSet {
 public:
  static constexpr int kSlots = 2;

  void attach(int slot) {
    clockid_t id{};
    if (pthread_getcpuclockid(pthread_self(), &id) == 0) {
      clocks_[slot].store(id);
      attached_[slot].store(true);
    }
  }

  /// Call on the owning thread before it exits.
  void detach(int slot) {
    final_ns_[slot].store(self_ns());
    attached_[slot].store(false);
  }

  std::int64_t total_ns() const {
    std::int64_t total = 0;
    for (int k = 0; k < kSlots; ++k) {
      if (attached_[k].load()) {
        timespec ts{};
        if (clock_gettime(clocks_[k].load(), &ts) == 0) {
          total += static_cast<std::int64_t>(ts.tv_sec) * 1000000000 + ts.tv_nsec;
          continue;
        }
      }
      total += final_ns_[k].load();
    }
    return total;
  }

 private:
  static std::int64_t self_ns() {
    timespec ts{};
    clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
    return static_cast<std::int64_t>(ts.tv_sec) * 1000000000 + ts.tv_nsec;
  }

  std::array<std::atomic<clockid_t>, kSlots> clocks_{};
  std::array<std::atomic<bool>, kSlots> attached_{};
  std::array<std::atomic<std::int64_t>, kSlots> final_ns_{};
};

/// Tab-separated, one record per line: `<ms since start>\t<kind>\t...`.
class LineLog {
 public:
  LineLog(const std::filesystem::path& path, Clock::time_point epoch) : epoch_(epoch) {
    if (path.empty()) return;
    out_.open(path, std::ios::trunc);
    if (!out_) throw Error(Errc::IoError, "cannot open log " + path.string());
  }

  bool enabled() const noexcept { return out_.is_open(); }

  void message(const FrameV2& f, std::string_view name) {
    if (!enabled()) return;
    std::string line = stamp() + "\tMSG\t" + std::to_string(f.sys_id) + "\t" + std::to_string(f.comp_id) + "\t" +
                       std::to_string(f.seq) + "\t" + std::string(name);
    for (const auto& [k, v] : msg::describe(f.msg_id, f.payload)) line += "\t" + k + "=" + v;
    write(line);
  }

  void event(std::string_view kind, std::string_view detail) {
    if (!enabled()) return;
    write(stamp() + "\t" + std::string(kind) + "\t" + std::string(detail));
  }

 private:
  std::string stamp() const {
    return std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - epoch_).count());
  }
  void write(const std::string& line) {
    std::lock_guard lock(mu_);
    out_ << line << '\n';
  }

  Clock::time_point epoch_;
  std::ofstream out_;
  std::mutex mu_;
};

/// Receive-side processing shared by both endpoints: open, classify,
/// validate, track liveness.
class Receiver {
 public:
  Receiver(SessionState session, EndpointCounters& counters, LineLog& log, double hb_period_s,
           Clock::time_point epoch)
      : session_(std::move(session)), counters_(counters), log_(log), hb_period_s_(hb_period_s), epoch_(epoch) {}

  void handle(ByteView datagram) {
    counters_.datagrams_received.fetch_add(1, std::memory_order_relaxed);
    FrameV2 f;
    try {
      f = open_frame(session_, datagram, minimal_dialect());
    } catch (const Error& e) {
      switch (e.code()) {
        case Errc::ChecksumMismatch: counters_.checksum_failures.fetch_add(1, std::memory_order_relaxed); break;
        case Errc::ReplayDetected: counters_.replay_rejections.fetch_add(1, std::memory_order_relaxed); break;
        case Errc::BadPadding:
        case Errc::BadLength: counters_.decode_failures.fetch_add(1, std::memory_order_relaxed); break;
        default: counters_.parse_failures.fetch_add(1, std::memory_order_relaxed); break;
      }
      log_.event("DROP", to_string(e.code()));
      return;
    }

    if (!msg::payload_well_formed(f.msg_id, f.payload)) {
      counters_.decode_failures.fetch_add(1, std::memory_order_relaxed);
      log_.event("DROP", "malformed " + std::to_string(f.msg_id));
      return;
    }
    if (f.msg_id == msg::kHeartbeatId) {
      observe_heartbeat(session_, f);
      last_heartbeat_ = Clock::now();
      heartbeat_arrivals_s_.push_back(std::chrono::duration<double>(*last_heartbeat_ - epoch_).count());
      counters_.heartbeats_received.fetch_add(1, std::memory_order_relaxed);
      if (!counters_.live.exchange(true)) log_.event("LINK", "live");
      counters_.lost_link.store(false);
    } else if (!session_.live) {
      // Nothing but a heartbeat is trusted before the link is up.
      counters_.decode_failures.fetch_add(1, std::memory_order_relaxed);
      log_.event("DROP", "before first heartbeat");
      return;
    }
    counters_.frames_ok.fetch_add(1, std::memory_order_relaxed);
    if (log_.enabled()) log_.message(f, minimal_dialect().at(f.msg_id).name);
  }

  /// Flags lost link once kLostLinkMissedHeartbeats periods pass in silence.
  void check_link(Clock::time_point now) {
    if (!last_heartbeat_ || !counters_.live.load()) return;
    const double silent = std::chrono::duration<double>(now - *last_heartbeat_).count();
    if (silent > kLostLinkMissedHeartbeats * hb_period_s_) {
      counters_.live.store(false);
      counters_.lost_link.store(true);
      session_.live = false;
      counters_.lost_link_events.fetch_add(1);
      log_.event("LINK", "lost");
    }
  }

  const std::vector<double>& heartbeat_arrivals() const noexcept { return heartbeat_arrivals_s_; }

 private:
  SessionState session_;
  EndpointCounters& counters_;
  LineLog& log_;
  double hb_period_s_;
  Clock::time_point epoch_;
  std::optional<Clock::time_point> last_heartbeat_;
  std::vector<double> heartbeat_arrivals_s_;
};

inline constexpr auto kReceivePoll = std::chrono::milliseconds(20);

struct LinkSummary {
  std::uint64_t datagrams_received = 0;
  std::uint64_t frames_ok = 0;
  std::uint64_t checksum_failures = 0;
  std::uint64_t replay_rejections = 0;
  std::uint64_t decode_failures = 0;
  std::uint64_t parse_failures = 0;
  std::uint64_t heartbeats_received = 0;
  std::uint64_t lost_link_events = 0;
  bool live = false;
  bool lost_link = false;
  std::vector<double> heartbeat_arrivals_s;
};

struct DroneSummary {
  std::uint64_t frames_sent = 0;
  std::uint64_t bytes_sent = 0;
  std::uint64_t heartbeats_sent = 0;
  std::uint64_t send_failures = 0;
  double duration_s = 0;
  LinkSummary uplink;  // GCS heartbeats seen by the drone
};

struct GcsSummary {
  LinkSummary link;
  std::uint64_t frames_sent = 0;
  double duration_s = 0;
};

namespace detail {
inline LinkSummary snapshot(const EndpointCounters& c, const Receiver& r) {
  LinkSummary s;
  s.datagrams_received = c.datagrams_received.load();
  s.frames_ok = c.frames_ok.load();
  s.checksum_failures = c.checksum_failures.load();
  s.replay_rejections = c.replay_rejections.load();
  s.decode_failures = c.decode_failures.load();
  s.parse_failures = c.parse_failures.load();
  s.heartbeats_received = c.heartbeats_received.load();
  s.lost_link_events = c.lost_link_events.load();
  s.live = c.live.load();
  s.lost_link = c.lost_link.load();
  s.heartbeat_arrivals_s = r.heartbeat_arrivals();
  return s;
}

inline Clock::duration seconds(double s) {
  return std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(s));
}

/// Sleeps until `t` or until a stop is requested.
inline void sleep_until(Clock::time_point t, std::stop_token stop) {
  std::mutex m;
  std::condition_variable_any cv;
  std::unique_lock lock(m);
  cv.wait_until(lock, stop, t, [] { return false; });
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Drone

/// Synthetic vehicle: heartbeats every hb_period_s, telemetry (ATTITUDE,
/// GLOBAL_POSITION_INT, SYS_STATUS in rotation) at telemetry_rate_hz, all
/// sealed through the session. Binds in the constructor.
class DroneEndpoint {
 public:
  explicit DroneEndpoint(EndpointConfig cfg)
      : cfg_((cfg.validate(), std::move(cfg))),
        session_(cfg_.load_session()),
        socket_(cfg_.bind),
        peer_addr_(net::resolve(*cfg_.peer)) {
    socket_.set_receive_timeout(kReceivePoll);
  }

  std::uint16_t local_port() const { return socket_.local_port(); }
  const EndpointCounters& counters() const noexcept { return counters_; }
  const ThreadCpuSet& cpu() const noexcept { return cpu_; }

  DroneSummary run(std::stop_token stop = {}) {
    const auto epoch = Clock::now();
    LineLog log(cfg_.log_path, epoch);
    SessionState tx = session_;
    Receiver receiver(session_, counters_, log, cfg_.hb_period_s, epoch);
    const auto deadline = epoch + detail::seconds(cfg_.duration_s);

    std::jthread rx_thread([&](std::stop_token st) {
      cpu_.attach(1);
      std::array<std::uint8_t, 2048> buf{};
      while (!st.stop_requested()) {
        if (auto n = socket_.receive(buf)) receiver.handle(ByteView(buf.data(), *n));
        receiver.check_link(Clock::now());
      }
      cpu_.detach(1);
    });

    cpu_.attach(0);
    const Dialect& dialect = minimal_dialect();
    const bool max_rate = std::isinf(cfg_.telemetry_rate_hz);
    const bool telemetry = cfg_.telemetry_rate_hz > 0;
    std::uint64_t hb_ticks = 0, tel_ticks = 0;
    auto next_hb = epoch;
    auto next_tel = epoch;

    const auto send = [&](FrameV2 f) {
      const Bytes wire = seal_to_wire(tx, std::move(f), dialect);
      if (socket_.send_to(wire, peer_addr_)) {
        counters_.frames_sent.fetch_add(1, std::memory_order_relaxed);
        counters_.bytes_sent.fetch_add(wire.size(), std::memory_order_relaxed);
        return true;
      }
      counters_.send_failures.fetch_add(1, std::memory_order_relaxed);
      return false;
    };

    while (!stop.stop_requested()) {
      const auto now = Clock::now();
      if (now >= deadline) break;
      if (next_hb <= now) {
        if (send(gen_heartbeat(hb_ticks))) counters_.heartbeats_sent.fetch_add(1, std::memory_order_relaxed);
        ++hb_ticks;
        next_hb = epoch + detail::seconds(cfg_.hb_period_s * static_cast<double>(hb_ticks));
        continue;
      }
      if (telemetry && (max_rate || next_tel <= now)) {
        send(telemetry_frame(tel_ticks, std::chrono::duration<double>(now - epoch).count()));
        ++tel_ticks;
        if (!max_rate) next_tel = epoch + detail::seconds(static_cast<double>(tel_ticks) / cfg_.telemetry_rate_hz);
        continue;
      }
      detail::sleep_until(std::min({next_hb, telemetry ? next_tel : deadline, deadline}), stop);
    }
    const auto end = Clock::now();
    cpu_.detach(0);
    rx_thread.request_stop();
    rx_thread.join();

    DroneSummary s;
    s.frames_sent = counters_.frames_sent.load();
    s.bytes_sent = counters_.bytes_sent.load();
    s.heartbeats_sent = counters_.heartbeats_sent.load();
    s.send_failures = counters_.send_failures.load();
    s.duration_s = std::chrono::duration<double>(end - epoch).count();
    s.uplink = detail::snapshot(counters_, receiver);
    return s;
  }

 private:
  static FrameV2 telemetry_frame(std::uint64_t tick, double t) {
    const TelemetrySample sample = gen_telemetry(t);
    switch (tick % 3) {
      case 0: return raw_frame(msg::kAttitudeId, sample.attitude().encode(), kDroneSysId, kDroneCompId);
      case 1: return raw_frame(msg::kGlobalPositionIntId, sample.global_position().encode(), kDroneSysId, kDroneCompId);
      default: return raw_frame(msg::kSysStatusId, gen_sys_status(t).encode(), kDroneSysId, kDroneCompId);
    }
  }

  EndpointConfig cfg_;
  SessionState session_;
  net::UdpSocket socket_;
  sockaddr_in peer_addr_;
  EndpointCounters counters_;
  ThreadCpuSet cpu_;
};

// ---------------------------------------------------------------------------
// GCS

/// Minimal ground station: opens everything it receives, tallies outcomes,
/// logs decoded messages and sends its own heartbeat to the peer (or to
/// whoever spoke last, when no peer is configured).
class GcsEndpoint {
 public:
  explicit GcsEndpoint(EndpointConfig cfg)
      : cfg_((cfg.validate(), std::move(cfg))), session_(cfg_.load_session()), socket_(cfg_.bind) {
    socket_.set_receive_timeout(kReceivePoll);
    if (cfg_.peer) peer_addr_ = net::resolve(*cfg_.peer);
  }

  std::uint16_t local_port() const { return socket_.local_port(); }
  const EndpointCounters& counters() const noexcept { return counters_; }
  const ThreadCpuSet& cpu() const noexcept { return cpu_; }

  /// Runs until duration_s elapses or `stop` is requested.
  GcsSummary run(std::stop_token stop = {}) {
    const auto epoch = Clock::now();
    LineLog log(cfg_.log_path, epoch);
    Receiver receiver(session_, counters_, log, cfg_.hb_period_s, epoch);
    const auto deadline = epoch + detail::seconds(cfg_.duration_s);

    std::jthread tx_thread([&](std::stop_token st) {
      cpu_.attach(1);
      SessionState tx = session_;
      std::uint64_t ticks = 0;
      while (!st.stop_requested()) {
        if (auto to = peer()) {
          const Bytes wire = seal_to_wire(tx, gen_gcs_heartbeat(ticks), minimal_dialect());
          if (socket_.send_to(wire, *to)) counters_.frames_sent.fetch_add(1, std::memory_order_relaxed);
        }
        ++ticks;
        detail::sleep_until(epoch + detail::seconds(cfg_.hb_period_s * static_cast<double>(ticks)), st);
      }
      cpu_.detach(1);
    });

    cpu_.attach(0);
    std::array<std::uint8_t, 2048> buf{};
    while (!stop.stop_requested() && Clock::now() < deadline) {
      sockaddr_in from{};
      if (auto n = socket_.receive(buf, &from)) {
        learn_peer(from);
        receiver.handle(ByteView(buf.data(), *n));
      }
      receiver.check_link(Clock::now());
    }
    const auto end = Clock::now();
    cpu_.detach(0);
    tx_thread.request_stop();
    tx_thread.join();

    GcsSummary s;
    s.link = detail::snapshot(counters_, receiver);
    s.frames_sent = counters_.frames_sent.load();
    s.duration_s = std::chrono::duration<double>(end - epoch).count();
    return s;
  }

 private:
  std::optional<sockaddr_in> peer() {
    std::lock_guard lock(peer_mu_);
    return peer_addr_;
  }
  void learn_peer(const sockaddr_in& from) {
    if (cfg_.peer) return;
    std::lock_guard lock(peer_mu_);
    peer_addr_ = from;
  }

  EndpointConfig cfg_;
  SessionState session_;
  net::UdpSocket socket_;
  std::mutex peer_mu_;
  std::optional<sockaddr_in> peer_addr_;
  EndpointCounters counters_;
  ThreadCpuSet cpu_;
};

inline DroneSummary run_drone(const EndpointConfig& cfg, std::stop_token stop = {}) {
  return DroneEndpoint(cfg).run(stop);
}

inline GcsSummary run_gcs(const EndpointConfig& cfg, std::stop_token stop = {}) {
  return GcsEndpoint(cfg).run(stop);
}

}  // namespace mavsec::sim
