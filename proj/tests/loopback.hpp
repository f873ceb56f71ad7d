#pragma once

#include <future>
#include <thread>

#include "mavsec.hpp"

namespace loopback {

using namespace mavsec;

struct PairResult {
  sim::DroneSummary drone;
  sim::GcsSummary gcs;
};

struct PairOptions {
  SessionConfig drone_session;
  std::optional<SessionConfig> gcs_session;  // default: mirrored drone session
  double duration_s = 10.0;
  double hb_period_s = 1.0;
  double telemetry_rate_hz = 0.0;
  double gcs_linger_s = 0.3;  // GCS keeps listening this long after the drone stops
};

inline sim::EndpointConfig gcs_config(const PairOptions& o) {
  sim::EndpointConfig g;
  g.role = sim::Role::Gcs;
  g.bind = {"127.0.0.1", 0};
  g.session = o.gcs_session ? *o.gcs_session : o.drone_session.mirrored();
  g.hb_period_s = o.hb_period_s;
  g.duration_s = o.duration_s + o.gcs_linger_s + 5.0;
  return g;
}

inline sim::EndpointConfig drone_config(const PairOptions& o, std::uint16_t gcs_port) {
  sim::EndpointConfig d;
  d.role = sim::Role::Drone;
  d.bind = {"127.0.0.1", 0};
  d.peer = net::Endpoint{"127.0.0.1", gcs_port};
  d.session = o.drone_session;
  d.hb_period_s = o.hb_period_s;
  d.telemetry_rate_hz = o.telemetry_rate_hz;
  d.duration_s = o.duration_s;
  return d;
}

/// Drone and GCS on 127.0.0.1 with ephemeral ports.
inline PairResult run_pair(const PairOptions& o) {
  sim::GcsEndpoint gcs(gcs_config(o));
  sim::DroneEndpoint drone(drone_config(o, gcs.local_port()));
  std::stop_source gcs_stop;
  auto gcs_done = std::async(std::launch::async, [&] { return gcs.run(gcs_stop.get_token()); });
  PairResult r;
  r.drone = drone.run();
  std::this_thread::sleep_for(std::chrono::duration<double>(o.gcs_linger_s));
  gcs_stop.request_stop();
  r.gcs = gcs_done.get();
  return r;
}

inline SessionConfig demo_session(crypto::CipherId cipher) {
  SessionConfig cfg;
  cfg.cipher = cipher;
  cfg.psk = crypto::Key256::from_hex("4d41564c494e4b2d7365637572652d6368616e6e656c2d746573742d6b657921");
  cfg.salt_tx = {0xd0, 0x0e, 0x00, 0x00, 0x00, 0x00, 0x00, 0x01};
  cfg.salt_rx = {0x6c, 0x5e, 0x00, 0x00, 0x00, 0x00, 0x00, 0x02};
  return cfg;
}

}  // namespace loopback
