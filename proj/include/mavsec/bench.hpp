#pragma once

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "mavsec/channel.hpp"
#include "mavsec/sim.hpp"

namespace mavsec::bench {

using crypto::CipherId;

struct MetricsSample {
  double wall_ms = 0;
  std::uint64_t frames_sent = 0;
  std::uint64_t frames_received = 0;
  double cpu_time_ms = 0;  // drone + gcs
  double drone_cpu_ms = 0;
  double gcs_cpu_ms = 0;
  std::uint64_t memory_bytes = 0;  // resident set

  friend bool operator==(const MetricsSample&, const MetricsSample&) = default;
};

struct Aggregates {
  double throughput_fps = 0;
  double cpu_pct_mean = 0;
  std::uint64_t mem_peak_bytes = 0;

  friend bool operator==(const Aggregates&, const Aggregates&) = default;
};

struct BenchReport {
  CipherId cipher = CipherId::None;
  int rep = 0;
  double duration_s = 0;
  std::optional<double> rate_hz;  // nullopt: max rate
  std::vector<MetricsSample> samples;
  std::uint64_t frames_sent = 0;      // drone side, end of run
  std::uint64_t frames_received = 0;  // GCS side, after draining
  Aggregates aggregates;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

/// Throughput = last frames_sent / last wall time; CPU % is the mean of
/// per-interval cpu/wall ratios; memory is the peak sample.
inline Aggregates compute_aggregates(const std::vector<MetricsSample>& samples) {
  Aggregates a;
  if (samples.empty()) return a;
  const MetricsSample& last = samples.back();
  if (last.wall_ms > 0) a.throughput_fps = static_cast<double>(last.frames_sent) / (last.wall_ms / 1000.0);
  double pct_sum = 0;
  int intervals = 0;
  for (std::size_t k = 1; k < samples.size(); ++k) {
    const double dw = samples[k].wall_ms - samples[k - 1].wall_ms;
    if (dw <= 0) continue;
    pct_sum += 100.0 * (samples[k].cpu_time_ms - samples[k - 1].cpu_time_ms) / dw;
    ++intervals;
  }
  if (intervals > 0) a.cpu_pct_mean = pct_sum / intervals;
  for (const auto& s : samples) a.mem_peak_bytes = std::max(a.mem_peak_bytes, s.memory_bytes);
  return a;
}

inline std::uint64_t resident_set_bytes() {
  std::ifstream statm("/proc/self/statm");
  std::uint64_t size = 0, resident = 0;
  if (!(statm >> size >> resident)) return 0;
  return resident * static_cast<std::uint64_t>(::sysconf(_SC_PAGESIZE));
}

struct BenchOptions {
  int rep = 0;
  std::chrono::milliseconds sample_interval{100};
  // Fixed benchmark credentials; the numbers are irrelevant to timing.
  crypto::Key256 psk = crypto::Key256::from_hex("000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f");
  Salt salt_drone{0x6d, 0x61, 0x76, 0x73, 0x65, 0x63, 0x00, 0x01};
  Salt salt_gcs{0x6d, 0x61, 0x76, 0x73, 0x65, 0x63, 0x00, 0x02};
  double hb_period_s = 1.0;
};

/// Loopback drone+GCS pair with `cipher`, sampled every 100 ms.
/// `rate_hz` nullopt runs the sender flat out.
inline BenchReport run_benchmark(CipherId cipher, double duration_s, std::optional<double> rate_hz,
                                 const BenchOptions& opt = {}) {
  if (!(duration_s > 0) || !std::isfinite(duration_s)) throw Error(Errc::ConfigError, "duration must be > 0");
  if (rate_hz && !(*rate_hz > 0)) throw Error(Errc::ConfigError, "rate must be > 0 or max");

  SessionConfig drone_session{cipher, opt.psk, opt.salt_drone, opt.salt_gcs};

  sim::EndpointConfig gcs_cfg;
  gcs_cfg.role = sim::Role::Gcs;
  gcs_cfg.bind = {"127.0.0.1", 0};
  gcs_cfg.session = drone_session.mirrored();
  gcs_cfg.hb_period_s = opt.hb_period_s;
  gcs_cfg.duration_s = duration_s + 30.0;  // stopped explicitly after draining

  try {
    sim::GcsEndpoint gcs(gcs_cfg);
    sim::EndpointConfig drone_cfg;
    drone_cfg.role = sim::Role::Drone;
    drone_cfg.bind = {"127.0.0.1", 0};
    drone_cfg.peer = net::Endpoint{"127.0.0.1", gcs.local_port()};
    drone_cfg.session = drone_session;
    drone_cfg.hb_period_s = opt.hb_period_s;
    drone_cfg.telemetry_rate_hz = rate_hz ? *rate_hz : sim::kMaxRate;
    drone_cfg.duration_s = duration_s;
    sim::DroneEndpoint drone(drone_cfg);

    std::stop_source gcs_stop;
    auto gcs_done = std::async(std::launch::async, [&] { return gcs.run(gcs_stop.get_token()); });

    const auto epoch = sim::Clock::now();
    auto drone_done = std::async(std::launch::async, [&] { return drone.run(); });

    BenchReport report;
    report.cipher = cipher;
    report.rep = opt.rep;
    report.duration_s = duration_s;
    report.rate_hz = rate_hz;

    const auto take_sample = [&] {
      MetricsSample s;
      s.wall_ms = std::chrono::duration<double, std::milli>(sim::Clock::now() - epoch).count();
      s.frames_sent = drone.counters().frames_sent.load();
      s.frames_received = gcs.counters().datagrams_received.load();
      s.drone_cpu_ms = static_cast<double>(drone.cpu().total_ns()) / 1e6;
      s.gcs_cpu_ms = static_cast<double>(gcs.cpu().total_ns()) / 1e6;
      s.cpu_time_ms = s.drone_cpu_ms + s.gcs_cpu_ms;
      s.memory_bytes = resident_set_bytes();
      if (!report.samples.empty()) {
        // Counters are monotone; a thread clock read racing thread exit can
        // come back short, so clamp to the previous value.
        const MetricsSample& prev = report.samples.back();
        s.drone_cpu_ms = std::max(s.drone_cpu_ms, prev.drone_cpu_ms);
        s.gcs_cpu_ms = std::max(s.gcs_cpu_ms, prev.gcs_cpu_ms);
        s.cpu_time_ms = s.drone_cpu_ms + s.gcs_cpu_ms;
        s.frames_received = std::min(std::max(s.frames_received, prev.frames_received), s.frames_sent);
      } else {
        s.frames_received = std::min(s.frames_received, s.frames_sent);
      }
      report.samples.push_back(s);
    };

    take_sample();
    auto next = epoch + opt.sample_interval;
    while (drone_done.wait_until(next) != std::future_status::ready) {
      take_sample();
      next += opt.sample_interval;
    }
    take_sample();
    const sim::DroneSummary drone_summary = drone_done.get();

    // Drain: wait until the GCS has seen everything or goes quiet.
    auto last_count = gcs.counters().datagrams_received.load();
    for (int idle = 0; idle < 5 && last_count < drone_summary.frames_sent;) {
      std::this_thread::sleep_for(std::chrono::milliseconds(20));
      const auto now_count = gcs.counters().datagrams_received.load();
      idle = now_count == last_count ? idle + 1 : 0;
      last_count = now_count;
    }
    gcs_stop.request_stop();
    const sim::GcsSummary gcs_summary = gcs_done.get();

    report.frames_sent = drone_summary.frames_sent;
    report.frames_received = std::min(gcs_summary.link.datagrams_received, drone_summary.frames_sent);
    report.aggregates = compute_aggregates(report.samples);
    // The drone's own send window; the last sample also covers thread teardown.
    if (drone_summary.duration_s > 0) {
      report.aggregates.throughput_fps = static_cast<double>(drone_summary.frames_sent) / drone_summary.duration_s;
    }
    return report;
  } catch (const Error& e) {
    if (e.code() == Errc::ConfigError) throw;
    throw Error(Errc::HarnessFailure, e.what());
  } catch (const std::exception& e) {
    throw Error(Errc::HarnessFailure, e.what());
  }
}

// ---------------------------------------------------------------------------
// Comparison

struct Stat {
  double mean = 0;
  double stddev = 0;  // sample standard deviation (n-1)
  friend bool operator==(const Stat&, const Stat&) = default;
};

inline Stat describe(const std::vector<double>& v) {
  Stat s;
  if (v.empty()) return s;
  for (double x : v) s.mean += x;
  s.mean /= static_cast<double>(v.size());
  if (v.size() > 1) {
    double ss = 0;
    for (double x : v) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(v.size() - 1));
  }
  return s;
}

inline double median(std::vector<double> v) {
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct CipherRow {
  CipherId cipher = CipherId::None;
  int reps = 0;
  Stat throughput_fps;
  Stat cpu_pct;
  Stat mem_peak_bytes;
  int rank_throughput = 0;  // 1 = most frames
  int rank_cpu = 0;         // 1 = least CPU
  int rank_mem = 0;         // 1 = least memory
  std::optional<double> throughput_vs_none;  // mean ratio to the unencrypted run

  friend bool operator==(const CipherRow&, const CipherRow&) = default;
};

struct OrderingCheck {
  std::string name;
  int held = 0;
  int total = 0;
  bool reproduced = false;
  bool advisory = false;
  std::optional<double> median_value;

  friend bool operator==(const OrderingCheck&, const OrderingCheck&) = default;
};

struct ComparisonTable {
  double duration_s = 0;
  std::vector<CipherRow> rows;
  std::vector<OrderingCheck> orderings;

  const CipherRow* row(CipherId id) const {
    for (const auto& r : rows) {
      if (r.cipher == id) return &r;
    }
    return nullptr;
  }
  const OrderingCheck* ordering(std::string_view name) const {
    for (const auto& o : orderings) {
      if (o.name == name) return &o;
    }
    return nullptr;
  }

  friend bool operator==(const ComparisonTable&, const ComparisonTable&) = default;
};

/// An ordering counts as reproduced when it holds in at least 80% of the
/// repetitions where both sides were measured (8 of 10).
inline constexpr double kReproducedFraction = 0.8;
inline constexpr double kNegligibleDelta = 0.10;

namespace detail {

inline bool reproduced(int held, int total) {
  return total > 0 && held >= static_cast<int>(std::ceil(kReproducedFraction * total - 1e-9));
}

using RepIndex = std::map<int, std::map<CipherId, const BenchReport*>>;

/// Counts repetitions where pred(a, b) holds, over reps measuring both.
template <typename Pred>
OrderingCheck pairwise(const RepIndex& by_rep, std::string name, CipherId a, CipherId b, bool advisory, Pred pred) {
  OrderingCheck c;
  c.name = std::move(name);
  c.advisory = advisory;
  for (const auto& [rep, m] : by_rep) {
    auto ia = m.find(a), ib = m.find(b);
    if (ia == m.end() || ib == m.end()) continue;
    ++c.total;
    if (pred(*ia->second, *ib->second)) ++c.held;
  }
  c.reproduced = reproduced(c.held, c.total);
  return c;
}

/// Counts repetitions where `id` is the extreme value of `metric` among `pool`.
template <typename Metric>
OrderingCheck extreme(const RepIndex& by_rep, std::string name, CipherId id, std::vector<CipherId> pool, bool want_max,
                      Metric metric) {
  OrderingCheck c;
  c.name = std::move(name);
  c.advisory = true;
  for (const auto& [rep, m] : by_rep) {
    if (!m.count(id)) continue;
    std::vector<double> others;
    for (CipherId o : pool) {
      if (o != id && m.count(o)) others.push_back(metric(*m.at(o)));
    }
    if (others.empty()) continue;
    ++c.total;
    const double v = metric(*m.at(id));
    const bool ok = want_max ? v >= *std::max_element(others.begin(), others.end())
                             : v <= *std::min_element(others.begin(), others.end());
    if (ok) ++c.held;
  }
  c.reproduced = reproduced(c.held, c.total);
  return c;
}

}  // namespace detail

/// Per-cipher statistics, rankings, ratios to the unencrypted run and the
/// qualitative orderings (the first three are the acceptance orderings; the
/// rest are reported as advisory).
inline ComparisonTable compare_reports(const std::vector<BenchReport>& reports) {
  if (reports.size() < 2) throw Error(Errc::MismatchedDurations, "need at least two reports");
  for (const auto& r : reports) {
    if (r.duration_s != reports.front().duration_s) throw Error(Errc::MismatchedDurations, "reports differ in duration");
  }

  ComparisonTable table;
  table.duration_s = reports.front().duration_s;

  std::map<CipherId, std::vector<const BenchReport*>> by_cipher;
  detail::RepIndex by_rep;
  for (const auto& r : reports) {
    by_cipher[r.cipher].push_back(&r);
    by_rep[r.rep][r.cipher] = &r;
  }

  for (CipherId id : crypto::kAllCiphers) {
    auto it = by_cipher.find(id);
    if (it == by_cipher.end()) continue;
    std::vector<double> tp, cpu, mem;
    for (const BenchReport* r : it->second) {
      tp.push_back(r->aggregates.throughput_fps);
      cpu.push_back(r->aggregates.cpu_pct_mean);
      mem.push_back(static_cast<double>(r->aggregates.mem_peak_bytes));
    }
    CipherRow row;
    row.cipher = id;
    row.reps = static_cast<int>(it->second.size());
    row.throughput_fps = describe(tp);
    row.cpu_pct = describe(cpu);
    row.mem_peak_bytes = describe(mem);
    table.rows.push_back(row);
  }

  const auto rank = [&](CipherRow& row, Stat CipherRow::*field, bool higher_is_better) {
    int r = 1;
    for (const auto& other : table.rows) {
      const double o = (other.*field).mean, v = (row.*field).mean;
      if (higher_is_better ? o > v : o < v) ++r;
    }
    return r;
  };
  const CipherRow* none_row = nullptr;
  for (const auto& r : table.rows) {
    if (r.cipher == CipherId::None) none_row = &r;
  }
  const double none_tp = none_row ? none_row->throughput_fps.mean : 0;
  for (auto& row : table.rows) {
    row.rank_throughput = rank(row, &CipherRow::throughput_fps, true);
    row.rank_cpu = rank(row, &CipherRow::cpu_pct, false);
    row.rank_mem = rank(row, &CipherRow::mem_peak_bytes, false);
    if (none_tp > 0) row.throughput_vs_none = row.throughput_fps.mean / none_tp;
  }

  using detail::pairwise;
  const auto tp = [](const BenchReport& r) { return r.aggregates.throughput_fps; };
  const auto ge_tp = [&](const BenchReport& a, const BenchReport& b) { return tp(a) >= tp(b); };

  table.orderings.push_back(
      pairwise(by_rep, "throughput none >= chacha20", CipherId::None, CipherId::ChaCha20, false, ge_tp));

  {
    OrderingCheck delta = pairwise(by_rep, "throughput delta none vs chacha20 <= 10%", CipherId::None,
                                   CipherId::ChaCha20, false, [&](const BenchReport& a, const BenchReport& b) {
                                     return tp(a) > 0 && (tp(a) - tp(b)) / tp(a) <= kNegligibleDelta;
                                   });
    std::vector<double> deltas;
    for (const auto& [rep, m] : by_rep) {
      if (m.count(CipherId::None) && m.count(CipherId::ChaCha20) && tp(*m.at(CipherId::None)) > 0) {
        deltas.push_back((tp(*m.at(CipherId::None)) - tp(*m.at(CipherId::ChaCha20))) / tp(*m.at(CipherId::None)));
      }
    }
    if (!deltas.empty()) {
      delta.median_value = median(deltas);
      delta.reproduced = delta.reproduced && *delta.median_value <= kNegligibleDelta;
    }
    table.orderings.push_back(delta);
  }

  table.orderings.push_back(
      pairwise(by_rep, "throughput chacha20 >= aes-cbc", CipherId::ChaCha20, CipherId::AesCbc, false, ge_tp));
  table.orderings.push_back(
      pairwise(by_rep, "throughput aes-ctr >= aes-cbc", CipherId::AesCtr, CipherId::AesCbc, true, ge_tp));
  table.orderings.push_back(
      pairwise(by_rep, "throughput chacha20 >= rc4", CipherId::ChaCha20, CipherId::Rc4, true, ge_tp));
  table.orderings.push_back(
      pairwise(by_rep, "throughput aes-ctr >= rc4", CipherId::AesCtr, CipherId::Rc4, true, ge_tp));

  const std::vector<CipherId> encrypted = {CipherId::AesCtr, CipherId::AesCbc, CipherId::Rc4, CipherId::ChaCha20};
  table.orderings.push_back(detail::extreme(by_rep, "memory rc4 highest", CipherId::Rc4, encrypted, true,
                                            [](const BenchReport& r) {
                                              return static_cast<double>(r.aggregates.mem_peak_bytes);
                                            }));
  table.orderings.push_back(detail::extreme(by_rep, "cpu chacha20 lowest of encrypted", CipherId::ChaCha20, encrypted,
                                            false, [](const BenchReport& r) { return r.aggregates.cpu_pct_mean; }));
  table.orderings.push_back(detail::extreme(by_rep, "cpu rc4 highest", CipherId::Rc4, encrypted, true,
                                            [](const BenchReport& r) { return r.aggregates.cpu_pct_mean; }));
  return table;
}

// ---------------------------------------------------------------------------
// Serialization

enum class Format { Csv, Json };

inline Format parse_format(std::string_view s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw Error(Errc::ConfigError, "unknown format '" + std::string(s) + "'");
}

inline constexpr std::string_view kReportCsvHeader =
    "cipher,rep,duration_s,frames_sent,frames_received,throughput_fps,cpu_pct_mean,mem_peak_bytes";

inline constexpr std::string_view kTableCsvHeader =
    "cipher,reps,throughput_fps_mean,throughput_fps_std,cpu_pct_mean,cpu_pct_std,mem_peak_bytes_mean,"
    "mem_peak_bytes_std,rank_throughput,rank_cpu,rank_mem,throughput_vs_none";

namespace detail {

inline std::string fmt3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw Error(Errc::IoError, "write failed: " + path.string());
}

}  // namespace detail

inline void to_json(nlohmann::ordered_json& j, const MetricsSample& s) {
  j = {{"wall_ms", s.wall_ms},           {"frames_sent", s.frames_sent}, {"frames_received", s.frames_received},
       {"cpu_time_ms", s.cpu_time_ms},   {"drone_cpu_ms", s.drone_cpu_ms}, {"gcs_cpu_ms", s.gcs_cpu_ms},
       {"memory_bytes", s.memory_bytes}};
}

inline void from_json(const nlohmann::ordered_json& j, MetricsSample& s) {
  j.at("wall_ms").get_to(s.wall_ms);
  j.at("frames_sent").get_to(s.frames_sent);
  j.at("frames_received").get_to(s.frames_received);
  j.at("cpu_time_ms").get_to(s.cpu_time_ms);
  j.at("drone_cpu_ms").get_to(s.drone_cpu_ms);
  j.at("gcs_cpu_ms").get_to(s.gcs_cpu_ms);
  j.at("memory_bytes").get_to(s.memory_bytes);
}

inline void to_json(nlohmann::ordered_json& j, const BenchReport& r) {
  j = nlohmann::ordered_json::object();
  j["cipher"] = std::string(crypto::to_string(r.cipher));
  j["rep"] = r.rep;
  j["duration_s"] = r.duration_s;
  j["rate_hz"] = r.rate_hz ? nlohmann::ordered_json(*r.rate_hz) : nlohmann::ordered_json("max");
  j["frames_sent"] = r.frames_sent;
  j["frames_received"] = r.frames_received;
  j["throughput_fps"] = r.aggregates.throughput_fps;
  j["cpu_pct_mean"] = r.aggregates.cpu_pct_mean;
  j["mem_peak_bytes"] = r.aggregates.mem_peak_bytes;
  j["samples"] = r.samples;
}

inline void from_json(const nlohmann::ordered_json& j, BenchReport& r) {
  r.cipher = crypto::parse_cipher(j.at("cipher").get<std::string>());
  j.at("rep").get_to(r.rep);
  j.at("duration_s").get_to(r.duration_s);
  const auto& rate = j.at("rate_hz");
  r.rate_hz = rate.is_string() ? std::nullopt : std::optional<double>(rate.get<double>());
  j.at("frames_sent").get_to(r.frames_sent);
  j.at("frames_received").get_to(r.frames_received);
  j.at("throughput_fps").get_to(r.aggregates.throughput_fps);
  j.at("cpu_pct_mean").get_to(r.aggregates.cpu_pct_mean);
  j.at("mem_peak_bytes").get_to(r.aggregates.mem_peak_bytes);
  j.at("samples").get_to(r.samples);
}

inline void to_json(nlohmann::ordered_json& j, const Stat& s) { j = {{"mean", s.mean}, {"stddev", s.stddev}}; }

inline void to_json(nlohmann::ordered_json& j, const ComparisonTable& t) {
  j = nlohmann::ordered_json::object();
  j["duration_s"] = t.duration_s;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"cipher", std::string(crypto::to_string(r.cipher))},
                    {"reps", r.reps},
                    {"throughput_fps", r.throughput_fps},
                    {"cpu_pct", r.cpu_pct},
                    {"mem_peak_bytes", r.mem_peak_bytes},
                    {"rank_throughput", r.rank_throughput},
                    {"rank_cpu", r.rank_cpu},
                    {"rank_mem", r.rank_mem},
                    {"throughput_vs_none", r.throughput_vs_none ? nlohmann::ordered_json(*r.throughput_vs_none)
                                                                : nlohmann::ordered_json(nullptr)}});
  }
  j["rows"] = rows;
  auto ords = nlohmann::ordered_json::array();
  for (const auto& o : t.orderings) {
    ords.push_back({{"name", o.name},
                    {"held", o.held},
                    {"total", o.total},
                    {"reproduced", o.reproduced},
                    {"advisory", o.advisory},
                    {"median", o.median_value ? nlohmann::ordered_json(*o.median_value) : nlohmann::ordered_json(nullptr)}});
  }
  j["orderings"] = ords;
}

inline std::string format_reports(const std::vector<BenchReport>& reports, Format format) {
  if (format == Format::Json) return nlohmann::ordered_json(reports).dump(2) + "\n";
  std::string out(kReportCsvHeader);
  out += "\n";
  for (const auto& r : reports) {
    out += std::string(crypto::to_string(r.cipher)) + "," + std::to_string(r.rep) + "," + detail::fmt3(r.duration_s) +
           "," + std::to_string(r.frames_sent) + "," + std::to_string(r.frames_received) + "," +
           detail::fmt3(r.aggregates.throughput_fps) + "," + detail::fmt3(r.aggregates.cpu_pct_mean) + "," +
           std::to_string(r.aggregates.mem_peak_bytes) + "\n";
  }
  return out;
}

inline std::string format_table(const ComparisonTable& t, Format format) {
  if (format == Format::Json) return nlohmann::ordered_json(t).dump(2) + "\n";
  std::string out(kTableCsvHeader);
  out += "\n";
  for (const auto& r : t.rows) {
    out += std::string(crypto::to_string(r.cipher)) + "," + std::to_string(r.reps) + "," +
           detail::fmt3(r.throughput_fps.mean) + "," + detail::fmt3(r.throughput_fps.stddev) + "," +
           detail::fmt3(r.cpu_pct.mean) + "," + detail::fmt3(r.cpu_pct.stddev) + "," +
           detail::fmt3(r.mem_peak_bytes.mean) + "," + detail::fmt3(r.mem_peak_bytes.stddev) + "," +
           std::to_string(r.rank_throughput) + "," + std::to_string(r.rank_cpu) + "," + std::to_string(r.rank_mem) +
           "," + (r.throughput_vs_none ? detail::fmt3(*r.throughput_vs_none) : std::string()) + "\n";
  }
  return out;
}

inline void write_report(const std::vector<BenchReport>& reports, const std::filesystem::path& path, Format format) {
  detail::write_file(path, format_reports(reports, format));
}

inline void write_report(const BenchReport& report, const std::filesystem::path& path, Format format) {
  write_report(std::vector<BenchReport>{report}, path, format);
}

inline void write_report(const ComparisonTable& table, const std::filesystem::path& path, Format format) {
  detail::write_file(path, format_table(table, format));
}

inline std::vector<BenchReport> read_reports_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  return nlohmann::ordered_json::parse(in).get<std::vector<BenchReport>>();
}

}  // namespace mavsec::bench
