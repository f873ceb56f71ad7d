// mavsec: drone / gcs endpoints, benchmark runner and self-test.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <random>

#include "mavsec.hpp"

namespace {

using namespace mavsec;

double parse_rate(const std::string& s) {
  if (s == "max") return sim::kMaxRate;
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos == s.size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  throw Error(Errc::ConfigError, "rate must be a non-negative number or 'max'");
}

struct EndpointArgs {
  std::string bind = "0.0.0.0:14550";
  std::string peer;
  std::string session;
  double hb_period = 1.0;
  std::string telemetry_rate = "0";
  double duration = 10.0;
  std::string log;
};

void add_endpoint_options(CLI::App& cmd, EndpointArgs& a) {
  cmd.add_option("--bind", a.bind, "Local address:port")->capture_default_str();
  cmd.add_option("--peer", a.peer, "Remote address:port");
  cmd.add_option("--session", a.session, "Session config file")->required();
  cmd.add_option("--hb-period", a.hb_period, "Heartbeat period in seconds")->capture_default_str();
  cmd.add_option("--telemetry-rate", a.telemetry_rate, "Telemetry frames per second, or 'max'")->capture_default_str();
  cmd.add_option("--duration", a.duration, "Run time in seconds")->capture_default_str();
  cmd.add_option("--log", a.log, "Tab-separated message log");
}

sim::EndpointConfig to_config(const EndpointArgs& a, sim::Role role) {
  sim::EndpointConfig cfg;
  cfg.role = role;
  cfg.bind = net::parse_endpoint(a.bind);
  if (!a.peer.empty()) cfg.peer = net::parse_endpoint(a.peer);
  cfg.session_path = a.session;
  cfg.hb_period_s = a.hb_period;
  cfg.telemetry_rate_hz = parse_rate(a.telemetry_rate);
  cfg.duration_s = a.duration;
  cfg.log_path = a.log;
  return cfg;
}

void print_link(const sim::LinkSummary& l) {
  std::printf("datagrams_received\t%llu\nframes_ok\t%llu\nchecksum_failures\t%llu\nreplay_rejections\t%llu\n"
              "decode_failures\t%llu\nparse_failures\t%llu\nheartbeats_received\t%llu\nlive\t%d\nlost_link\t%d\n",
              static_cast<unsigned long long>(l.datagrams_received), static_cast<unsigned long long>(l.frames_ok),
              static_cast<unsigned long long>(l.checksum_failures), static_cast<unsigned long long>(l.replay_rejections),
              static_cast<unsigned long long>(l.decode_failures), static_cast<unsigned long long>(l.parse_failures),
              static_cast<unsigned long long>(l.heartbeats_received), l.live ? 1 : 0, l.lost_link ? 1 : 0);
}

int run_drone_cmd(const EndpointArgs& a) {
  const sim::DroneSummary s = sim::run_drone(to_config(a, sim::Role::Drone));
  std::printf("frames_sent\t%llu\nbytes_sent\t%llu\nheartbeats_sent\t%llu\nsend_failures\t%llu\nduration_s\t%.3f\n",
              static_cast<unsigned long long>(s.frames_sent), static_cast<unsigned long long>(s.bytes_sent),
              static_cast<unsigned long long>(s.heartbeats_sent), static_cast<unsigned long long>(s.send_failures),
              s.duration_s);
  return 0;
}

int run_gcs_cmd(const EndpointArgs& a) {
  const sim::GcsSummary s = sim::run_gcs(to_config(a, sim::Role::Gcs));
  print_link(s.link);
  std::printf("duration_s\t%.3f\n", s.duration_s);
  return 0;
}

struct BenchArgs {
  std::string ciphers = "none,aes-ctr,aes-cbc,rc4,chacha20";
  double duration = 10.0;
  int reps = 10;
  std::string rate = "max";
  std::string out;
  std::string format = "csv";
  std::string table;
};

int run_bench_cmd(const BenchArgs& a) {
  std::vector<crypto::CipherId> ciphers;
  std::stringstream ss(a.ciphers);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) ciphers.push_back(crypto::parse_cipher(item));
  }
  if (ciphers.empty()) throw Error(Errc::ConfigError, "no ciphers given");
  if (a.reps < 1) throw Error(Errc::ConfigError, "reps must be >= 1");
  const double rate = parse_rate(a.rate);
  const std::optional<double> rate_hz = std::isinf(rate) ? std::nullopt : std::optional<double>(rate);
  const bench::Format format = bench::parse_format(a.format);

  std::vector<bench::BenchReport> reports;
  for (int rep = 0; rep < a.reps; ++rep) {
    // Rotate the order each repetition so slow drift does not favour one cipher.
    for (std::size_t k = 0; k < ciphers.size(); ++k) {
      const crypto::CipherId id = ciphers[(k + static_cast<std::size_t>(rep)) % ciphers.size()];
      bench::BenchOptions opt;
      opt.rep = rep;
      reports.push_back(bench::run_benchmark(id, a.duration, rate_hz, opt));
      const auto& r = reports.back();
      std::fprintf(stderr, "rep %d %-8s %10.1f fps  cpu %6.1f%%  mem %llu\n", rep,
                   std::string(crypto::to_string(id)).c_str(), r.aggregates.throughput_fps, r.aggregates.cpu_pct_mean,
                   static_cast<unsigned long long>(r.aggregates.mem_peak_bytes));
    }
  }
  if (!a.out.empty()) {
    bench::write_report(reports, a.out, format);
  } else {
    std::cout << bench::format_reports(reports, format);
  }
  if (reports.size() >= 2) {
    const bench::ComparisonTable table = bench::compare_reports(reports);
    if (!a.table.empty()) bench::write_report(table, a.table, format);
    std::fprintf(stderr, "\n%s", bench::format_table(table, bench::Format::Csv).c_str());
    for (const auto& o : table.orderings) {
      std::fprintf(stderr, "%-42s %2d/%-2d %s%s\n", o.name.c_str(), o.held, o.total,
                   o.reproduced ? "reproduced" : "not reproduced", o.advisory ? " (advisory)" : "");
    }
  }
  return 0;
}

int run_selftest_cmd() {
  bool ok = true;
  for (const auto& r : run_selftest()) {
    std::printf("%s\t%s\n", r.passed ? "PASS" : "FAIL", r.name.c_str());
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

int run_keygen_cmd(const std::string& out) {
  std::random_device rd;
  crypto::Key256 key;
  for (auto& b : key.bytes) b = static_cast<std::uint8_t>(rd());
  if (out.empty()) {
    std::printf("%s\n", key.to_hex().c_str());
  } else {
    write_key_file(out, key);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MAVLink 2 secure channel: endpoints, benchmark and self-test"};
  app.require_subcommand(1);

  EndpointArgs drone_args, gcs_args;
  auto* drone = app.add_subcommand("drone", "Simulated vehicle sending heartbeats and telemetry");
  add_endpoint_options(*drone, drone_args);
  drone->get_option("--peer")->required();
  auto* gcs = app.add_subcommand("gcs", "Ground station receiving and decrypting telemetry");
  add_endpoint_options(*gcs, gcs_args);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Loopback throughput / CPU / memory comparison");
  bench->add_option("--ciphers", bench_args.ciphers, "Comma-separated cipher list")->capture_default_str();
  bench->add_option("--duration", bench_args.duration, "Seconds per run")->capture_default_str();
  bench->add_option("--reps", bench_args.reps, "Repetitions per cipher")->capture_default_str();
  bench->add_option("--rate", bench_args.rate, "Telemetry rate in Hz, or 'max'")->capture_default_str();
  bench->add_option("--out", bench_args.out, "Per-run report file (stdout if omitted)");
  bench->add_option("--format", bench_args.format, "csv or json")->capture_default_str();
  bench->add_option("--table", bench_args.table, "Comparison table output file");

  auto* selftest = app.add_subcommand("selftest", "Run the cipher and checksum known-answer tests");

  std::string key_out;
  auto* keygen = app.add_subcommand("keygen", "Write a random 256-bit key file");
  keygen->add_option("--out", key_out, "Key file path (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*drone) return run_drone_cmd(drone_args);
    if (*gcs) return run_gcs_cmd(gcs_args);
    if (*bench) return run_bench_cmd(bench_args);
    if (*selftest) return run_selftest_cmd();
    if (*keygen) return run_keygen_cmd(key_out);
  } catch (const Error& e) {
    std::fprintf(stderr, "mavsec: %s\n", e.what());
    return 2;
  }
  return 0;
}
