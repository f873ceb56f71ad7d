// Acceptance runner: `acceptance [N]` runs criterion N (or all) and prints one
// [PASS]/[FAIL] line per criterion. Exit status is non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "loopback.hpp"

using namespace mavsec;
using crypto::CipherId;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned tolerances and sizes.
constexpr double kAc1MaxSeconds = 1.0;
constexpr int kAc2RoundTrips = 10000;
constexpr int kAc2Flips = 1000;
constexpr double kAc2MaxSeconds = 10.0;
constexpr int kAc3Payloads = 10000;
constexpr std::size_t kAc3MaxPayload = 239;
constexpr double kAc3MaxSeconds = 30.0;
constexpr int kAc4CorpusPerCipher = 2000;
constexpr double kAc5Duration = 10.0;
constexpr double kAc5TelemetryHz = 50.0;
constexpr int kAc5Heartbeats = 10;
constexpr int kAc5HeartbeatSlack = 1;
constexpr double kAc5PeriodTolerance = 0.05;
constexpr int kAc6Reps = 10;
constexpr double kAc6Duration = 10.0;
constexpr int kAc6MinHeld = 8;
constexpr double kAc6MaxMedianDelta = 0.10;
constexpr double kAc7HbPeriod = 1.0;
constexpr double kAc7LostLinkSlack = 0.1;  // receive poll is 20 ms
constexpr double kAc7MaxSeconds = 15.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Errc error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::IoError;  // sentinel: nothing thrown
}

Bytes random_bytes(std::mt19937_64& rng, std::size_t n) {
  Bytes b(n);
  for (auto& x : b) x = static_cast<std::uint8_t>(rng());
  return b;
}

std::uint32_t random_msg_id(std::mt19937_64& rng) {
  static const std::uint32_t ids[] = {msg::kHeartbeatId, msg::kSysStatusId, msg::kAttitudeId, msg::kGlobalPositionIntId};
  return ids[rng() % 4];
}

FrameV2 random_frame(std::mt19937_64& rng, std::size_t max_payload, bool allow_signature) {
  FrameV2 f;
  f.msg_id = random_msg_id(rng);
  f.incompat_flags = static_cast<std::uint8_t>(rng() & 0xFE);
  f.compat_flags = static_cast<std::uint8_t>(rng());
  f.seq = static_cast<std::uint8_t>(rng());
  f.sys_id = static_cast<std::uint8_t>(rng());
  f.comp_id = static_cast<std::uint8_t>(rng());
  f.payload = random_bytes(rng, rng() % (max_payload + 1));
  if (allow_signature && rng() % 4 == 0) {
    Signature sig{};
    for (auto& x : sig) x = static_cast<std::uint8_t>(rng());
    f.set_signature(sig);
  }
  finalize_checksum(f, minimal_dialect());
  return f;
}

FrameV2 vehicle_heartbeat() { return sim::gen_heartbeat(0); }

// ---------------------------------------------------------------------------

Outcome ac1() {
  using namespace crypto;
  const auto t0 = Clock::now();
  Outcome o;
  int passed = 0, total = 0;
  const auto check = [&](const char* name, ByteView got, std::string_view want) {
    ++total;
    if (to_hex(got) == want) {
      ++passed;
    } else {
      o.pass = false;
      o.detail += std::string(" mismatch:") + name;
    }
  };
  const Key256 seq_key = Key256::from_hex("000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f");
  const Key256 sp_key = Key256::from_hex("603deb1015ca71be2b73aef0857d77811f352c073b6108d72d9810a30914dff4");
  const Bytes sp_plain = from_hex(
      "6bc1bee22e409f96e93d7e117393172aae2d8a571e03ac9c9eb76fac45af8e51"
      "30c81c46a35ce411e5fbc1191a0a52eff69f2445df4f9b17ad2b417be66c3710");

  check("aes-block", aes256_encrypt_block(seq_key, fixed_from_hex<16>("00112233445566778899aabbccddeeff")),
        "8ea2b7ca516745bfeafc49904b496089");
  check("aes-ctr", ctr_xcrypt(sp_key, Iv128::from_hex("f0f1f2f3f4f5f6f7f8f9fafbfcfdfeff"), sp_plain),
        "601ec313775789a5b7a7f504bbf3d228f443e3ca4d62b59aca84e990cacaf5c5"
        "2b0930daa23de94ce87017ba2d84988ddfc9c58db67aada613c2dd08457941a6");
  Bytes cbc = sp_plain;
  cbc_encrypt_blocks(Aes256(sp_key), Iv128::from_hex("000102030405060708090a0b0c0d0e0f"), cbc);
  check("aes-cbc", cbc,
        "f58c4c04d6e5f1ba779eabfb5f7bfbd69cfc4e967edb808d679f777bc6702c7d"
        "39f23369a9d9bacfa530e26304231461b2eb05e2c39be9fcda6c19078c6a9d1b");
  Rc4State rc4 = rc4_ksa(as_bytes("Key"));
  check("rc4", rc4_xcrypt(rc4, as_bytes("Plaintext")), "bbf316e8d940af0ad3");
  Rc4State rc4b = rc4_ksa(from_hex("0102030405"));
  check("rc4-rfc6229", rc4_xcrypt(rc4b, Bytes(16, 0)), "b2396305f03dc027ccc3524a0a1118a8");
  check("chacha20",
        chacha20_xcrypt(seq_key, Nonce96{fixed_from_hex<12>("000000000000004a00000000"), 1},
                        as_bytes("Ladies and Gentlemen of the class of '99: If I could offer you only one tip for the "
                                 "future, sunscreen would be it.")),
        "6e2e359a2568f98041ba0728dd0d6981e97e7aec1d4360c20a27afccfd9fae0b"
        "f91b65c5524733ab8f593dabcd62b3571639d624e65152ab8f530c359f0861d8"
        "07ca0dbf500d6a6156a38e088a22b65e52bc514d16ccf806818ce91ab7793736"
        "5af90bbf74a35be6b40b8eedf2785e42874d");

  const double secs = since(t0);
  if (secs >= kAc1MaxSeconds) o.pass = false;
  o.detail = fmt("%d/%d vectors byte-exact, %.3f s", passed, total, secs) + o.detail;
  return o;
}

Outcome ac2() {
  const auto t0 = Clock::now();
  const Dialect& d = minimal_dialect();
  std::mt19937_64 rng(20240502);
  int roundtrip_ok = 0;
  std::vector<FrameV2> frames;
  for (int i = 0; i < kAc2RoundTrips; ++i) {
    const FrameV2 f = random_frame(rng, kMaxPayloadLen, true);
    const Bytes wire = serialize_frame(f);
    try {
      const FrameV2 back = parse_frame(wire, d);
      if (back == f && serialize_frame(back) == wire) ++roundtrip_ok;
    } catch (const Error&) {
    }
    if (frames.size() < 1000) frames.push_back(f);
  }

  // Content bits: everything the checksum covers that does not describe the
  // framing itself (len, signed flag, msg_id), plus the checksum bytes.
  int flips_mismatch = 0;
  for (int i = 0; i < kAc2Flips; ++i) {
    const FrameV2& f = frames[static_cast<std::size_t>(i) % frames.size()];
    Bytes wire = serialize_frame(f);
    std::vector<std::pair<std::size_t, int>> bits;
    for (int b = 1; b < 8; ++b) bits.push_back({2, b});
    for (std::size_t pos = 3; pos <= 6; ++pos) {
      for (int b = 0; b < 8; ++b) bits.push_back({pos, b});
    }
    for (std::size_t pos = kHeaderLen; pos < kHeaderLen + f.payload.size() + kChecksumLen; ++pos) {
      for (int b = 0; b < 8; ++b) bits.push_back({pos, b});
    }
    const auto [pos, bit] = bits[rng() % bits.size()];
    wire[pos] ^= static_cast<std::uint8_t>(1u << bit);
    if (error_of([&] { parse_frame(wire, d); }) == Errc::ChecksumMismatch) ++flips_mismatch;
  }

  // Framing bits: never accepted, each with its documented error.
  int framing_rejected = 0, framing_total = 0;
  for (int i = 0; i < 200; ++i) {
    const FrameV2& f = frames[static_cast<std::size_t>(i)];
    const std::pair<std::size_t, int> cands[] = {{0, static_cast<int>(rng() % 8)},
                                                 {1, static_cast<int>(rng() % 8)},
                                                 {2, 0},
                                                 {7 + rng() % 3, static_cast<int>(rng() % 8)}};
    for (const auto& [pos, bit] : cands) {
      Bytes wire = serialize_frame(f);
      wire[pos] ^= static_cast<std::uint8_t>(1u << bit);
      ++framing_total;
      const Errc e = error_of([&] { parse_frame(wire, d); });
      if (e == Errc::ChecksumMismatch || e == Errc::Truncated || e == Errc::UnknownMessageId || e == Errc::BadMagic) {
        ++framing_rejected;
      }
    }
  }

  const double secs = since(t0);
  Outcome o;
  o.pass = roundtrip_ok == kAc2RoundTrips && flips_mismatch == kAc2Flips && framing_rejected == framing_total &&
           secs < kAc2MaxSeconds;
  o.detail = fmt("%d/%d round-trips, %d/%d content flips -> ChecksumMismatch, %d/%d framing flips rejected, %.2f s",
                 roundtrip_ok, kAc2RoundTrips, flips_mismatch, kAc2Flips, framing_rejected, framing_total, secs);
  return o;
}

Outcome ac3() {
  const auto t0 = Clock::now();
  const Dialect& d = minimal_dialect();
  Outcome o;
  for (CipherId id : crypto::kAllCiphers) {
    SessionPair pair = establish_session(loopback::demo_session(id));
    std::mt19937_64 rng(300 + static_cast<unsigned>(id));
    open_frame(pair.gcs, seal_to_wire(pair.drone, vehicle_heartbeat(), d), d);
    int ok = 0;
    for (int i = 0; i < kAc3Payloads; ++i) {
      FrameV2 f = random_frame(rng, kAc3MaxPayload, false);
      f.seq = static_cast<std::uint8_t>(pair.drone.tx_counter);
      const Bytes plain_wire = serialize_frame(f);
      const FrameV2 sealed = seal_frame(pair.drone, f, d);
      const Bytes wire = serialize_frame(sealed);
      bool good = sealed.checksum == compute_checksum(sealed, d);
      for (std::size_t k = 0; k < kHeaderLen; ++k) {
        if (k == 1 && id == CipherId::AesCbc) continue;
        good = good && wire[k] == plain_wire[k];
      }
      try {
        good = good && parse_frame(wire, d).payload == sealed.payload;  // checksum verifies over ciphertext
        good = good && open_frame(pair.gcs, wire, d).payload == f.payload;
      } catch (const Error&) {
        good = false;
      }
      if (good) ++ok;
    }
    o.detail += fmt("%s %d/%d; ", std::string(crypto::to_string(id)).c_str(), ok, kAc3Payloads);
    o.pass = o.pass && ok == kAc3Payloads;
  }
  const double secs = since(t0);
  o.pass = o.pass && secs < kAc3MaxSeconds;
  o.detail += fmt("%.2f s", secs);
  return o;
}

Outcome ac4() {
  const Dialect& d = minimal_dialect();
  Outcome o;
  std::uint64_t corpus = 0, rejected = 0, decrypts_on_bad = 0;
  bool control_ok = true;
  for (CipherId id : crypto::kAllCiphers) {
    SessionPair pair = establish_session(loopback::demo_session(id));
    std::mt19937_64 rng(400 + static_cast<unsigned>(id));
    std::vector<Bytes> good;
    good.push_back(seal_to_wire(pair.drone, vehicle_heartbeat(), d));
    for (int i = 0; i < 200; ++i) good.push_back(seal_to_wire(pair.drone, random_frame(rng, kAc3MaxPayload, false), d));

    const std::uint64_t before = pair.gcs.stats.decrypt_calls;
    for (int i = 0; i < kAc4CorpusPerCipher; ++i) {
      Bytes w = good[rng() % good.size()];
      // 1-3 bit flips in seq..payload..checksum
      const int flips = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < flips; ++k) {
        const std::size_t pos = 3 + rng() % (w.size() - 3);
        if (pos >= 7 && pos <= 9) continue;
        w[pos] ^= static_cast<std::uint8_t>(1u << (rng() % 8));
      }
      if (w == good[0]) continue;
      bool is_original = false;
      for (const auto& g : good) is_original = is_original || g == w;
      if (is_original) continue;
      ++corpus;
      try {
        open_frame(pair.gcs, w, d);
      } catch (const Error& e) {
        if (e.code() == Errc::ChecksumMismatch) ++rejected;
      }
    }
    decrypts_on_bad += pair.gcs.stats.decrypt_calls - before;

    // Control: the instrumentation does count real decryptions.
    for (const auto& w : good) open_frame(pair.gcs, w, d);
    const std::uint64_t expect = id == CipherId::None ? 0 : good.size();
    control_ok = control_ok && pair.gcs.stats.decrypt_calls - before == expect;
  }
  o.pass = decrypts_on_bad == 0 && rejected == corpus && control_ok;
  o.detail = fmt("corpus %llu frames, %llu ChecksumMismatch, decrypt calls on corrupted %llu, control %s",
                 static_cast<unsigned long long>(corpus), static_cast<unsigned long long>(rejected),
                 static_cast<unsigned long long>(decrypts_on_bad), control_ok ? "ok" : "wrong");
  return o;
}

Outcome ac5() {
  Outcome o;
  for (CipherId id : crypto::kAllCiphers) {
    loopback::PairOptions opt;
    opt.drone_session = loopback::demo_session(id);
    opt.duration_s = kAc5Duration;
    opt.telemetry_rate_hz = kAc5TelemetryHz;
    const auto r = loopback::run_pair(opt);
    const auto& link = r.gcs.link;
    const auto hb = static_cast<int>(link.heartbeats_received);
    double mean_gap = 0;
    if (link.heartbeat_arrivals_s.size() > 1) {
      mean_gap = (link.heartbeat_arrivals_s.back() - link.heartbeat_arrivals_s.front()) /
                 static_cast<double>(link.heartbeat_arrivals_s.size() - 1);
    }
    const bool ok = link.frames_ok == r.drone.frames_sent && std::abs(hb - kAc5Heartbeats) <= kAc5HeartbeatSlack &&
                    std::abs(mean_gap - opt.hb_period_s) <= kAc5PeriodTolerance * opt.hb_period_s;
    o.pass = o.pass && ok;
    o.detail += fmt("%s ok %llu/%llu hb %d gap %.3f; ", std::string(crypto::to_string(id)).c_str(),
                    static_cast<unsigned long long>(link.frames_ok), static_cast<unsigned long long>(r.drone.frames_sent),
                    hb, mean_gap);
  }
  return o;
}

Outcome ac6() {
  std::vector<bench::BenchReport> reports;
  const auto ciphers = crypto::kAllCiphers;
  for (int rep = 0; rep < kAc6Reps; ++rep) {
    for (std::size_t k = 0; k < ciphers.size(); ++k) {
      const CipherId id = ciphers[(k + static_cast<std::size_t>(rep)) % ciphers.size()];
      bench::BenchOptions opt;
      opt.rep = rep;
      reports.push_back(bench::run_benchmark(id, kAc6Duration, std::nullopt, opt));
      std::fprintf(stderr, "  rep %d %-8s %.1f fps\n", rep, std::string(crypto::to_string(id)).c_str(),
                   reports.back().aggregates.throughput_fps);
    }
  }
  const bench::ComparisonTable t = bench::compare_reports(reports);
  std::printf("%s", bench::format_table(t, bench::Format::Csv).c_str());
  for (const auto& c : t.orderings) {
    std::printf("  %-42s %d/%d%s\n", c.name.c_str(), c.held, c.total, c.advisory ? " (advisory)" : "");
  }
  const auto* a = t.ordering("throughput none >= chacha20");
  const auto* delta = t.ordering("throughput delta none vs chacha20 <= 10%");
  const auto* b = t.ordering("throughput chacha20 >= aes-cbc");
  const double med = delta->median_value.value_or(1.0);
  Outcome o;
  o.pass = a->held >= kAc6MinHeld && med <= kAc6MaxMedianDelta && b->held >= kAc6MinHeld;
  o.detail = fmt("(a) none>=chacha20 %d/%d, median delta %.2f%%; (b) chacha20>=aes-cbc %d/%d", a->held, a->total,
                 100 * med, b->held, b->total);
  return o;
}

Outcome ac7() {
  const auto t0 = Clock::now();
  const Dialect& d = minimal_dialect();
  Outcome o;

  // Part 1: inject a duplicate datagram into a running GCS.
  std::uint64_t replays = 0, ok = 0, expect_ok = 0;
  {
    loopback::PairOptions opt;
    opt.drone_session = loopback::demo_session(CipherId::ChaCha20);
    opt.duration_s = 1.0;
    sim::GcsEndpoint gcs(loopback::gcs_config(opt));
    std::stop_source stop;
    auto done = std::async(std::launch::async, [&] { return gcs.run(stop.get_token()); });
    SessionState tx(opt.drone_session);
    net::UdpSocket sock({"127.0.0.1", 0});
    const sockaddr_in to = net::resolve({"127.0.0.1", gcs.local_port()});
    std::vector<Bytes> sent;
    sent.push_back(seal_to_wire(tx, vehicle_heartbeat(), d));
    for (int i = 0; i < 20; ++i) {
      const sim::TelemetrySample s = sim::gen_telemetry(i * 0.1);
      sent.push_back(seal_to_wire(tx, sim::raw_frame(msg::kAttitudeId, s.attitude().encode(), 1, 1), d));
    }
    for (std::size_t k = 0; k < sent.size(); ++k) {
      sock.send_to(sent[k], to);
      if (k == 7) sock.send_to(sent[k], to);  // the duplicate
      std::this_thread::sleep_for(std::chrono::milliseconds(2));
    }
    expect_ok = sent.size();
    std::this_thread::sleep_for(std::chrono::milliseconds(200));
    stop.request_stop();
    const auto summary = done.get();
    replays = summary.link.replay_rejections;
    ok = summary.link.frames_ok;
  }
  const bool replay_ok = replays == 1 && ok == expect_ok;

  // Part 2: stop the drone and time the GCS lost-link transition.
  double silent_at_flip = -1;
  bool live_before = false;
  std::uint64_t lost_events = 0;
  {
    loopback::PairOptions opt;
    opt.drone_session = loopback::demo_session(CipherId::AesCtr);
    opt.duration_s = 2.5;
    opt.hb_period_s = kAc7HbPeriod;
    opt.telemetry_rate_hz = 20;
    auto gcs_cfg = loopback::gcs_config(opt);
    gcs_cfg.duration_s = opt.duration_s + 3 * kAc7HbPeriod + 1.5;
    sim::GcsEndpoint gcs(gcs_cfg);
    sim::DroneEndpoint drone(loopback::drone_config(opt, gcs.local_port()));
    const auto gcs_start = Clock::now();
    auto done = std::async(std::launch::async, [&] { return gcs.run(); });
    auto drone_done = std::async(std::launch::async, [&] { return drone.run(); });
    std::optional<double> flip_at;
    while (done.wait_for(std::chrono::milliseconds(5)) != std::future_status::ready) {
      if (gcs.counters().live.load()) live_before = true;
      if (!flip_at && gcs.counters().lost_link.load()) flip_at = since(gcs_start);
    }
    drone_done.get();
    const auto summary = done.get();
    lost_events = summary.link.lost_link_events;
    if (flip_at && !summary.link.heartbeat_arrivals_s.empty()) {
      silent_at_flip = *flip_at - summary.link.heartbeat_arrivals_s.back();
    }
  }
  const double threshold = 3 * kAc7HbPeriod;
  const bool lost_ok = live_before && lost_events == 1 && silent_at_flip >= threshold &&
                       silent_at_flip <= threshold + kAc7LostLinkSlack;

  const double secs = since(t0);
  o.pass = replay_ok && lost_ok && secs < kAc7MaxSeconds;
  o.detail = fmt("replays %llu (frames ok %llu/%llu), lost link after %.3f s silence (threshold %.1f s), %.1f s",
                 static_cast<unsigned long long>(replays), static_cast<unsigned long long>(ok),
                 static_cast<unsigned long long>(expect_ok), silent_at_flip, threshold, secs);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "cipher known-answer suite", ac1},
    {2, "codec round-trip and bit-flip properties", ac2},
    {3, "secure channel round-trip, all cipher settings", ac3},
    {4, "checksum verified before any decryption", ac4},
    {5, "loopback drone/GCS delivery and heartbeat rate", ac5},
    {6, "benchmark qualitative orderings", ac6},
    {7, "replay rejection and lost-link detection", ac7},
};

}  // namespace

int main(int argc, char** argv) {
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_pass = true;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] AC%d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
