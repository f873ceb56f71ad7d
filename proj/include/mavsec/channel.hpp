#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "mavsec/bytes.hpp"
#include "mavsec/crypto/aes.hpp"
#include "mavsec/crypto/chacha20.hpp"
#include "mavsec/crypto/modes.hpp"
#include "mavsec/crypto/rc4.hpp"
#include "mavsec/crypto/types.hpp"
#include "mavsec/dialect.hpp"
#include "mavsec/frame.hpp"
#include "mavsec/messages.hpp"

namespace mavsec {

using crypto::CipherId;
using crypto::Key256;
using Salt = std::array<std::uint8_t, 8>;

inline constexpr std::uint64_t kCounterLimit = std::numeric_limits<std::uint64_t>::max();

// ---------------------------------------------------------------------------
// Configuration

/// 64 hex characters on one line, nothing else (a trailing newline is fine).
inline Key256 parse_key_file_contents(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.find_first_of("\n\r") != std::string_view::npos) throw Error(Errc::ConfigError, "key file must be one line");
  return Key256::from_hex(text);
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Key256 load_key_file(const std::filesystem::path& path) {
  return parse_key_file_contents(read_text_file(path));
}

inline void write_key_file(const std::filesystem::path& path, const Key256& key) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot write " + path.string());
  out << key.to_hex() << '\n';
  if (!out) throw Error(Errc::IoError, "write failed: " + path.string());
}

struct SessionConfig {
  CipherId cipher = CipherId::None;
  std::optional<Key256> psk;
  Salt salt_tx{};
  Salt salt_rx{};

  void validate() const {
    if (salt_tx == salt_rx) throw Error(Errc::ConfigError, "salt_tx and salt_rx must differ");
    if (cipher != CipherId::None && !psk) throw Error(Errc::ConfigError, "cipher requires a key");
  }

  /// The peer's view: salts swapped.
  SessionConfig mirrored() const {
    SessionConfig m = *this;
    std::swap(m.salt_tx, m.salt_rx);
    return m;
  }

  friend bool operator==(const SessionConfig&, const SessionConfig&) = default;
};

/// Parses `cipher=`, `key=` (or `key_file=`), `salt_tx=`, `salt_rx=` lines.
/// Blank lines and `#` comments are ignored. Relative key_file paths resolve
/// against `base_dir`.
inline SessionConfig parse_session_config(std::string_view text, const std::filesystem::path& base_dir = {}) {
  SessionConfig cfg;
  bool have_cipher = false, have_tx = false, have_rx = false;
  std::istringstream lines{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(Errc::ConfigError, "line " + std::to_string(lineno) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string name = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (name == "cipher") {
      cfg.cipher = crypto::parse_cipher(value);
      have_cipher = true;
    } else if (name == "key") {
      cfg.psk = Key256::from_hex(value);
    } else if (name == "key_file") {
      std::filesystem::path p(value);
      if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
      cfg.psk = load_key_file(p);
    } else if (name == "salt_tx") {
      cfg.salt_tx = fixed_from_hex<8>(value);
      have_tx = true;
    } else if (name == "salt_rx") {
      cfg.salt_rx = fixed_from_hex<8>(value);
      have_rx = true;
    } else {
      throw Error(Errc::ConfigError, "line " + std::to_string(lineno) + ": unknown setting '" + name + "'");
    }
  }
  if (!have_cipher || !have_tx || !have_rx) throw Error(Errc::ConfigError, "cipher, salt_tx and salt_rx are required");
  cfg.validate();
  return cfg;
}

inline SessionConfig load_session_config(const std::filesystem::path& path) {
  return parse_session_config(read_text_file(path), path.parent_path());
}

inline std::string format_session_config(const SessionConfig& cfg) {
  std::string out = "cipher=" + std::string(crypto::to_string(cfg.cipher)) + "\n";
  if (cfg.psk) out += "key=" + cfg.psk->to_hex() + "\n";
  out += "salt_tx=" + to_hex(cfg.salt_tx) + "\nsalt_rx=" + to_hex(cfg.salt_rx) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Per-packet parameters

namespace detail {
inline void check_counter(std::uint64_t counter) {
  if (counter == kCounterLimit) throw Error(Errc::CounterExhausted, "packet counter reached 2^64-1");
}
}  // namespace detail

/// CBC IV: salt || counter (big-endian).
inline crypto::Iv128 derive_cbc_iv(const Salt& salt, std::uint64_t counter) {
  detail::check_counter(counter);
  crypto::Iv128 iv;
  std::copy(salt.begin(), salt.end(), iv.bytes.begin());
  store_be64(iv.bytes.data() + 8, counter);
  return iv;
}

/// CTR initial counter block: salt[0..4) || counter (big-endian) || 0x00000000.
/// The low 32 bits count AES blocks within the packet, so consecutive packets
/// never share a keystream block.
inline crypto::Iv128 derive_ctr_iv(const Salt& salt, std::uint64_t counter) {
  detail::check_counter(counter);
  crypto::Iv128 iv;
  std::copy_n(salt.begin(), 4, iv.bytes.begin());
  store_be64(iv.bytes.data() + 4, counter);
  return iv;
}

/// ChaCha20 nonce: salt[0..4) || counter (big-endian), block counter 0.
inline crypto::Nonce96 derive_chacha_nonce(const Salt& salt, std::uint64_t counter) {
  detail::check_counter(counter);
  crypto::Nonce96 n;
  std::copy_n(salt.begin(), 4, n.bytes.begin());
  store_be64(n.bytes.data() + 4, counter);
  n.counter = 0;
  return n;
}

/// RC4 per-packet state: KSA over psk || salt || counter (big-endian).
inline crypto::Rc4State derive_rc4_state(const Key256& psk, const Salt& salt, std::uint64_t counter) {
  detail::check_counter(counter);
  std::array<std::uint8_t, 48> key{};
  std::copy(psk.bytes.begin(), psk.bytes.end(), key.begin());
  std::copy(salt.begin(), salt.end(), key.begin() + 32);
  store_be64(key.data() + 40, counter);
  return crypto::rc4_ksa(key);
}

using PacketParams = std::variant<std::monostate, crypto::Iv128, crypto::Nonce96, crypto::Rc4State>;

/// Per-packet cipher input for `cipher` (monostate for None).
inline PacketParams derive_nonce(CipherId cipher, const Key256& psk, const Salt& salt, std::uint64_t counter) {
  switch (cipher) {
    case CipherId::None: detail::check_counter(counter); return std::monostate{};
    case CipherId::AesCbc: return derive_cbc_iv(salt, counter);
    case CipherId::AesCtr: return derive_ctr_iv(salt, counter);
    case CipherId::ChaCha20: return derive_chacha_nonce(salt, counter);
    case CipherId::Rc4: return derive_rc4_state(psk, salt, counter);
  }
  return std::monostate{};
}

// ---------------------------------------------------------------------------
// Session

struct SessionStats {
  std::uint64_t sealed = 0;
  std::uint64_t opened = 0;
  std::uint64_t decrypt_calls = 0;
  std::uint64_t replay_rejections = 0;
};

/// One direction pair of a secure channel. Single owner at a time.
class SessionState {
 public:
  static constexpr int kReplayWindow = 64;

  SessionState() = default;
  explicit SessionState(SessionConfig cfg) : config_(std::move(cfg)) {
    config_.validate();
    if (config_.psk && (config_.cipher == CipherId::AesCbc || config_.cipher == CipherId::AesCtr)) {
      aes_.emplace(*config_.psk);
    }
  }

  const SessionConfig& config() const noexcept { return config_; }
  CipherId cipher() const noexcept { return config_.cipher; }

  std::uint64_t tx_counter = 0;
  std::uint64_t rx_highest = 0;
  std::uint64_t rx_window = 0;  // bit k: counter rx_highest - k consumed
  bool rx_any = false;
  bool live = false;
  SessionStats stats;

  /// Full counter for an incoming `seq`: the candidate with that low byte
  /// closest to rx_highest.
  std::uint64_t recover_counter(std::uint8_t seq) const {
    if (!rx_any) return seq;
    const auto delta = static_cast<std::int8_t>(static_cast<std::uint8_t>(seq - static_cast<std::uint8_t>(rx_highest)));
    if (delta < 0 && rx_highest < static_cast<std::uint64_t>(-static_cast<int>(delta))) {
      return rx_highest + static_cast<std::uint8_t>(delta);  // no earlier candidate exists
    }
    if (delta > 0 && rx_highest > kCounterLimit - 1 - static_cast<std::uint64_t>(delta)) {
      throw Error(Errc::CounterRecoveryFailed, "counter would pass the session limit");
    }
    return rx_highest + static_cast<std::uint64_t>(static_cast<std::int64_t>(delta));
  }

  bool already_consumed(std::uint64_t counter) const noexcept {
    if (!rx_any || counter > rx_highest) return false;
    const std::uint64_t age = rx_highest - counter;
    if (age >= kReplayWindow) return true;
    return ((rx_window >> age) & 1U) != 0;
  }

  void mark_consumed(std::uint64_t counter) noexcept {
    if (!rx_any) {
      rx_any = true;
      rx_highest = counter;
      rx_window = 1;
    } else if (counter > rx_highest) {
      const std::uint64_t shift = counter - rx_highest;
      rx_window = shift >= kReplayWindow ? 0 : rx_window << shift;
      rx_window |= 1;
      rx_highest = counter;
    } else {
      rx_window |= std::uint64_t{1} << (rx_highest - counter);
    }
  }

  const crypto::Aes256& aes() const { return *aes_; }
  const Key256& psk() const { return *config_.psk; }

 private:
  SessionConfig config_;
  std::optional<crypto::Aes256> aes_;
};

namespace detail {

inline void encrypt_payload(const SessionState& st, std::uint64_t counter, Bytes& payload) {
  const Salt& salt = st.config().salt_tx;
  switch (st.cipher()) {
    case CipherId::None: break;
    case CipherId::AesCtr: crypto::ctr_xcrypt_inplace(st.aes(), derive_ctr_iv(salt, counter), payload); break;
    case CipherId::AesCbc: payload = crypto::cbc_encrypt(st.aes(), derive_cbc_iv(salt, counter), payload); break;
    case CipherId::Rc4: {
      auto rc4 = derive_rc4_state(st.psk(), salt, counter);
      crypto::rc4_xcrypt_inplace(rc4, payload);
      break;
    }
    case CipherId::ChaCha20: crypto::ChaCha20(st.psk(), derive_chacha_nonce(salt, counter)).xcrypt(payload); break;
  }
}

inline void decrypt_payload(SessionState& st, std::uint64_t counter, Bytes& payload) {
  if (st.cipher() == CipherId::None) return;
  ++st.stats.decrypt_calls;
  const Salt& salt = st.config().salt_rx;
  switch (st.cipher()) {
    case CipherId::None: break;
    case CipherId::AesCtr: crypto::ctr_xcrypt_inplace(st.aes(), derive_ctr_iv(salt, counter), payload); break;
    case CipherId::AesCbc: payload = crypto::cbc_decrypt(st.aes(), derive_cbc_iv(salt, counter), payload); break;
    case CipherId::Rc4: {
      auto rc4 = derive_rc4_state(st.psk(), salt, counter);
      crypto::rc4_xcrypt_inplace(rc4, payload);
      break;
    }
    case CipherId::ChaCha20: crypto::ChaCha20(st.psk(), derive_chacha_nonce(salt, counter)).xcrypt(payload); break;
  }
}

}  // namespace detail

/// Encrypts the payload and computes the checksum over the ciphertext. The
/// frame's seq byte is assigned from the packet counter (as a MAVLink
/// channel does at finalize time); every other header field except `len`
/// under CBC is left alone. The first frame of a session must be a HEARTBEAT.
/// On error `st` is unchanged.
inline FrameV2 seal_frame(SessionState& st, FrameV2 frame, const Dialect& dialect) {
  const std::uint64_t counter = st.tx_counter;
  detail::check_counter(counter);
  if (counter == 0 && frame.msg_id != msg::kHeartbeatId) {
    throw Error(Errc::HeartbeatRequired, "first sealed frame must be a HEARTBEAT");
  }
  dialect.at(frame.msg_id);
  if (st.cipher() == CipherId::AesCbc && crypto::cbc_padded_len(frame.payload.size()) > kMaxPayloadLen) {
    throw Error(Errc::PayloadTooLong, "padded payload exceeds 255 bytes");
  }
  if (frame.payload.size() > kMaxPayloadLen) throw Error(Errc::PayloadTooLong, "payload exceeds 255 bytes");

  frame.seq = static_cast<std::uint8_t>(counter);
  detail::encrypt_payload(st, counter, frame.payload);
  finalize_checksum(frame, dialect);
  ++st.tx_counter;
  ++st.stats.sealed;
  return frame;
}

inline Bytes seal_to_wire(SessionState& st, FrameV2 frame, const Dialect& dialect) {
  return serialize_frame(seal_frame(st, std::move(frame), dialect));
}

/// Verifies the checksum over the ciphertext, then (and only then) decrypts.
/// The returned frame carries the plaintext payload; `checksum` is still the
/// one that travelled on the wire. On error `st` is unchanged except for
/// diagnostic counters.
inline FrameV2 open_frame(SessionState& st, ByteView buf, const Dialect& dialect) {
  FrameV2 frame = parse_frame(buf, dialect);
  const std::uint64_t counter = st.recover_counter(frame.seq);
  if (counter == kCounterLimit) throw Error(Errc::CounterRecoveryFailed, "counter at session limit");
  if (st.already_consumed(counter)) {
    ++st.stats.replay_rejections;
    throw Error(Errc::ReplayDetected, "packet counter " + std::to_string(counter));
  }
  detail::decrypt_payload(st, counter, frame.payload);
  st.mark_consumed(counter);
  ++st.stats.opened;
  return frame;
}

/// Marks `rx` live when `opened` is a well-formed HEARTBEAT.
inline bool observe_heartbeat(SessionState& rx, const FrameV2& opened) {
  if (opened.msg_id != msg::kHeartbeatId || !msg::payload_well_formed(opened.msg_id, opened.payload)) return false;
  rx.live = true;
  return true;
}

struct SessionPair {
  SessionState drone;
  SessionState gcs;
};

/// Both ends from explicit configs. Cipher or salt pairing disagreements are
/// caught here; a key mismatch only shows up when the first heartbeat fails
/// to open into a well-formed message.
inline SessionPair establish_session(const SessionConfig& drone_cfg, const SessionConfig& gcs_cfg) {
  if (drone_cfg.cipher != gcs_cfg.cipher) throw Error(Errc::ConfigMismatch, "cipher differs between endpoints");
  if (drone_cfg.salt_tx != gcs_cfg.salt_rx || drone_cfg.salt_rx != gcs_cfg.salt_tx) {
    throw Error(Errc::ConfigMismatch, "direction salts are not mirrored");
  }
  return {SessionState(drone_cfg), SessionState(gcs_cfg)};
}

inline SessionPair establish_session(const SessionConfig& drone_cfg) {
  return establish_session(drone_cfg, drone_cfg.mirrored());
}

}  // namespace mavsec
