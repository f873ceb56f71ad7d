#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "mavsec/bytes.hpp"
#include "mavsec/crc.hpp"
#include "mavsec/dialect.hpp"
#include "mavsec/error.hpp"

namespace mavsec {

inline constexpr std::uint8_t kMagicV2 = 0xFD;
inline constexpr std::uint8_t kIncompatSigned = 0x01;
inline constexpr std::size_t kHeaderLen = 10;  // stx .. msg_id
inline constexpr std::size_t kChecksumLen = 2;
inline constexpr std::size_t kSignatureLen = 13;
inline constexpr std::size_t kMinFrameLen = kHeaderLen + kChecksumLen;
inline constexpr std::size_t kMaxPayloadLen = 255;
inline constexpr std::size_t kMaxFrameLen = kMinFrameLen + kMaxPayloadLen + kSignatureLen;

using Signature = std::array<std::uint8_t, kSignatureLen>;

/// One MAVLink 2.0 packet. `len` is not stored separately: it is always
/// payload.size(), so the two cannot disagree.
struct FrameV2 {
  std::uint8_t incompat_flags = 0;
  std::uint8_t compat_flags = 0;
  std::uint8_t seq = 0;
  std::uint8_t sys_id = 0;
  std::uint8_t comp_id = 0;
  std::uint32_t msg_id = 0;
  Bytes payload;
  std::uint16_t checksum = 0;
  std::optional<Signature> signature;

  static constexpr std::uint8_t stx = kMagicV2;

  std::uint8_t len() const noexcept { return static_cast<std::uint8_t>(payload.size()); }
  bool is_signed() const noexcept { return signature.has_value(); }
  std::size_t wire_size() const noexcept {
    return kMinFrameLen + payload.size() + (signature ? kSignatureLen : 0);
  }

  void set_signature(const Signature& sig) {
    signature = sig;
    incompat_flags |= kIncompatSigned;
  }
  void clear_signature() {
    signature.reset();
    incompat_flags &= static_cast<std::uint8_t>(~kIncompatSigned);
  }

  /// Throws InvalidFrame when an invariant is broken.
  void validate() const {
    if (payload.size() > kMaxPayloadLen) throw Error(Errc::InvalidFrame, "payload longer than 255 bytes");
    if (msg_id > 0xFFFFFF) throw Error(Errc::InvalidFrame, "msg_id exceeds 24 bits");
    if (((incompat_flags & kIncompatSigned) != 0) != signature.has_value()) {
      throw Error(Errc::InvalidFrame, "signature presence disagrees with incompat_flags bit 0");
    }
  }

  friend bool operator==(const FrameV2&, const FrameV2&) = default;
};

namespace detail {

inline void write_header(std::uint8_t* out, const FrameV2& f) noexcept {
  out[0] = kMagicV2;
  out[1] = f.len();
  out[2] = f.incompat_flags;
  out[3] = f.compat_flags;
  out[4] = f.seq;
  out[5] = f.sys_id;
  out[6] = f.comp_id;
  out[7] = static_cast<std::uint8_t>(f.msg_id);
  out[8] = static_cast<std::uint8_t>(f.msg_id >> 8);
  out[9] = static_cast<std::uint8_t>(f.msg_id >> 16);
}

// CRC over len..payload then crc_extra; `wire` starts at the stx byte.
inline std::uint16_t checksum_over_wire(ByteView wire, std::size_t payload_len, std::uint8_t crc_extra) noexcept {
  std::uint16_t crc = crc16_x25_update(kCrcSeed, wire.subspan(1, kHeaderLen - 1 + payload_len));
  return crc16_x25_update(crc, crc_extra);
}

}  // namespace detail

inline std::uint16_t compute_checksum(const FrameV2& frame, const Dialect& dialect) {
  const MessageDef& def = dialect.at(frame.msg_id);
  std::array<std::uint8_t, kHeaderLen> header{};
  detail::write_header(header.data(), frame);
  std::uint16_t crc = crc16_x25_update(kCrcSeed, ByteView(header).subspan(1));
  crc = crc16_x25_update(crc, ByteView(frame.payload));
  return crc16_x25_update(crc, def.crc_extra);
}

/// Fills in the checksum field from the dialect.
inline void finalize_checksum(FrameV2& frame, const Dialect& dialect) {
  frame.checksum = compute_checksum(frame, dialect);
}

inline Bytes serialize_frame(const FrameV2& frame) {
  frame.validate();
  Bytes out(frame.wire_size());
  detail::write_header(out.data(), frame);
  std::copy(frame.payload.begin(), frame.payload.end(), out.begin() + kHeaderLen);
  std::size_t pos = kHeaderLen + frame.payload.size();
  out[pos++] = static_cast<std::uint8_t>(frame.checksum & 0xFF);
  out[pos++] = static_cast<std::uint8_t>(frame.checksum >> 8);
  if (frame.signature) std::copy(frame.signature->begin(), frame.signature->end(), out.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

/// Parses one frame from the start of `buf`. Trailing bytes past the frame
/// are ignored. Checksum is verified before anything is returned.
inline FrameV2 parse_frame(ByteView buf, const Dialect& dialect) {
  if (buf.empty()) throw Error(Errc::Truncated, "empty buffer");
  if (buf[0] != kMagicV2) throw Error(Errc::BadMagic, "first byte is not 0xFD");
  if (buf.size() < kMinFrameLen) throw Error(Errc::Truncated, "shorter than minimum frame");

  const std::size_t len = buf[1];
  const bool is_signed = (buf[2] & kIncompatSigned) != 0;
  const std::size_t need = kMinFrameLen + len + (is_signed ? kSignatureLen : 0);
  if (buf.size() < need) throw Error(Errc::Truncated, "frame declares " + std::to_string(need) + " bytes");

  FrameV2 f;
  f.incompat_flags = buf[2];
  f.compat_flags = buf[3];
  f.seq = buf[4];
  f.sys_id = buf[5];
  f.comp_id = buf[6];
  f.msg_id = static_cast<std::uint32_t>(buf[7]) | (static_cast<std::uint32_t>(buf[8]) << 8) |
             (static_cast<std::uint32_t>(buf[9]) << 16);

  const MessageDef& def = dialect.at(f.msg_id);
  const std::size_t ck = kHeaderLen + len;
  f.checksum = static_cast<std::uint16_t>(buf[ck] | (buf[ck + 1] << 8));
  if (detail::checksum_over_wire(buf, len, def.crc_extra) != f.checksum) {
    throw Error(Errc::ChecksumMismatch, "msg_id " + std::to_string(f.msg_id));
  }

  f.payload.assign(buf.begin() + kHeaderLen, buf.begin() + static_cast<std::ptrdiff_t>(ck));
  if (is_signed) {
    Signature sig{};
    std::copy_n(buf.begin() + static_cast<std::ptrdiff_t>(ck + kChecksumLen), kSignatureLen, sig.begin());
    f.signature = sig;
  }
  return f;
}

}  // namespace mavsec
