#pragma once

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <sys/time.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "mavsec/bytes.hpp"
#include "mavsec/error.hpp"

namespace mavsec::net {

inline constexpr std::uint16_t kDefaultPort = 14550;

struct Endpoint {
  std::string host = "127.0.0.1";
  std::uint16_t port = kDefaultPort;

  std::string to_string() const { return host + ":" + std::to_string(port); }
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// "host:port", ":port" or "host" (default port).
inline Endpoint parse_endpoint(std::string_view text) {
  Endpoint ep;
  const auto colon = text.rfind(':');
  std::string_view host = text, port;
  if (colon != std::string_view::npos) {
    host = text.substr(0, colon);
    port = text.substr(colon + 1);
  }
  if (!host.empty()) ep.host = std::string(host);
  if (!port.empty()) {
    unsigned long v = 0;
    for (char c : port) {
      if (c < '0' || c > '9') throw Error(Errc::ConfigError, "bad port in '" + std::string(text) + "'");
      v = v * 10 + static_cast<unsigned long>(c - '0');
      if (v > 65535) throw Error(Errc::ConfigError, "port out of range in '" + std::string(text) + "'");
    }
    ep.port = static_cast<std::uint16_t>(v);
  }
  return ep;
}

inline sockaddr_in resolve(const Endpoint& ep) {
  sockaddr_in sa{};
  sa.sin_family = AF_INET;
  sa.sin_port = htons(ep.port);
  if (ep.host.empty() || ep.host == "0.0.0.0" || ep.host == "*") {
    sa.sin_addr.s_addr = htonl(INADDR_ANY);
    return sa;
  }
  if (inet_pton(AF_INET, ep.host.c_str(), &sa.sin_addr) == 1) return sa;
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_DGRAM;
  addrinfo* res = nullptr;
  if (getaddrinfo(ep.host.c_str(), nullptr, &hints, &res) != 0 || res == nullptr) {
    throw Error(Errc::ConfigError, "cannot resolve " + ep.host);
  }
  sa.sin_addr = reinterpret_cast<sockaddr_in*>(res->ai_addr)->sin_addr;
  freeaddrinfo(res);
  return sa;
}

/// Bound IPv4 UDP socket. Send and receive may run on different threads.
class UdpSocket {
 public:
  explicit UdpSocket(const Endpoint& bind_to) {
    fd_ = ::socket(AF_INET, SOCK_DGRAM, 0);
    if (fd_ < 0) throw Error(Errc::BindFailure, std::string("socket: ") + std::strerror(errno));
    const sockaddr_in sa = resolve(bind_to);
    if (::bind(fd_, reinterpret_cast<const sockaddr*>(&sa), sizeof sa) != 0) {
      const int err = errno;
      ::close(fd_);
      fd_ = -1;
      throw Error(Errc::BindFailure, "bind " + bind_to.to_string() + ": " + std::strerror(err));
    }
  }

  UdpSocket(const UdpSocket&) = delete;
  UdpSocket& operator=(const UdpSocket&) = delete;
  UdpSocket(UdpSocket&& o) noexcept : fd_(std::exchange(o.fd_, -1)) {}
  UdpSocket& operator=(UdpSocket&& o) noexcept {
    if (this != &o) {
      reset();
      fd_ = std::exchange(o.fd_, -1);
    }
    return *this;
  }
  ~UdpSocket() { reset(); }

  std::uint16_t local_port() const {
    sockaddr_in sa{};
    socklen_t len = sizeof sa;
    ::getsockname(fd_, reinterpret_cast<sockaddr*>(&sa), &len);
    return ntohs(sa.sin_port);
  }

  void set_receive_timeout(std::chrono::microseconds t) {
    timeval tv{};
    tv.tv_sec = static_cast<time_t>(t.count() / 1000000);
    tv.tv_usec = static_cast<suseconds_t>(t.count() % 1000000);
    ::setsockopt(fd_, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof tv);
  }

  /// Returns false if the kernel rejected the datagram (e.g. ENOBUFS).
  bool send_to(ByteView data, const sockaddr_in& to) const noexcept {
    const auto n = ::sendto(fd_, data.data(), data.size(), 0, reinterpret_cast<const sockaddr*>(&to), sizeof to);
    return n == static_cast<ssize_t>(data.size());
  }

  /// Blocks up to the receive timeout; nullopt on timeout or interruption.
  std::optional<std::size_t> receive(std::span<std::uint8_t> buf, sockaddr_in* from = nullptr) const noexcept {
    sockaddr_in src{};
    socklen_t len = sizeof src;
    const auto n = ::recvfrom(fd_, buf.data(), buf.size(), 0, reinterpret_cast<sockaddr*>(&src), &len);
    if (n < 0) return std::nullopt;
    if (from) *from = src;
    return static_cast<std::size_t>(n);
  }

 private:
  void reset() noexcept {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }

  int fd_ = -1;
};

}  // namespace mavsec::net
