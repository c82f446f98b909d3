#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace chaoscrypt::net {

struct Endpoint {
  std::string host;
  std::uint16_t port = 0;
};

// Parses "host:port". Throws std::invalid_argument on anything else.
Endpoint parse_endpoint(const std::string& text);

// Move-only RAII wrapper over a connected TCP socket.
class Socket {
 public:
  Socket() = default;
  explicit Socket(int fd) : fd_(fd) {}
  Socket(Socket&& other) noexcept;
  Socket& operator=(Socket&& other) noexcept;
  Socket(const Socket&) = delete;
  Socket& operator=(const Socket&) = delete;
  ~Socket();

  bool valid() const noexcept { return fd_ >= 0; }
  void close() noexcept;

  // Throws ProtocolError on I/O failure or peer close.
  void send_all(std::span<const std::uint8_t> data);
  void recv_exact(std::span<std::uint8_t> out);

  // Like recv_exact, but a clean peer close before the first byte returns
  // false instead of throwing.
  bool recv_exact_or_eof(std::span<std::uint8_t> out);

  // Graceful close of the sending side: flushes our last bytes to the
  // peer, then discards whatever the peer still has in flight (bounded by
  // max_bytes and a short poll timeout) so closing does not turn into a
  // reset that destroys the data we just sent.
  void shutdown_send_and_drain(std::size_t max_bytes = 1 << 20) noexcept;

 private:
  int fd_ = -1;
};

// Throws ProtocolError if the endpoint is unreachable.
Socket connect_to(const Endpoint& endpoint);

// Listening socket; accept is poll-based so a concurrent close() unblocks
// the accept loop promptly.
class Listener {
 public:
  Listener() = default;
  Listener(Listener&& other) noexcept;
  Listener& operator=(Listener&& other) noexcept;
  Listener(const Listener&) = delete;
  Listener& operator=(const Listener&) = delete;
  ~Listener();

  // Throws ProtocolError on bind failure. Port 0 picks a free port.
  static Listener bind_to(const Endpoint& endpoint);

  std::uint16_t local_port() const;
  bool valid() const noexcept { return fd_ >= 0; }
  void close() noexcept;

  // Waits up to timeout_ms for a connection; nullopt on timeout or after
  // close().
  std::optional<Socket> accept_within(int timeout_ms);

 private:
  int fd_ = -1;
};

}  // namespace chaoscrypt::net
