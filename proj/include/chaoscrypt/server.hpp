#pragma once

#include <atomic>
#include <cstdint>
#include <ostream>
#include <string>

#include "chaoscrypt/key.hpp"
#include "chaoscrypt/net.hpp"

namespace chaoscrypt {

// TCP embodiment of the encryption machinery: binds, then answers query
// frames with ciphertext frames until stop(). Connections are served one
// at a time; requests on a connection strictly in order. A malformed
// frame gets an error frame back and the connection is closed. The key is
// never written to the log stream.
class OracleServer {
 public:
  // Binds immediately (port 0 picks a free port); throws ProtocolError on
  // failure. `log` may be null for silent operation.
  OracleServer(SecretKey key, const std::string& listen_endpoint,
               std::ostream* log = nullptr);

  std::uint16_t port() const { return listener_.local_port(); }
  std::uint64_t query_count() const noexcept { return queries_.load(); }

  // Accept loop; returns after stop() is called from another thread.
  void run();
  void stop() noexcept;

 private:
  void serve_connection(net::Socket& sock);

  SecretKey key_;
  net::Listener listener_;
  std::ostream* log_;
  std::atomic<bool> stop_requested_{false};
  std::atomic<std::uint64_t> queries_{0};
};

}  // namespace chaoscrypt
