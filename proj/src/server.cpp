#include "chaoscrypt/server.hpp"

#include <utility>

#include "chaoscrypt/cipher.hpp"
#include "chaoscrypt/error.hpp"
#include "chaoscrypt/wire.hpp"

namespace chaoscrypt {

OracleServer::OracleServer(SecretKey key, const std::string& listen_endpoint,
                           std::ostream* log)
    : key_(std::move(key)), listener_(net::Listener::bind_to(net::parse_endpoint(listen_endpoint))),
      log_(log) {
  validate_key(key_);
}

void OracleServer::run() {
  while (!stop_requested_.load()) {
    auto sock = listener_.accept_within(100);
    if (!sock) {
      continue;
    }
    serve_connection(*sock);
  }
}

void OracleServer::stop() noexcept {
  stop_requested_.store(true);
  listener_.close();
}

void OracleServer::serve_connection(net::Socket& sock) {
  for (;;) {
    std::optional<PixelGrid> query;
    try {
      query = wire::read_query(sock);
    } catch (const ProtocolError& e) {
      // Framing is unrecoverable; answer with an error frame and drop the
      // connection. Sending may itself fail if the peer vanished.
      const auto code = e.code() != 0
                            ? static_cast<wire::ErrorCode>(e.code())
                            : wire::ErrorCode::BadFrame;
      try {
        wire::send_error(sock, code);
        sock.shutdown_send_and_drain();
      } catch (const ProtocolError&) {
      }
      if (log_ != nullptr) {
        *log_ << "oracle: dropped connection: " << e.what() << '\n';
      }
      return;
    }
    if (!query) {
      return;  // peer finished cleanly
    }

    try {
      const PixelGrid reply = encrypt(*query, key_);
      wire::send_reply(sock, reply);
    } catch (const ProtocolError&) {
      return;  // peer vanished mid-reply
    } catch (const std::exception&) {
      try {
        wire::send_error(sock, wire::ErrorCode::EncryptFailed);
        sock.shutdown_send_and_drain();
      } catch (const ProtocolError&) {
      }
      return;
    }

    const std::uint64_t served = queries_.fetch_add(1) + 1;
    if (log_ != nullptr) {
      *log_ << "oracle: served query #" << served << " (N=" << query->side() << ")\n";
    }
  }
}

}  // namespace chaoscrypt
