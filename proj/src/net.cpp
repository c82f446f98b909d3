#include "chaoscrypt/net.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <stdexcept>
#include <utility>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt::net {

namespace {

[[noreturn]] void raise_errno(const std::string& what) {
  throw ProtocolError(what + ": " + std::strerror(errno));
}

struct AddrInfo {
  addrinfo* list = nullptr;

  AddrInfo() = default;
  AddrInfo(AddrInfo&& other) noexcept : list(std::exchange(other.list, nullptr)) {}
  AddrInfo(const AddrInfo&) = delete;
  AddrInfo& operator=(const AddrInfo&) = delete;
  AddrInfo& operator=(AddrInfo&&) = delete;
  ~AddrInfo() {
    if (list != nullptr) {
      ::freeaddrinfo(list);
    }
  }
};

AddrInfo resolve(const Endpoint& ep, bool passive) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  hints.ai_flags = passive ? AI_PASSIVE : 0;
  AddrInfo out;
  const std::string port = std::to_string(ep.port);
  const int rc = ::getaddrinfo(ep.host.empty() ? nullptr : ep.host.c_str(), port.c_str(),
                               &hints, &out.list);
  if (rc != 0) {
    throw ProtocolError("cannot resolve '" + ep.host + "': " + ::gai_strerror(rc));
  }
  return out;
}

}  // namespace

Endpoint parse_endpoint(const std::string& text) {
  const std::size_t colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
    throw std::invalid_argument("endpoint must be host:port, got '" + text + "'");
  }
  const std::string port_str = text.substr(colon + 1);
  unsigned long port = 0;
  try {
    std::size_t used = 0;
    port = std::stoul(port_str, &used, 10);
    if (used != port_str.size()) {
      throw std::invalid_argument("");
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("endpoint port must be a number, got '" + port_str + "'");
  }
  if (port > 65535) {
    throw std::invalid_argument("endpoint port out of range: " + port_str);
  }
  return Endpoint{text.substr(0, colon), static_cast<std::uint16_t>(port)};
}

Socket::Socket(Socket&& other) noexcept : fd_(std::exchange(other.fd_, -1)) {}

Socket& Socket::operator=(Socket&& other) noexcept {
  if (this != &other) {
    close();
    fd_ = std::exchange(other.fd_, -1);
  }
  return *this;
}

Socket::~Socket() { close(); }

void Socket::close() noexcept {
  if (fd_ >= 0) {
    ::close(fd_);
    fd_ = -1;
  }
}

void Socket::send_all(std::span<const std::uint8_t> data) {
  std::size_t sent = 0;
  while (sent < data.size()) {
    const ssize_t n = ::send(fd_, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) {
        continue;
      }
      raise_errno("send failed");
    }
    sent += static_cast<std::size_t>(n);
  }
}

void Socket::recv_exact(std::span<std::uint8_t> out) {
  if (!recv_exact_or_eof(out)) {
    throw ProtocolError("connection closed by peer");
  }
}

bool Socket::recv_exact_or_eof(std::span<std::uint8_t> out) {
  std::size_t got = 0;
  while (got < out.size()) {
    const ssize_t n = ::recv(fd_, out.data() + got, out.size() - got, 0);
    if (n < 0) {
      if (errno == EINTR) {
        continue;
      }
      raise_errno("recv failed");
    }
    if (n == 0) {
      if (got == 0) {
        return false;
      }
      throw ProtocolError("connection closed mid-frame");
    }
    got += static_cast<std::size_t>(n);
  }
  return true;
}

void Socket::shutdown_send_and_drain(std::size_t max_bytes) noexcept {
  if (fd_ < 0) {
    return;
  }
  ::shutdown(fd_, SHUT_WR);
  std::uint8_t scratch[4096];
  std::size_t drained = 0;
  while (drained < max_bytes) {
    pollfd pfd{fd_, POLLIN, 0};
    if (::poll(&pfd, 1, 200) <= 0) {
      break;
    }
    const ssize_t n = ::recv(fd_, scratch, sizeof(scratch), 0);
    if (n <= 0) {
      break;
    }
    drained += static_cast<std::size_t>(n);
  }
}

Socket connect_to(const Endpoint& endpoint) {
  const AddrInfo addrs = resolve(endpoint, /*passive=*/false);
  int last_errno = ECONNREFUSED;
  for (addrinfo* ai = addrs.list; ai != nullptr; ai = ai->ai_next) {
    const int fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) {
      last_errno = errno;
      continue;
    }
    if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) {
      const int one = 1;
      ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
      return Socket(fd);
    }
    last_errno = errno;
    ::close(fd);
  }
  throw ProtocolError("cannot connect to " + endpoint.host + ":" +
                      std::to_string(endpoint.port) + ": " + std::strerror(last_errno));
}

Listener::Listener(Listener&& other) noexcept : fd_(std::exchange(other.fd_, -1)) {}

Listener& Listener::operator=(Listener&& other) noexcept {
  if (this != &other) {
    close();
    fd_ = std::exchange(other.fd_, -1);
  }
  return *this;
}

Listener::~Listener() { close(); }

void Listener::close() noexcept {
  if (fd_ >= 0) {
    ::close(fd_);
    fd_ = -1;
  }
}

Listener Listener::bind_to(const Endpoint& endpoint) {
  const AddrInfo addrs = resolve(endpoint, /*passive=*/true);
  int last_errno = EADDRNOTAVAIL;
  for (addrinfo* ai = addrs.list; ai != nullptr; ai = ai->ai_next) {
    const int fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) {
      last_errno = errno;
      continue;
    }
    const int one = 1;
    ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    if (::bind(fd, ai->ai_addr, ai->ai_addrlen) == 0 && ::listen(fd, 8) == 0) {
      Listener out;
      out.fd_ = fd;
      return out;
    }
    last_errno = errno;
    ::close(fd);
  }
  throw ProtocolError("cannot bind " + endpoint.host + ":" + std::to_string(endpoint.port) +
                      ": " + std::strerror(last_errno));
}

std::uint16_t Listener::local_port() const {
  sockaddr_storage addr{};
  socklen_t len = sizeof(addr);
  if (fd_ < 0 || ::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len) != 0) {
    throw ProtocolError("listener is not bound");
  }
  if (addr.ss_family == AF_INET) {
    return ntohs(reinterpret_cast<const sockaddr_in*>(&addr)->sin_port);
  }
  return ntohs(reinterpret_cast<const sockaddr_in6*>(&addr)->sin6_port);
}

std::optional<Socket> Listener::accept_within(int timeout_ms) {
  if (fd_ < 0) {
    return std::nullopt;
  }
  pollfd pfd{fd_, POLLIN, 0};
  const int ready = ::poll(&pfd, 1, timeout_ms);
  if (ready <= 0) {
    return std::nullopt;
  }
  const int client = ::accept(fd_, nullptr, nullptr);
  if (client < 0) {
    return std::nullopt;
  }
  const int one = 1;
  ::setsockopt(client, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
  return Socket(client);
}

}  // namespace chaoscrypt::net
