#include "chaoscrypt/wire.hpp"

#include <array>
#include <string>
#include <vector>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt::wire {

namespace {

void store_be32(std::uint32_t v, std::uint8_t* out) {
  out[0] = static_cast<std::uint8_t>(v >> 24);
  out[1] = static_cast<std::uint8_t>(v >> 16);
  out[2] = static_cast<std::uint8_t>(v >> 8);
  out[3] = static_cast<std::uint8_t>(v);
}

std::uint32_t load_be32(const std::uint8_t* in) {
  return (std::uint32_t{in[0]} << 24) | (std::uint32_t{in[1]} << 16) |
         (std::uint32_t{in[2]} << 8) | std::uint32_t{in[3]};
}

void send_image_frame(net::Socket& sock, std::uint8_t tag, const PixelGrid& img) {
  std::vector<std::uint8_t> frame(6 + img.pixel_count());
  frame[0] = kMagic;
  frame[1] = tag;
  store_be32(img.side(), frame.data() + 2);
  std::copy(img.bytes().begin(), img.bytes().end(), frame.begin() + 6);
  sock.send_all(frame);
}

PixelGrid read_image_payload(net::Socket& sock) {
  std::array<std::uint8_t, 4> side_bytes{};
  sock.recv_exact(side_bytes);
  const std::uint32_t side = load_be32(side_bytes.data());
  if (side < kMinSide || side > kMaxSide) {
    throw ProtocolError("frame side " + std::to_string(side) + " out of range [2, " +
                            std::to_string(kMaxSide) + "]",
                        static_cast<std::uint16_t>(ErrorCode::SideOutOfRange));
  }
  std::vector<std::uint8_t> raster(std::size_t{side} * side);
  sock.recv_exact(raster);
  return PixelGrid(side, std::move(raster));
}

}  // namespace

void send_query(net::Socket& sock, const PixelGrid& img) {
  send_image_frame(sock, kQueryTag, img);
}

void send_reply(net::Socket& sock, const PixelGrid& img) {
  send_image_frame(sock, kReplyTag, img);
}

void send_error(net::Socket& sock, ErrorCode code) {
  const auto value = static_cast<std::uint16_t>(code);
  const std::array<std::uint8_t, 4> frame{kMagic, kErrorTag,
                                          static_cast<std::uint8_t>(value >> 8),
                                          static_cast<std::uint8_t>(value)};
  sock.send_all(frame);
}

PixelGrid read_reply(net::Socket& sock) {
  std::array<std::uint8_t, 2> head{};
  sock.recv_exact(head);
  if (head[0] != kMagic) {
    throw ProtocolError("malformed response frame: bad magic");
  }
  if (head[1] == kErrorTag) {
    std::array<std::uint8_t, 2> code_bytes{};
    sock.recv_exact(code_bytes);
    const std::uint16_t code =
        static_cast<std::uint16_t>((std::uint16_t{code_bytes[0]} << 8) | code_bytes[1]);
    throw ProtocolError("oracle refused the query (error code " + std::to_string(code) + ")",
                        code);
  }
  if (head[1] != kReplyTag) {
    throw ProtocolError("malformed response frame: unexpected tag");
  }
  return read_image_payload(sock);
}

std::optional<PixelGrid> read_query(net::Socket& sock) {
  std::array<std::uint8_t, 2> head{};
  if (!sock.recv_exact_or_eof(head)) {
    return std::nullopt;
  }
  if (head[0] != kMagic || head[1] != kQueryTag) {
    throw ProtocolError("malformed request frame: bad magic",
                        static_cast<std::uint16_t>(ErrorCode::BadFrame));
  }
  return read_image_payload(sock);
}

}  // namespace chaoscrypt::wire
