#pragma once

#include <cstdint>
#include <optional>

#include "chaoscrypt/net.hpp"
#include "chaoscrypt/pixel_grid.hpp"

namespace chaoscrypt::wire {

// Oracle wire protocol, one request-response pair at a time per
// connection (multiple pairs per connection allowed sequentially):
//
//   request   0x43 0x51 ("CQ")  4-byte big-endian N  N^2 plaintext bytes
//   response  0x43 0x52 ("CR")  4-byte big-endian N  N^2 ciphertext bytes
//   error     0x43 0x45 ("CE")  2-byte big-endian code
//
// All payload bytes are row-major rasters.

inline constexpr std::uint8_t kMagic = 0x43;      // 'C'
inline constexpr std::uint8_t kQueryTag = 0x51;   // 'Q'
inline constexpr std::uint8_t kReplyTag = 0x52;   // 'R'
inline constexpr std::uint8_t kErrorTag = 0x45;   // 'E'

// Hard size cap; frames announcing a larger side are refused.
inline constexpr std::uint32_t kMaxSide = 4096;

enum class ErrorCode : std::uint16_t {
  BadFrame = 1,        // wrong magic or truncated frame
  SideOutOfRange = 2,  // N < 2 or N > kMaxSide
  EncryptFailed = 3,   // the hidden key could not encrypt this request
};

void send_query(net::Socket& sock, const PixelGrid& img);
void send_reply(net::Socket& sock, const PixelGrid& img);
void send_error(net::Socket& sock, ErrorCode code);

// Client side: reads a reply frame. An error frame raises ProtocolError
// carrying the frame's code; a malformed frame raises ProtocolError too.
PixelGrid read_reply(net::Socket& sock);

// Server side: reads the next query frame. A clean peer close before the
// frame starts returns nullopt; a malformed or oversized frame raises
// ProtocolError with the matching ErrorCode value.
std::optional<PixelGrid> read_query(net::Socket& sock);

}  // namespace chaoscrypt::wire
