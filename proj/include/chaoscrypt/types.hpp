#pragma once

#include <cstdint>
#include <vector>

namespace chaoscrypt {

// Byte sequence XORed over the row-major scan of a shuffled image.
using Keystream = std::vector<std::uint8_t>;

}  // namespace chaoscrypt
