#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chaoscrypt {

inline constexpr std::uint32_t kMinSide = 2;

// Keeps every linear pixel index representable in 32 bits (65535^2 < 2^32).
inline constexpr std::uint32_t kMaxGridSide = 65535;

// Square N x N 8-bit grayscale image, row-major. Pixel (row, col) lives at
// linear index row * N + col.
class PixelGrid {
 public:
  PixelGrid(std::uint32_t side, std::vector<std::uint8_t> data)
      : side_(side), data_(std::move(data)) {
    if (side_ < kMinSide || side_ > kMaxGridSide) {
      throw std::invalid_argument("image side must be in [2, 65535], got " +
                                  std::to_string(side_));
    }
    const std::size_t expected = std::size_t{side_} * side_;
    if (data_.size() != expected) {
      throw std::invalid_argument("image data holds " + std::to_string(data_.size()) +
                                  " bytes, side " + std::to_string(side_) +
                                  " needs " + std::to_string(expected));
    }
  }

  static PixelGrid zero(std::uint32_t side) {
    return PixelGrid(side, std::vector<std::uint8_t>(std::size_t{side} * side, 0));
  }

  std::uint32_t side() const noexcept { return side_; }
  std::size_t pixel_count() const noexcept { return data_.size(); }

  std::uint8_t operator[](std::size_t i) const { return data_[i]; }
  std::uint8_t& operator[](std::size_t i) { return data_[i]; }
  std::uint8_t at(std::uint32_t row, std::uint32_t col) const {
    return data_[std::size_t{row} * side_ + col];
  }

  std::span<const std::uint8_t> bytes() const noexcept { return data_; }
  std::span<std::uint8_t> bytes() noexcept { return data_; }

  friend bool operator==(const PixelGrid&, const PixelGrid&) = default;

 private:
  std::uint32_t side_;
  std::vector<std::uint8_t> data_;
};

}  // namespace chaoscrypt
