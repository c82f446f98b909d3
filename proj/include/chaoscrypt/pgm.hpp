#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "chaoscrypt/pixel_grid.hpp"

namespace chaoscrypt {

// Binary PGM ("P5"), maxval 255, width == height. parse_pgm accepts runs
// of whitespace and '#' comment lines between header tokens; encode_pgm
// emits the canonical "P5\n<N> <N>\n255\n" header, so encoding a parsed
// canonical file reproduces it byte for byte. Failures raise PgmError
// with the malformed class in kind().
PixelGrid parse_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_pgm(const PixelGrid& img);

PixelGrid read_pgm(const std::filesystem::path& path);
void write_pgm(const PixelGrid& img, const std::filesystem::path& path);

}  // namespace chaoscrypt
