#pragma once

#include <array>
#include <cstdint>

namespace chaoscrypt::kat {

// 4x4 known-answer scenario: a fixed keystream, a fixed pixel shuffle,
// and the matrices every stage of the attack must reproduce bit-exactly.
// `chaoscrypt demo-algorithm1` walks and verifies the whole set.

inline constexpr std::uint32_t kSide = 4;

inline constexpr std::array<std::uint8_t, 16> kPlain = {
    23,  45,  64,  32,   //
    179, 180, 26,  58,   //
    67,  136, 139, 20,   //
    17,  99,  220, 100,  //
};

inline constexpr std::array<std::uint8_t, 16> kKeystream = {
    186, 24, 39, 72,   //
    23,  87, 47, 13,   //
    221, 49, 50, 2,    //
    44,  32, 65, 110,  //
};

inline constexpr std::array<std::uint8_t, 16> kCipher = {
    174, 123, 7,   252,  //
    6,   23,  156, 134,  //
    240, 11,  186, 102,  //
    54,  99,  157, 121,  //
};

// kCipher ^ kKeystream: the shuffled plain image.
inline constexpr std::array<std::uint8_t, 16> kShuffled = {
    20, 99, 32,  180,  //
    17, 64, 179, 139,  //
    45, 58, 136, 100,  //
    26, 67, 220, 23,   //
};

// Index probe with 1-based pixel values 1..16.
inline constexpr std::array<std::uint8_t, 16> kProbe = {
    1,  2,  3,  4,   //
    5,  6,  7,  8,   //
    9,  10, 11, 12,  //
    13, 14, 15, 16,  //
};

// The oracle's answer to kProbe.
inline constexpr std::array<std::uint8_t, 16> kProbeCipher = {
    182, 22, 35, 78,   //
    26,  84, 42, 6,    //
    223, 57, 56, 18,   //
    43,  41, 78, 111,  //
};

// kProbeCipher ^ kKeystream: the 1-based source index of every shuffled
// cell, i.e. the shuffle table in matrix form.
inline constexpr std::array<std::uint8_t, 16> kProbeShuffled = {
    12, 14, 4,  6,   //
    13, 3,  5,  11,  //
    2,  8,  10, 16,  //
    7,  9,  15, 1,   //
};

// The same table 0-based: source[d] = kProbeShuffled[d] - 1. Note that
// source[0] != 0, so this particular shuffle is not realizable as a cat
// map (those always fix the origin); the attack treats it as an arbitrary
// bijection, which is all it needs.
inline constexpr std::array<std::uint32_t, 16> kPermutationSource = {
    11, 13, 3, 5, 12, 2, 4, 10, 1, 7, 9, 15, 6, 8, 14, 0,
};

}  // namespace chaoscrypt::kat
