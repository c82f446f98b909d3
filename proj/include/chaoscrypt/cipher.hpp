#pragma once

#include <cstdint>
#include <span>

#include "chaoscrypt/arnold.hpp"
#include "chaoscrypt/chen.hpp"
#include "chaoscrypt/key.hpp"
#include "chaoscrypt/pixel_grid.hpp"
#include "chaoscrypt/types.hpp"

namespace chaoscrypt {

// Cat-map permutation selected by (p, q, n) for an N x N grid.
PermutationMap permutation_for_key(const SecretKey& key, std::uint32_t side);

// Bytewise XOR of an image with a same-length byte sequence.
PixelGrid xor_bytes(const PixelGrid& img, std::span<const std::uint8_t> ks);

// Dependency-injected encryption: XOR(shuffle(img, perm), ks).
PixelGrid encrypt_with_parts(const PixelGrid& img, const PermutationMap& perm,
                             std::span<const std::uint8_t> ks);

// Shuffle with the key's cat-map permutation, then XOR the key's
// keystream over the row-major scan.
PixelGrid encrypt(const PixelGrid& img, const SecretKey& key);

// XOR the keystream off, then unshuffle; decrypt(encrypt(P, k), k) == P.
PixelGrid decrypt(const PixelGrid& img, const SecretKey& key);

}  // namespace chaoscrypt
