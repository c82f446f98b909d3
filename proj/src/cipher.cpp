#include "chaoscrypt/cipher.hpp"

#include <stdexcept>
#include <string>

namespace chaoscrypt {

PermutationMap permutation_for_key(const SecretKey& key, std::uint32_t side) {
  validate_key(key);
  return build_permutation(iterate_matrix(cat_matrix(key.p, key.q), key.n, side), side);
}

PixelGrid xor_bytes(const PixelGrid& img, std::span<const std::uint8_t> ks) {
  if (ks.size() != img.pixel_count()) {
    throw std::invalid_argument("keystream holds " + std::to_string(ks.size()) +
                                " bytes but image has " +
                                std::to_string(img.pixel_count()) + " pixels");
  }
  std::vector<std::uint8_t> out(img.bytes().begin(), img.bytes().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] ^= ks[i];
  }
  return PixelGrid(img.side(), std::move(out));
}

PixelGrid encrypt_with_parts(const PixelGrid& img, const PermutationMap& perm,
                             std::span<const std::uint8_t> ks) {
  return xor_bytes(shuffle(img, perm), ks);
}

PixelGrid encrypt(const PixelGrid& img, const SecretKey& key) {
  const PermutationMap perm = permutation_for_key(key, img.side());
  const Keystream ks = derive_keystream(key, img.pixel_count());
  return encrypt_with_parts(img, perm, ks);
}

PixelGrid decrypt(const PixelGrid& cipher, const SecretKey& key) {
  const PermutationMap perm = permutation_for_key(key, cipher.side());
  const Keystream ks = derive_keystream(key, cipher.pixel_count());
  return unshuffle(xor_bytes(cipher, ks), perm);
}

}  // namespace chaoscrypt
