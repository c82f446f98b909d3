#include "chaoscrypt/attack.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

std::size_t probe_count(std::uint32_t side) {
  const std::size_t pixels = std::size_t{side} * side;
  std::size_t r = 1;
  std::size_t coverage = 256;
  while (coverage < pixels) {
    coverage *= 256;
    ++r;
  }
  return r;
}

ProbeSet build_probes(std::uint32_t side) {
  if (side < kMinSide) {
    throw std::invalid_argument("probe side must be at least 2");
  }
  const std::size_t pixels = std::size_t{side} * side;
  const std::size_t r = probe_count(side);

  ProbeSet set{side, {}};
  set.probes.reserve(r);
  std::size_t divisor = 1;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<std::uint8_t> data(pixels);
    for (std::size_t i = 0; i < pixels; ++i) {
      data[i] = static_cast<std::uint8_t>((i / divisor) % 256);
    }
    set.probes.emplace_back(side, std::move(data));
    divisor *= 256;
  }
  return set;
}

namespace {

void xor_in_place(std::vector<std::uint8_t>& data, const Keystream& ks) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    data[i] ^= ks[i];
  }
}

}  // namespace

Keystream recover_keystream(Oracle& oracle, std::uint32_t side) {
  const PixelGrid response = oracle.encrypt_image(PixelGrid::zero(side));
  if (response.side() != side) {
    throw OracleInconsistency("oracle answered side " + std::to_string(response.side()) +
                              " to a side-" + std::to_string(side) + " query");
  }
  return Keystream(response.bytes().begin(), response.bytes().end());
}

PermutationMap recover_permutation(Oracle& oracle, const Keystream& ks,
                                   std::uint32_t side) {
  const std::size_t pixels = std::size_t{side} * side;
  if (ks.size() != pixels) {
    throw std::invalid_argument("keystream holds " + std::to_string(ks.size()) +
                                " bytes but the grid has " + std::to_string(pixels) +
                                " pixels");
  }

  const ProbeSet probes = build_probes(side);

  // source[d] = sum_j shuffled_probe_j[d] * 256^j: each stripped response
  // carries one base-256 digit of the source index.
  std::vector<std::uint32_t> source(pixels, 0);
  std::uint64_t weight = 1;
  for (const PixelGrid& probe : probes.probes) {
    const PixelGrid response = oracle.encrypt_image(probe);
    if (response.side() != side) {
      throw OracleInconsistency("oracle answered side " + std::to_string(response.side()) +
                                " to a side-" + std::to_string(side) + " probe");
    }
    std::vector<std::uint8_t> digits(response.bytes().begin(), response.bytes().end());
    xor_in_place(digits, ks);
    for (std::size_t d = 0; d < pixels; ++d) {
      source[d] = static_cast<std::uint32_t>(source[d] + weight * digits[d]);
    }
    weight *= 256;
  }

  std::vector<bool> seen(pixels, false);
  for (std::size_t d = 0; d < pixels; ++d) {
    if (source[d] >= pixels || seen[source[d]]) {
      throw OracleInconsistency(
          "recovered shuffle table is not a bijection (entry at position " +
          std::to_string(d) +
          "); the keystream changed between queries or a response was corrupted");
    }
    seen[source[d]] = true;
  }
  return PermutationMap(side, std::move(source));
}

PixelGrid recover_plaintext(const PixelGrid& cipher, const Keystream& ks,
                            const PermutationMap& perm) {
  if (ks.size() != cipher.pixel_count()) {
    throw std::invalid_argument("keystream holds " + std::to_string(ks.size()) +
                                " bytes but the cipher image has " +
                                std::to_string(cipher.pixel_count()) + " pixels");
  }
  std::vector<std::uint8_t> shuffled(cipher.bytes().begin(), cipher.bytes().end());
  xor_in_place(shuffled, ks);
  return unshuffle(PixelGrid(cipher.side(), std::move(shuffled)), perm);
}

AttackTranscript full_attack(Oracle& oracle, const PixelGrid& intercepted) {
  const std::uint64_t queries_before = oracle.query_count();
  const std::uint32_t side = intercepted.side();

  Keystream ks = recover_keystream(oracle, side);
  PermutationMap perm = recover_permutation(oracle, ks, side);
  PixelGrid plain = recover_plaintext(intercepted, ks, perm);

  return AttackTranscript{
      std::move(ks),
      std::move(perm),
      oracle.query_count() - queries_before,
      std::move(plain),
  };
}

}  // namespace chaoscrypt
