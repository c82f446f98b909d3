#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chaoscrypt/arnold.hpp"
#include "chaoscrypt/oracle.hpp"
#include "chaoscrypt/pixel_grid.hpp"
#include "chaoscrypt/types.hpp"

namespace chaoscrypt {

// Chosen-plaintext break of the cipher. Works entirely through an Oracle
// and the intercepted image; no function here accepts key material.
//
// Query budget: 1 zero probe recovers the keystream, then r index probes
// recover the shuffle, r = max(1, ceil(log256(N^2))). One 8-bit probe
// image holds one base-256 digit per pixel, so a single probe covers all
// indices only while N^2 <= 256 (N <= 16); larger grids spread the index
// over r probes.

// Number of index probes needed for an N x N grid.
std::size_t probe_count(std::uint32_t side);

// Probe j holds pixel value floor(i / 256^j) mod 256 at linear index i,
// so the value tuple across probes spells out i in base 256.
struct ProbeSet {
  std::uint32_t side = 0;
  std::vector<PixelGrid> probes;
};

ProbeSet build_probes(std::uint32_t side);

struct AttackTranscript {
  Keystream recovered_keystream;
  PermutationMap recovered_permutation;
  std::uint64_t oracle_queries = 0;
  PixelGrid recovered_plaintext;
};

// Submits the all-zero N x N image; the shuffle of zeros is zeros, so the
// response is the keystream verbatim.
Keystream recover_keystream(Oracle& oracle, std::uint32_t side);

// Encrypts each probe, strips the keystream, and reads the source index
// of every shuffled cell straight out of the probe values. Throws
// OracleInconsistency if the reassembled table is not a bijection.
PermutationMap recover_permutation(Oracle& oracle, const Keystream& ks,
                                   std::uint32_t side);

// unshuffle(cipher XOR ks, perm).
PixelGrid recover_plaintext(const PixelGrid& cipher, const Keystream& ks,
                            const PermutationMap& perm);

// The whole break: keystream, permutation, plaintext, plus the number of
// oracle queries spent (1 + probe_count(N)).
AttackTranscript full_attack(Oracle& oracle, const PixelGrid& intercepted);

}  // namespace chaoscrypt
