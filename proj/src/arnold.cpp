#include "chaoscrypt/arnold.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

namespace {

// Entries must already be < modulus, so products fit in 64 bits.
CatMatrix multiply_mod(const CatMatrix& a, const CatMatrix& b, std::uint64_t m) {
  return {
      (a.m1 * b.m1 % m + a.m2 * b.m3 % m) % m,
      (a.m1 * b.m2 % m + a.m2 * b.m4 % m) % m,
      (a.m3 * b.m1 % m + a.m4 * b.m3 % m) % m,
      (a.m3 * b.m2 % m + a.m4 * b.m4 % m) % m,
  };
}

}  // namespace

CatMatrix cat_matrix(std::uint64_t p, std::uint64_t q) {
  if (p < 1 || q < 1) {
    throw std::invalid_argument("cat-map parameters p and q must be positive integers");
  }
  if (p > UINT32_MAX || q > UINT32_MAX) {  // keeps pq + 1 inside 64 bits
    throw std::invalid_argument("cat-map parameters p and q must fit in 32 bits");
  }
  return {1, p, q, p * q + 1};
}

CatMatrix iterate_matrix(const CatMatrix& a, std::uint64_t n, std::uint32_t modulus) {
  if (modulus < 2) {
    throw std::invalid_argument("matrix modulus must be at least 2");
  }
  const std::uint64_t m = modulus;
  CatMatrix base{a.m1 % m, a.m2 % m, a.m3 % m, a.m4 % m};
  CatMatrix result{1 % m, 0, 0, 1 % m};
  while (n > 0) {
    if (n & 1) {
      result = multiply_mod(result, base, m);
    }
    base = multiply_mod(base, base, m);
    n >>= 1;
  }
  return result;
}

PermutationMap::PermutationMap(std::uint32_t side, std::vector<std::uint32_t> source)
    : side_(side), source_(std::move(source)) {
  if (side_ < kMinSide || side_ > kMaxGridSide) {
    throw std::invalid_argument("permutation side must be in [2, 65535]");
  }
  const std::size_t n = std::size_t{side_} * side_;
  if (source_.size() != n) {
    throw std::invalid_argument("permutation table holds " + std::to_string(source_.size()) +
                                " entries, side " + std::to_string(side_) + " needs " +
                                std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (std::size_t d = 0; d < n; ++d) {
    const std::uint32_t s = source_[d];
    if (s >= n) {
      throw std::invalid_argument("permutation entry " + std::to_string(s) +
                                  " out of range at position " + std::to_string(d));
    }
    if (seen[s]) {
      throw std::invalid_argument("permutation repeats source index " + std::to_string(s));
    }
    seen[s] = true;
  }
}

PermutationMap PermutationMap::identity(std::uint32_t side) {
  std::vector<std::uint32_t> source(std::size_t{side} * side);
  for (std::size_t i = 0; i < source.size(); ++i) {
    source[i] = static_cast<std::uint32_t>(i);
  }
  return PermutationMap(side, std::move(source));
}

PermutationMap build_permutation(const CatMatrix& m, std::uint32_t side) {
  if (side < kMinSide || side > kMaxGridSide) {
    throw std::invalid_argument("permutation side must be in [2, 65535]");
  }
  const CatMatrix r = iterate_matrix(m, 1, side);  // reduce entries mod side
  const std::uint64_t n = side;
  const std::size_t total = std::size_t{side} * side;

  std::vector<std::uint32_t> source(total, 0);
  std::vector<bool> filled(total, false);
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y) {
      const std::uint64_t xp = (r.m1 * x + r.m2 * y) % n;
      const std::uint64_t yp = (r.m3 * x + r.m4 * y) % n;
      const std::size_t dest = xp * n + yp;
      if (filled[dest]) {
        throw PermutationError("matrix is not bijective mod " + std::to_string(side) +
                               ": two pixels land at index " + std::to_string(dest) +
                               " (determinant is not 1)");
      }
      filled[dest] = true;
      source[dest] = static_cast<std::uint32_t>(x * n + y);
    }
  }
  return PermutationMap(side, std::move(source));
}

namespace {

void check_sizes(const PixelGrid& img, const PermutationMap& perm) {
  if (img.pixel_count() != perm.size()) {
    throw std::invalid_argument("permutation covers " + std::to_string(perm.size()) +
                                " pixels but image has " +
                                std::to_string(img.pixel_count()));
  }
}

}  // namespace

PixelGrid shuffle(const PixelGrid& img, const PermutationMap& perm) {
  check_sizes(img, perm);
  std::vector<std::uint8_t> out(img.pixel_count());
  for (std::size_t d = 0; d < out.size(); ++d) {
    out[d] = img[perm.source_of(d)];
  }
  return PixelGrid(img.side(), std::move(out));
}

PixelGrid unshuffle(const PixelGrid& img, const PermutationMap& perm) {
  check_sizes(img, perm);
  std::vector<std::uint8_t> out(img.pixel_count());
  for (std::size_t d = 0; d < out.size(); ++d) {
    out[perm.source_of(d)] = img[d];
  }
  return PixelGrid(img.side(), std::move(out));
}

}  // namespace chaoscrypt
