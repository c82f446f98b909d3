#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chaoscrypt/pixel_grid.hpp"

namespace chaoscrypt {

// 2x2 integer matrix [[m1, m2], [m3, m4]] acting on (row, column) pixel
// coordinates.
struct CatMatrix {
  std::uint64_t m1 = 1;
  std::uint64_t m2 = 0;
  std::uint64_t m3 = 0;
  std::uint64_t m4 = 1;

  friend bool operator==(const CatMatrix&, const CatMatrix&) = default;
};

// [[1, p], [q, pq + 1]] for p, q >= 1; determinant is exactly 1. Entries
// are not reduced here; reduction happens in iterate_matrix.
CatMatrix cat_matrix(std::uint64_t p, std::uint64_t q);

// A^n mod modulus by square-and-multiply, entries reduced at every
// product; n == 0 yields the identity. modulus must be >= 2.
CatMatrix iterate_matrix(const CatMatrix& a, std::uint64_t n, std::uint32_t modulus);

// Bijection on {0, ..., N^2 - 1} stored source-of-destination:
// source()[d] is the plain-image linear index whose pixel lands at
// shuffled linear index d.
class PermutationMap {
 public:
  // Throws std::invalid_argument if source is not a bijection on the grid.
  PermutationMap(std::uint32_t side, std::vector<std::uint32_t> source);

  static PermutationMap identity(std::uint32_t side);

  std::uint32_t side() const noexcept { return side_; }
  std::size_t size() const noexcept { return source_.size(); }
  std::uint32_t source_of(std::size_t dest) const { return source_[dest]; }
  std::span<const std::uint32_t> source() const noexcept { return source_; }

  friend bool operator==(const PermutationMap&, const PermutationMap&) = default;

 private:
  std::uint32_t side_;
  std::vector<std::uint32_t> source_;
};

// Evaluates (x', y') = M (x, y)^T mod N for every pixel (x = row,
// y = column) and records source[x'N + y'] = xN + y. A collision while
// filling `source` means det M != 1 (mod N) and raises PermutationError.
PermutationMap build_permutation(const CatMatrix& m, std::uint32_t side);

// out[d] = img[source[d]].
PixelGrid shuffle(const PixelGrid& img, const PermutationMap& perm);

// Exact inverse of shuffle: out[source[d]] = img[d].
PixelGrid unshuffle(const PixelGrid& img, const PermutationMap& perm);

}  // namespace chaoscrypt
