#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace chaoscrypt {

// Full secret key of the cipher: cat-map parameters (p, q, n) plus the
// Chen initial point (x0, y0, z0) and system parameter c.
struct SecretKey {
  std::uint32_t p = 1;
  std::uint32_t q = 1;
  std::uint64_t n = 1;
  double x0 = 0.0;
  double y0 = 0.0;
  double z0 = 0.0;
  double c = 28.0;

  friend bool operator==(const SecretKey&, const SecretKey&) = default;
};

// Throws std::invalid_argument unless p, q >= 1, n >= 1 and c in [20, 28.4].
void validate_key(const SecretKey& key);

// Key file: one `name=value` per line, names exactly p, q, n, x0, y0, z0, c
// (integers for p, q, n; decimal reals for the rest). Blank lines are
// ignored and `#` starts a comment line. Every name must appear exactly
// once. Throws KeyFileError.
SecretKey parse_key_text(std::string_view text);
SecretKey load_key_file(const std::filesystem::path& path);

// Canonical text form; parse_key_text(format_key_text(k)) == k exactly.
std::string format_key_text(const SecretKey& key);

}  // namespace chaoscrypt
