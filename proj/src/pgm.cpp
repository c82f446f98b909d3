#include "chaoscrypt/pgm.hpp"

#include <fstream>
#include <string>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

namespace {

bool is_pnm_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Cursor over the header bytes. Comments ('#' to end of line) count as
// whitespace, as the NetPBM tools treat them.
struct Cursor {
  std::span<const std::uint8_t> bytes;
  std::size_t pos = 0;

  bool done() const { return pos >= bytes.size(); }

  void skip_space(const char* before) {
    bool skipped = false;
    while (!done()) {
      if (is_pnm_space(bytes[pos])) {
        ++pos;
        skipped = true;
      } else if (bytes[pos] == '#') {
        while (!done() && bytes[pos] != '\n') {
          ++pos;
        }
        skipped = true;
      } else {
        break;
      }
    }
    if (!skipped) {
      throw PgmError(PgmError::Kind::BadHeader,
                     std::string("PGM header: expected whitespace before ") + before);
    }
  }

  std::uint64_t read_number(const char* what) {
    if (done() || bytes[pos] < '0' || bytes[pos] > '9') {
      throw PgmError(PgmError::Kind::BadHeader,
                     std::string("PGM header: expected decimal ") + what);
    }
    std::uint64_t value = 0;
    while (!done() && bytes[pos] >= '0' && bytes[pos] <= '9') {
      value = value * 10 + (bytes[pos] - '0');
      if (value > 1'000'000'000ULL) {
        throw PgmError(PgmError::Kind::BadHeader,
                       std::string("PGM header: ") + what + " is absurdly large");
      }
      ++pos;
    }
    return value;
  }
};

}  // namespace

PixelGrid parse_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw PgmError(PgmError::Kind::BadMagic, "not a binary PGM: magic is not 'P5'");
  }
  Cursor cur{bytes, 2};

  cur.skip_space("width");
  const std::uint64_t width = cur.read_number("width");
  cur.skip_space("height");
  const std::uint64_t height = cur.read_number("height");
  cur.skip_space("maxval");
  const std::uint64_t maxval = cur.read_number("maxval");

  if (width != height) {
    throw PgmError(PgmError::Kind::NotSquare,
                   "image must be square, got " + std::to_string(width) + "x" +
                       std::to_string(height));
  }
  if (width < kMinSide || width > kMaxGridSide) {
    throw PgmError(PgmError::Kind::BadHeader,
                   "image side must be in [2, 65535], got " + std::to_string(width));
  }
  if (maxval != 255) {
    throw PgmError(PgmError::Kind::BadMaxval,
                   "maxval must be 255, got " + std::to_string(maxval));
  }

  // Exactly one whitespace byte separates the header from the raster.
  if (cur.done() || !is_pnm_space(bytes[cur.pos])) {
    throw PgmError(PgmError::Kind::BadHeader, "PGM header: missing raster separator");
  }
  ++cur.pos;

  const std::size_t raster = width * height;
  if (bytes.size() - cur.pos < raster) {
    throw PgmError(PgmError::Kind::TruncatedRaster,
                   "raster truncated: header promises " + std::to_string(raster) +
                       " bytes, file holds " + std::to_string(bytes.size() - cur.pos));
  }
  std::vector<std::uint8_t> data(bytes.begin() + cur.pos, bytes.begin() + cur.pos + raster);
  return PixelGrid(static_cast<std::uint32_t>(width), std::move(data));
}

std::vector<std::uint8_t> encode_pgm(const PixelGrid& img) {
  const std::string header =
      "P5\n" + std::to_string(img.side()) + " " + std::to_string(img.side()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.bytes().begin(), img.bytes().end());
  return out;
}

PixelGrid read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open image file: " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return parse_pgm(bytes);
}

void write_pgm(const PixelGrid& img, const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = encode_pgm(img);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot create image file: " + path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error("short write to image file: " + path.string());
  }
}

}  // namespace chaoscrypt
