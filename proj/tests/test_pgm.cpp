#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "chaoscrypt/error.hpp"
#include "chaoscrypt/kat.hpp"
#include "chaoscrypt/pgm.hpp"

using namespace chaoscrypt;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) {
  return {s.begin(), s.end()};
}

PixelGrid random_grid(std::uint32_t side, std::mt19937& rng) {
  std::vector<std::uint8_t> data(std::size_t{side} * side);
  std::uniform_int_distribution<int> byte(0, 255);
  for (auto& b : data) {
    b = static_cast<std::uint8_t>(byte(rng));
  }
  return PixelGrid(side, std::move(data));
}

PgmError::Kind kind_of(const std::vector<std::uint8_t>& file) {
  try {
    parse_pgm(file);
  } catch (const PgmError& e) {
    return e.kind();
  }
  FAIL("expected PgmError");
  return PgmError::Kind::BadMagic;  // unreachable
}

}  // namespace

TEST_CASE("encode emits the canonical header exactly") {
  const std::vector<std::uint8_t> file = encode_pgm(PixelGrid::zero(2));
  const std::string header = "P5\n2 2\n255\n";
  REQUIRE(file.size() == header.size() + 4);  // 11 header bytes + 4 raster bytes
  CHECK(std::equal(header.begin(), header.end(), file.begin()));
  CHECK(file[11] == 0);
  CHECK(file[14] == 0);
}

TEST_CASE("parse then encode is byte-identical on canonical files") {
  std::mt19937 rng(20);
  const PixelGrid img = random_grid(16, rng);
  const std::vector<std::uint8_t> file = encode_pgm(img);
  CHECK(encode_pgm(parse_pgm(file)) == file);
}

TEST_CASE("write then read is the identity on random grids") {
  std::mt19937 rng(21);
  const auto path = std::filesystem::temp_directory_path() / "chaoscrypt_pgm_test.pgm";
  std::uniform_int_distribution<std::uint32_t> side(2, 40);
  for (int trial = 0; trial < 100; ++trial) {
    const PixelGrid img = random_grid(side(rng), rng);
    write_pgm(img, path);
    CAPTURE(trial);
    REQUIRE(read_pgm(path) == img);
  }
  std::filesystem::remove(path);
}

TEST_CASE("the reference plain image survives the file format") {
  const PixelGrid plain(kat::kSide, {kat::kPlain.begin(), kat::kPlain.end()});
  const PixelGrid back = parse_pgm(encode_pgm(plain));
  CHECK(back[0] == 23);
  CHECK(back == plain);
}

TEST_CASE("header whitespace variations and comments are accepted") {
  std::vector<std::uint8_t> file = bytes_of("P5 # binary pgm\n#another note\n 2\t2 \n255 ");
  file.insert(file.end(), {9, 8, 7, 6});
  const PixelGrid img = parse_pgm(file);
  CHECK(img.side() == 2);
  CHECK(img[0] == 9);
  CHECK(img[3] == 6);
}

TEST_CASE("each malformed class reports its own kind") {
  std::vector<std::uint8_t> good = encode_pgm(PixelGrid::zero(4));

  SUBCASE("bad magic") {
    std::vector<std::uint8_t> f = good;
    f[1] = '6';
    CHECK(kind_of(f) == PgmError::Kind::BadMagic);
    CHECK(kind_of(bytes_of("")) == PgmError::Kind::BadMagic);
    CHECK(kind_of(bytes_of("JUNK")) == PgmError::Kind::BadMagic);
  }

  SUBCASE("bad maxval") {
    std::vector<std::uint8_t> f = bytes_of("P5\n4 4\n254\n");
    f.resize(f.size() + 16, 0);
    CHECK(kind_of(f) == PgmError::Kind::BadMaxval);
    std::vector<std::uint8_t> f16 = bytes_of("P5\n4 4\n65535\n");
    f16.resize(f16.size() + 32, 0);
    CHECK(kind_of(f16) == PgmError::Kind::BadMaxval);
  }

  SUBCASE("truncated raster") {
    std::vector<std::uint8_t> f = good;
    f.pop_back();
    CHECK(kind_of(f) == PgmError::Kind::TruncatedRaster);
    // header promising 4x4 with only 15 raster bytes
    std::vector<std::uint8_t> f15 = bytes_of("P5\n4 4\n255\n");
    f15.resize(f15.size() + 15, 1);
    CHECK(kind_of(f15) == PgmError::Kind::TruncatedRaster);
  }

  SUBCASE("non-square dimensions") {
    std::vector<std::uint8_t> f = bytes_of("P5\n4 3\n255\n");
    f.resize(f.size() + 12, 0);
    CHECK(kind_of(f) == PgmError::Kind::NotSquare);
  }

  SUBCASE("garbage header fields") {
    CHECK(kind_of(bytes_of("P5\nx 4\n255\n")) == PgmError::Kind::BadHeader);
    std::vector<std::uint8_t> f1 = bytes_of("P5\n1 1\n255\n");
    f1.push_back(0);
    CHECK(kind_of(f1) == PgmError::Kind::BadHeader);
  }

  SUBCASE("the three classes are pairwise distinct") {
    std::vector<std::uint8_t> magic = good;
    magic[0] = 'Q';
    std::vector<std::uint8_t> maxval = bytes_of("P5\n4 4\n100\n");
    maxval.resize(maxval.size() + 16, 0);
    std::vector<std::uint8_t> truncated = good;
    truncated.resize(truncated.size() - 3);

    const auto a = kind_of(magic);
    const auto b = kind_of(maxval);
    const auto c = kind_of(truncated);
    CHECK(a != b);
    CHECK(b != c);
    CHECK(a != c);
  }
}

TEST_CASE("missing files are reported") {
  CHECK_THROWS_WITH_AS(read_pgm("/nonexistent/nowhere.pgm"), doctest::Contains("cannot open"),
                       Error);
}
