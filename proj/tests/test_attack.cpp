#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "chaoscrypt/attack.hpp"
#include "chaoscrypt/cipher.hpp"
#include "chaoscrypt/error.hpp"
#include "chaoscrypt/kat.hpp"
#include "chaoscrypt/key.hpp"

using namespace chaoscrypt;

namespace {

PixelGrid random_grid(std::uint32_t side, std::mt19937& rng) {
  std::vector<std::uint8_t> data(std::size_t{side} * side);
  std::uniform_int_distribution<int> byte(0, 255);
  for (auto& b : data) {
    b = static_cast<std::uint8_t>(byte(rng));
  }
  return PixelGrid(side, std::move(data));
}

SecretKey random_key(std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> pq(1, 5000);
  std::uniform_int_distribution<std::uint64_t> n(1, 100000);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::uniform_real_distribution<double> cval(20.0, 28.4);
  return SecretKey{pq(rng), pq(rng), n(rng), coord(rng), coord(rng), coord(rng), cval(rng)};
}

PartsOracle kat_oracle() {
  return PartsOracle(PermutationMap(kat::kSide, {kat::kPermutationSource.begin(),
                                                 kat::kPermutationSource.end()}),
                     Keystream{kat::kKeystream.begin(), kat::kKeystream.end()});
}

// Answers like a fixed-key oracle for the first query, then silently
// switches keystreams: the inconsistency the attack must detect.
class FlakyOracle final : public Oracle {
 public:
  explicit FlakyOracle(std::uint32_t side)
      : perm_(PermutationMap::identity(side)),
        first_(std::size_t{side} * side, 0x11),
        second_(std::size_t{side} * side, 0x22) {}

 private:
  PixelGrid do_encrypt(const PixelGrid& img) override {
    const Keystream& ks = used_once_ ? second_ : first_;
    used_once_ = true;
    return encrypt_with_parts(img, perm_, ks);
  }

  PermutationMap perm_;
  Keystream first_;
  Keystream second_;
  bool used_once_ = false;
};

}  // namespace

TEST_CASE("the zero probe recovers the reference keystream") {
  PartsOracle oracle = kat_oracle();
  const Keystream ks = recover_keystream(oracle, kat::kSide);
  CHECK(ks == Keystream{kat::kKeystream.begin(), kat::kKeystream.end()});
  CHECK(ks[0] == 186);
  CHECK(ks[1] == 24);
  CHECK(ks[2] == 39);
  CHECK(ks[3] == 72);
}

TEST_CASE("a zero keystream is recovered as all zeros") {
  PartsOracle oracle(PermutationMap::identity(4), Keystream(16, 0));
  CHECK(recover_keystream(oracle, 4) == Keystream(16, 0));
}

TEST_CASE("the recovered keystream matches the generator for random keys") {
  std::mt19937 rng(40);
  for (int trial = 0; trial < 100; ++trial) {
    const SecretKey key = random_key(rng);
    KeyOracle oracle(key);
    CAPTURE(trial);
    REQUIRE(recover_keystream(oracle, 8) == derive_keystream(key, 64));
  }
}

TEST_CASE("probe counts grow with the index width") {
  CHECK(probe_count(2) == 1);
  CHECK(probe_count(4) == 1);
  CHECK(probe_count(16) == 1);   // 256 pixels: exactly one digit
  CHECK(probe_count(17) == 2);   // 289 pixels: two digits
  CHECK(probe_count(100) == 2);
  CHECK(probe_count(256) == 2);
  CHECK(probe_count(257) == 3);
  CHECK(probe_count(4096) == 3);
}

TEST_CASE("probes for small sides enumerate the indices directly") {
  const ProbeSet set4 = build_probes(4);
  REQUIRE(set4.probes.size() == 1);
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(set4.probes[0][i] == i);
  }

  const ProbeSet set16 = build_probes(16);
  REQUIRE(set16.probes.size() == 1);
  CHECK(set16.probes[0][0] == 0);
  CHECK(set16.probes[0][255] == 255);
}

TEST_CASE("the 100x100 probes spell indices in base 256") {
  const ProbeSet set = build_probes(100);
  REQUIRE(set.probes.size() == 2);
  // 9999 = 39 * 256 + 15
  CHECK(set.probes[0][9999] == 15);
  CHECK(set.probes[1][9999] == 39);

  for (std::size_t i = 0; i < 10000; ++i) {
    const std::size_t rebuilt = set.probes[0][i] + 256 * std::size_t{set.probes[1][i]};
    REQUIRE(rebuilt == i);
  }
}

TEST_CASE("probe tuples are injective across the grid") {
  for (const std::uint32_t side : {2u, 16u, 17u, 100u}) {
    const ProbeSet set = build_probes(side);
    const std::size_t pixels = std::size_t{side} * side;
    std::vector<std::size_t> rebuilt(pixels, 0);
    std::size_t weight = 1;
    for (const PixelGrid& probe : set.probes) {
      for (std::size_t i = 0; i < pixels; ++i) {
        rebuilt[i] += weight * probe[i];
      }
      weight *= 256;
    }
    for (std::size_t i = 0; i < pixels; ++i) {
      REQUIRE(rebuilt[i] == i);
    }
  }
}

TEST_CASE("the index probe reads the reference shuffle table straight off") {
  PartsOracle oracle = kat_oracle();
  const Keystream ks = recover_keystream(oracle, kat::kSide);
  const PermutationMap perm = recover_permutation(oracle, ks, kat::kSide);
  const std::vector<std::uint32_t> expected{kat::kPermutationSource.begin(),
                                            kat::kPermutationSource.end()};
  CHECK(std::equal(perm.source().begin(), perm.source().end(), expected.begin()));
}

TEST_CASE("an identity oracle yields the identity permutation") {
  PartsOracle oracle(PermutationMap::identity(8), Keystream(64, 0x5a));
  const Keystream ks = recover_keystream(oracle, 8);
  CHECK(recover_permutation(oracle, ks, 8) == PermutationMap::identity(8));
}

TEST_CASE("recovered permutations equal the cipher's own cat-map tables") {
  std::mt19937 rng(41);
  for (const std::uint32_t side : {4u, 8u, 32u}) {
    for (int trial = 0; trial < 34; ++trial) {
      const SecretKey key = random_key(rng);
      KeyOracle oracle(key);
      const Keystream ks = recover_keystream(oracle, side);
      CAPTURE(side);
      CAPTURE(trial);
      REQUIRE(recover_permutation(oracle, ks, side) == permutation_for_key(key, side));
    }
  }
}

TEST_CASE("a keystream change between queries is caught, not returned") {
  FlakyOracle oracle(4);
  const Keystream ks = recover_keystream(oracle, 4);
  CHECK_THROWS_AS(recover_permutation(oracle, ks, 4), OracleInconsistency);
}

TEST_CASE("recover_plaintext undoes the reference scenario") {
  const PixelGrid cipher(kat::kSide, {kat::kCipher.begin(), kat::kCipher.end()});
  const Keystream ks{kat::kKeystream.begin(), kat::kKeystream.end()};
  const PermutationMap perm(kat::kSide, {kat::kPermutationSource.begin(),
                                         kat::kPermutationSource.end()});
  const PixelGrid plain = recover_plaintext(cipher, ks, perm);
  CHECK(plain == PixelGrid(kat::kSide, {kat::kPlain.begin(), kat::kPlain.end()}));
  CHECK(plain[0] == 23);
  CHECK(plain[1] == 45);
  CHECK(plain[2] == 64);
  CHECK(plain[3] == 32);
}

TEST_CASE("a cipher equal to the keystream is an all-zero plaintext") {
  const Keystream ks{kat::kKeystream.begin(), kat::kKeystream.end()};
  const PermutationMap perm(kat::kSide, {kat::kPermutationSource.begin(),
                                         kat::kPermutationSource.end()});
  const PixelGrid cipher(kat::kSide, {kat::kKeystream.begin(), kat::kKeystream.end()});
  CHECK(recover_plaintext(cipher, ks, perm) == PixelGrid::zero(kat::kSide));
}

TEST_CASE("full_attack breaks the reference scenario in two queries") {
  PartsOracle oracle = kat_oracle();
  const PixelGrid cipher(kat::kSide, {kat::kCipher.begin(), kat::kCipher.end()});
  const AttackTranscript t = full_attack(oracle, cipher);

  CHECK(t.oracle_queries == 2);
  CHECK(t.recovered_plaintext == PixelGrid(kat::kSide, {kat::kPlain.begin(), kat::kPlain.end()}));
  CHECK(t.recovered_keystream == Keystream{kat::kKeystream.begin(), kat::kKeystream.end()});
  CHECK(std::equal(t.recovered_permutation.source().begin(),
                   t.recovered_permutation.source().end(), kat::kPermutationSource.begin()));
}

TEST_CASE("full_attack recovers plaintext end to end over the real cipher") {
  std::mt19937 rng(42);
  for (const std::uint32_t side : {2u, 8u, 16u, 32u}) {
    const SecretKey key = random_key(rng);
    const PixelGrid plain = random_grid(side, rng);
    KeyOracle oracle(key);
    const AttackTranscript t = full_attack(oracle, encrypt(plain, key));
    CAPTURE(side);
    REQUIRE(t.recovered_plaintext == plain);
    CHECK(t.oracle_queries == 1 + probe_count(side));
    CHECK(t.recovered_keystream == derive_keystream(key, std::size_t{side} * side));
    CHECK(t.recovered_permutation == permutation_for_key(key, side));
  }
}

TEST_CASE("the 100x100 break needs exactly three queries") {
  std::mt19937 rng(43);
  const SecretKey key = random_key(rng);
  const PixelGrid plain = random_grid(100, rng);
  KeyOracle oracle(key);
  const AttackTranscript t = full_attack(oracle, encrypt(plain, key));
  CHECK(t.oracle_queries == 3);
  CHECK(t.recovered_plaintext == plain);
}

TEST_CASE("transcript queries count only this attack's traffic") {
  PartsOracle oracle = kat_oracle();
  oracle.encrypt_image(PixelGrid::zero(kat::kSide));  // unrelated earlier use
  const PixelGrid cipher(kat::kSide, {kat::kCipher.begin(), kat::kCipher.end()});
  const AttackTranscript t = full_attack(oracle, cipher);
  CHECK(t.oracle_queries == 2);
  CHECK(oracle.query_count() == 3);
}
