#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <map>
#include <random>
#include <set>

#include "chaoscrypt/chen.hpp"
#include "chaoscrypt/error.hpp"

using namespace chaoscrypt;

namespace {

const ChenParams kParams{.c = 28.0};

bool states_equal(const std::vector<ChenState>& a, const std::vector<ChenState>& b) {
  if (a.size() != b.size()) {
    return false;
  }
  return std::memcmp(a.data(), b.data(), a.size() * sizeof(ChenState)) == 0;
}

}  // namespace

TEST_CASE("derivative vanishes at the origin") {
  const ChenState d = chen_derivative({0, 0, 0}, kParams);
  CHECK(d.x == 0.0);
  CHECK(d.y == 0.0);
  CHECK(d.z == 0.0);
}

TEST_CASE("derivative by direct substitution at (1,1,0)") {
  const ChenState d = chen_derivative({1, 1, 0}, kParams);
  CHECK(d.x == 0.0);
  CHECK(d.y == 21.0);  // (28-35)*1 - 0 + 28*1
  CHECK(d.z == 1.0);
}

TEST_CASE("derivative vanishes at the off-origin equilibria") {
  // Solving y = x, z = 2c - a, x^2 = bz by hand gives x = y = +-sqrt(63),
  // z = 21 for c = 28.
  const double r = std::sqrt(63.0);
  for (const double sign : {1.0, -1.0}) {
    const ChenState d = chen_derivative({sign * r, sign * r, 21.0}, kParams);
    CHECK(std::abs(d.x) < 1e-9);
    CHECK(std::abs(d.y) < 1e-9);
    CHECK(std::abs(d.z) < 1e-9);
  }
}

TEST_CASE("the origin is a fixed point of the integrator") {
  const auto orbit = integrate_chen({0, 0, 0}, kParams, 100, 0.001);
  for (const ChenState& s : orbit) {
    CHECK(s.x == 0.0);
    CHECK(s.y == 0.0);
    CHECK(s.z == 0.0);
  }
}

TEST_CASE("integration is deterministic") {
  const auto a = integrate_chen({1, 1, 1}, kParams, 10, 0.001);
  const auto b = integrate_chen({1, 1, 1}, kParams, 10, 0.001);
  CHECK(states_equal(a, b));
}

TEST_CASE("step halving keeps the trajectory within 1e-6 over 0.1 time units") {
  const auto coarse = integrate_chen({1, 1, 1}, kParams, 100, 0.001);
  const auto fine = integrate_chen({1, 1, 1}, kParams, 200, 0.0005);
  const ChenState& a = coarse.back();
  const ChenState& b = fine.back();
  CHECK(std::abs(a.x - b.x) < 1e-6);
  CHECK(std::abs(a.y - b.y) < 1e-6);
  CHECK(std::abs(a.z - b.z) < 1e-6);
}

TEST_CASE("divergence is reported with the step index") {
  try {
    integrate_chen({1e160, 1e160, 1e160}, kParams, 10, 0.001);
    FAIL("expected IntegrationError");
  } catch (const IntegrationError& e) {
    CHECK(e.step() == 0);
    CHECK(std::string(e.what()).find("step 0") != std::string::npos);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(validate_params(ChenParams{.a = 34.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_params(ChenParams{.b = 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_params(ChenParams{.c = 19.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_params(ChenParams{.c = 28.5}), std::invalid_argument);
  CHECK_NOTHROW(validate_params(ChenParams{.c = 20.0}));
  CHECK_NOTHROW(validate_params(ChenParams{.c = 28.4}));
  CHECK_THROWS_AS(integrate_chen({1, 1, 1}, kParams, 10, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(integrate_chen({1, 1, 1}, kParams, 0, 0.001), std::invalid_argument);
}

namespace {

const SecretKey kKey{.p = 1, .q = 1, .n = 1, .x0 = 1.0, .y0 = 1.0, .z0 = 1.0, .c = 28.0};

}  // namespace

TEST_CASE("a length-3 keystream is the quantized first post-transient state") {
  const Keystream ks = derive_keystream(kKey, 3);
  REQUIRE(ks.size() == 3);

  const auto orbit = integrate_chen({kKey.x0, kKey.y0, kKey.z0}, ChenParams{.c = kKey.c}, 1,
                                    kKeystreamStep, kKeystreamTransientSteps);
  CHECK(ks[0] == quantize_component(orbit[0].x));
  CHECK(ks[1] == quantize_component(orbit[0].y));
  CHECK(ks[2] == quantize_component(orbit[0].z));
}

TEST_CASE("a length-16 keystream consumes ceil(16/3) = 6 states") {
  const Keystream ks = derive_keystream(kKey, 16);
  REQUIRE(ks.size() == 16);

  const auto orbit = integrate_chen({kKey.x0, kKey.y0, kKey.z0}, ChenParams{.c = kKey.c}, 6,
                                    kKeystreamStep, kKeystreamTransientSteps);
  for (std::size_t i = 0; i < 16; ++i) {
    const ChenState& s = orbit[i / 3];
    const double component = (i % 3 == 0) ? s.x : (i % 3 == 1) ? s.y : s.z;
    CHECK(ks[i] == quantize_component(component));
  }
}

TEST_CASE("keystream derivation is deterministic") {
  CHECK(derive_keystream(kKey, 16) == derive_keystream(kKey, 16));
}

TEST_CASE("shorter keystreams are prefixes of longer ones") {
  std::mt19937 rng(0x5eed);
  const Keystream longest = derive_keystream(kKey, 256);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 255)(rng);
    const Keystream shorter = derive_keystream(kKey, m);
    REQUIRE(shorter.size() == m);
    CHECK(std::equal(shorter.begin(), shorter.end(), longest.begin()));
  }
}

TEST_CASE("every byte value shows up in a long chaotic keystream") {
  const Keystream ks = derive_keystream(kKey, 10000);
  std::set<std::uint8_t> seen(ks.begin(), ks.end());
  CHECK(seen.size() == 256);
}

TEST_CASE("keystream rejects bad keys and lengths") {
  CHECK_THROWS_AS(derive_keystream(kKey, 0), std::invalid_argument);
  CHECK_THROWS_AS(derive_keystream(SecretKey{.p = 0}, 16), std::invalid_argument);
  CHECK_THROWS_AS(derive_keystream(SecretKey{.c = 50.0}, 16), std::invalid_argument);
}

TEST_CASE("quantizer folds magnitudes into bytes") {
  CHECK(quantize_component(0.0) == 0);
  // floor(1.5 * 1e14) = 150000000000000, which 256 divides exactly
  CHECK(quantize_component(1.5) == 0);
  CHECK(quantize_component(-1.5) == quantize_component(1.5));
  // floor(2.56e-14 * 1e14) = 2, comfortably away from a floor boundary
  CHECK(quantize_component(2.56e-14) == 2);
}
