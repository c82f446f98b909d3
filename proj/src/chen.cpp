#include "chaoscrypt/chen.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "chaoscrypt/error.hpp"

namespace chaoscrypt {

void validate_params(const ChenParams& params) {
  if (params.a != 35.0 || params.b != 3.0) {
    throw std::invalid_argument("Chen parameters a and b are fixed at 35 and 3");
  }
  if (!(params.c >= 20.0 && params.c <= 28.4)) {
    throw std::invalid_argument("Chen parameter c must lie in [20, 28.4]");
  }
}

ChenState chen_derivative(const ChenState& s, const ChenParams& p) noexcept {
  return {
      p.a * (s.y - s.x),
      (p.c - p.a) * s.x - s.x * s.z + p.c * s.y,
      s.x * s.y - p.b * s.z,
  };
}

ChenState rk4_step(const ChenState& s, const ChenParams& p, double dt) noexcept {
  const ChenState k1 = chen_derivative(s, p);
  const ChenState k2 = chen_derivative(
      {s.x + 0.5 * dt * k1.x, s.y + 0.5 * dt * k1.y, s.z + 0.5 * dt * k1.z}, p);
  const ChenState k3 = chen_derivative(
      {s.x + 0.5 * dt * k2.x, s.y + 0.5 * dt * k2.y, s.z + 0.5 * dt * k2.z}, p);
  const ChenState k4 =
      chen_derivative({s.x + dt * k3.x, s.y + dt * k3.y, s.z + dt * k3.z}, p);
  const double w = dt / 6.0;
  return {
      s.x + w * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
      s.y + w * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
      s.z + w * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z),
  };
}

namespace {

bool finite(const ChenState& s) noexcept {
  return std::isfinite(s.x) && std::isfinite(s.y) && std::isfinite(s.z);
}

}  // namespace

std::vector<ChenState> integrate_chen(const ChenState& s0, const ChenParams& params,
                                      std::size_t steps, double dt,
                                      std::size_t discard_steps) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("integration step size must be positive");
  }
  if (steps < 1) {
    throw std::invalid_argument("integration needs at least one step");
  }

  std::vector<ChenState> trajectory;
  trajectory.reserve(steps);

  ChenState s = s0;
  const std::size_t total = discard_steps + steps;
  for (std::size_t i = 0; i < total; ++i) {
    s = rk4_step(s, params, dt);
    if (!finite(s)) {
      throw IntegrationError(i, "Chen integration diverged at step " + std::to_string(i));
    }
    if (i >= discard_steps) {
      trajectory.push_back(s);
    }
  }
  return trajectory;
}

std::uint8_t quantize_component(double v) noexcept {
  // All in double so arbitrarily large finite values stay well-defined:
  // floor(|v| * 1e14) is an exact integer-valued double and fmod by 256 is
  // exact on it.
  const double scaled = std::floor(std::fabs(v) * 1e14);
  return static_cast<std::uint8_t>(std::fmod(scaled, 256.0));
}

Keystream derive_keystream(const SecretKey& key, std::size_t length, double dt,
                           std::size_t transient_steps) {
  if (length < 1) {
    throw std::invalid_argument("keystream length must be at least 1");
  }
  validate_key(key);

  const ChenParams params{.c = key.c};
  const std::size_t states_needed = (length + 2) / 3;
  const std::vector<ChenState> orbit = integrate_chen(
      {key.x0, key.y0, key.z0}, params, states_needed, dt, transient_steps);

  Keystream ks;
  ks.reserve(states_needed * 3);
  for (const ChenState& s : orbit) {
    ks.push_back(quantize_component(s.x));
    ks.push_back(quantize_component(s.y));
    ks.push_back(quantize_component(s.z));
  }
  ks.resize(length);
  return ks;
}

}  // namespace chaoscrypt
