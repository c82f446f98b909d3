#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chaoscrypt/key.hpp"
#include "chaoscrypt/types.hpp"

namespace chaoscrypt {

// Chen system parameters. a and b are fixed by the scheme; only c is key
// material.
struct ChenParams {
  double a = 35.0;
  double b = 3.0;
  double c = 28.0;
};

// Throws std::invalid_argument unless a == 35, b == 3 and c in [20, 28.4].
void validate_params(const ChenParams& params);

struct ChenState {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const ChenState&, const ChenState&) = default;
};

// Right-hand side of the Chen system:
//   x' = a(y - x)
//   y' = (c - a)x - xz + cy
//   z' = xy - bz
ChenState chen_derivative(const ChenState& s, const ChenParams& params) noexcept;

// One classical fourth-order Runge-Kutta step of width dt.
ChenState rk4_step(const ChenState& s, const ChenParams& params, double dt) noexcept;

// Fixed-step RK4 trajectory from s0: advances discard_steps without
// recording, then records the next `steps` states (one per step).
// Deterministic for identical inputs. Throws IntegrationError naming the
// step index if the state leaves the finite domain.
std::vector<ChenState> integrate_chen(const ChenState& s0, const ChenParams& params,
                                      std::size_t steps, double dt,
                                      std::size_t discard_steps = 0);

// floor(|v| * 1e14) mod 256 -- digit-extraction quantizer used for
// keystream bytes.
std::uint8_t quantize_component(double v) noexcept;

inline constexpr double kKeystreamStep = 0.001;
inline constexpr std::size_t kKeystreamTransientSteps = 3000;

// Byte keystream of exactly `length` bytes: integrate Chen from
// (x0, y0, z0) with parameter c, drop the transient so samples come from
// the attractor, then emit quantized (x, y, z) triples in that order.
// ceil(length / 3) post-transient states are consumed; the byte stream is
// truncated to `length`.
Keystream derive_keystream(const SecretKey& key, std::size_t length, double dt,
                           std::size_t transient_steps);

inline Keystream derive_keystream(const SecretKey& key, std::size_t length) {
  return derive_keystream(key, length, kKeystreamStep, kKeystreamTransientSteps);
}

}  // namespace chaoscrypt
