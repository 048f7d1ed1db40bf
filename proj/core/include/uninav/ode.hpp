#pragma once

#include <array>
#include <cstddef>

namespace uninav {

// One classical Runge-Kutta step of the autonomous system dx/dt = f(x).
template <std::size_t N, typename Deriv>
std::array<double, N> rk4_step(const std::array<double, N>& x, double dt, Deriv&& f) {
  const std::array<double, N> k1 = f(x);
  std::array<double, N> tmp;
  for (std::size_t i = 0; i < N; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
  const std::array<double, N> k2 = f(tmp);
  for (std::size_t i = 0; i < N; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
  const std::array<double, N> k3 = f(tmp);
  for (std::size_t i = 0; i < N; ++i) tmp[i] = x[i] + dt * k3[i];
  const std::array<double, N> k4 = f(tmp);
  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

}  // namespace uninav
