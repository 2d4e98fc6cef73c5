/*
Copyright 2026 The sinrsched Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cmath>
#include <string>

#include "sinrsched/error.hpp"

namespace sinrsched {

// Distances below this (meters) are treated as colliding nodes.
inline constexpr double kMinDistance = 1e-6;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

// Physical-layer constants shared by every sender and receiver.
// beta is kept as a linear ratio; decibels only appear at I/O boundaries.
class RadioParams {
 public:
  RadioParams(double power_w, double noise_w, double alpha, double beta_linear)
      : power_w_(power_w), noise_w_(noise_w), alpha_(alpha), beta_linear_(beta_linear) {
    if (!(power_w > 0.0) || !std::isfinite(power_w))
      throw InvalidArgument("power_w must be positive, got " + std::to_string(power_w));
    if (!(noise_w > 0.0) || !std::isfinite(noise_w))
      throw InvalidArgument("noise_w must be positive, got " + std::to_string(noise_w));
    if (!(alpha > 2.0) || !std::isfinite(alpha))
      throw InvalidArgument("alpha must exceed 2, got " + std::to_string(alpha));
    if (!(beta_linear > 1.0) || !std::isfinite(beta_linear))
      throw InvalidArgument("beta must exceed 1 (linear), got " + std::to_string(beta_linear));
  }

  static RadioParams from_db(double power_w, double noise_w, double alpha, double beta_db) {
    return RadioParams(power_w, noise_w, alpha, db_to_linear(beta_db));
  }

  // 300 mW, 8e-14 W noise (20 MHz at room temperature), alpha = 4, beta = 25 dB.
  static RadioParams defaults() { return from_db(0.3, 8e-14, 4.0, 25.0); }

  double power_w() const noexcept { return power_w_; }
  double noise_w() const noexcept { return noise_w_; }
  double alpha() const noexcept { return alpha_; }
  double beta_linear() const noexcept { return beta_linear_; }

  friend bool operator==(const RadioParams&, const RadioParams&) = default;

 private:
  double power_w_;
  double noise_w_;
  double alpha_;
  double beta_linear_;
};

// Distance at which a lone link's SINR equals beta: (P / (beta N))^(1/alpha).
inline double max_range(const RadioParams& p) {
  return std::pow(p.power_w() / (p.beta_linear() * p.noise_w()), 1.0 / p.alpha());
}

// Power received at distance d. Every SINR path goes through this so cached
// and direct evaluations agree bit for bit.
inline double received_power(const RadioParams& p, double d) {
  return p.power_w() / std::pow(d, p.alpha());
}

}  // namespace sinrsched
