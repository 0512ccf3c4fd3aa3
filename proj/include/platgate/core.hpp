// Copyright 2026 The platgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PLATGATE_CORE_HPP
#define PLATGATE_CORE_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "platgate/errors.hpp"

namespace platgate {

using complex = std::complex<double>;

inline constexpr double kDegeneracyThreshold = 1e-9;

/// Chern-Simons data (k, N) and the root of unity q = exp(2 pi i / (k + N)),
/// A = q^N. Only constructible through theory_params(), which validates it.
class TheoryParams {
   public:
    int level() const { return level_; }
    int rank() const { return rank_; }
    double theta() const { return theta_; }
    complex q() const { return q_; }
    complex a() const { return a_; }

    bool operator==(const TheoryParams&) const = default;

   private:
    friend TheoryParams theory_params(int k, int n, double threshold);
    TheoryParams(int k, int n)
        : level_(k),
          rank_(n),
          theta_(2.0 * std::numbers::pi / (k + n)),
          q_(std::polar(1.0, theta_)),
          a_(std::polar(1.0, n * theta_)) {}

    int level_;
    int rank_;
    double theta_;
    complex q_;
    complex a_;
};

/// Quantum integer [n]_q = sin(n theta) / sin(theta).
inline double qint(int n, const TheoryParams& params) {
    if (n < 0) {
        throw InvalidInput("quantum integer index must be nonnegative, got " + std::to_string(n));
    }
    if (n == 0) return 0.0;
    if (n == 1) return 1.0;
    return std::sin(n * params.theta()) / std::sin(params.theta());
}

/// Builds and validates theory parameters. Every quantum integer used as a
/// denominator ([2], [3], [4]) and A - 1/A must exceed `threshold` in modulus.
inline TheoryParams theory_params(int k, int n, double threshold = kDegeneracyThreshold) {
    if (k < 1) throw InvalidInput("level k must be >= 1, got " + std::to_string(k));
    if (n < 2) throw InvalidInput("rank N must be >= 2, got " + std::to_string(n));
    TheoryParams params(k, n);
    for (int m = 2; m <= 4; ++m) {
        double v = qint(m, params);
        if (std::abs(v) <= threshold) {
            throw DegenerateParams("[" + std::to_string(m) + "]_q vanishes at k=" + std::to_string(k) +
                                   ", N=" + std::to_string(n));
        }
    }
    if (std::abs(params.a() - 1.0 / params.a()) <= threshold) {
        throw DegenerateParams("A - 1/A vanishes at k=" + std::to_string(k) + ", N=" + std::to_string(n));
    }
    return params;
}

}  // namespace platgate

#endif  // PLATGATE_CORE_HPP
