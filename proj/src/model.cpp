/*
 * Copyright 2026 The squeezechain authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "squeezechain/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace squeezechain {

namespace {

constexpr double kPi = std::numbers::pi;

// cos/sin of 2*pi*m/N with the k = 0 and k = pi grid points exact. m is
// stored as 2m (integer for both sectors).
MomentumMode mode_from_two_m(int two_m, int n) {
    MomentumMode mode;
    mode.k = kPi * static_cast<double>(two_m) / static_cast<double>(n);
    if (two_m == 0) {
        mode.cos_k = 1.0;
        mode.sin_k = 0.0;
    } else if (two_m == n) {
        mode.cos_k = -1.0;
        mode.sin_k = 0.0;
    } else {
        mode.cos_k = std::cos(mode.k);
        mode.sin_k = std::sin(mode.k);
    }
    return mode;
}

}  // namespace

ModelParams::ModelParams(int n_sites_, double delta_)
    : n_sites(n_sites_), delta(delta_) {
    if (n_sites < 2) {
        throw InvalidParameterError("n_sites must be >= 2, got " +
                                    std::to_string(n_sites));
    }
    if (!(delta > 0.0) || delta > 1.0) {
        throw InvalidParameterError(
            "anisotropy delta must lie in (0, 1] (the XX limit delta = 0 is "
            "not supported), got " +
            std::to_string(delta));
    }
}

MomentumGrid momentum_grid(const ModelParams& params) {
    return momentum_grid(params, Sector::periodic);
}

MomentumGrid momentum_grid(const ModelParams& params, Sector sector) {
    const int n = params.n_sites;
    MomentumGrid grid;
    grid.sector = sector;
    grid.modes.reserve(static_cast<std::size_t>(n));
    if (sector == Sector::periodic) {
        // m = 0, +-1, ..., +-(N/2-1), N/2 (even N); m = 0, ..., +-(N-1)/2 (odd)
        const int m_lo = (n % 2 == 0) ? -(n / 2 - 1) : -((n - 1) / 2);
        const int m_hi = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
        for (int m = m_lo; m <= m_hi; ++m) {
            grid.modes.push_back(mode_from_two_m(2 * m, n));
        }
    } else {
        // half-odd-integer m; for odd N the list ends with the k = pi mode
        const int q_hi = (n % 2 == 0) ? n - 1 : n - 2;  // 2m = +-1, +-3, ...
        for (int q = -q_hi; q <= q_hi; q += 2) {
            grid.modes.push_back(mode_from_two_m(q, n));
        }
        if (n % 2 == 1) {
            grid.modes.push_back(mode_from_two_m(n, n));
        }
    }
    return grid;
}

double dispersion(const ModelParams& params, double h, double k) {
    const double a = std::cos(k) + h;
    const double b = params.delta * std::sin(k);
    return std::hypot(a, b);
}

double bogoliubov_angle(const ModelParams& params, double h, double k) {
    const double a = std::cos(k) + h;
    const double b = params.delta * std::sin(k);
    if (std::hypot(a, b) < 1e-14) {
        throw DegenerateModeError(
            "zero-energy mode (h = " + std::to_string(h) +
            ", k = " + std::to_string(k) + "); use the theta = 0 convention");
    }
    return 0.5 * std::atan2(b, a);
}

double max_group_velocity(const ModelParams& params, double h) {
    if (h == 1.0) {
        return params.delta;  // critical post-quench value
    }
    // |d eps/dk| is even in k; scan [0, pi] with central differences
    constexpr int kSamples = 200000;
    constexpr double kStep = 1e-6;
    double best = 0.0;
    for (int i = 0; i <= kSamples; ++i) {
        const double k = kPi * static_cast<double>(i) / kSamples;
        const double v = std::abs(dispersion(params, h, k + kStep) -
                                  dispersion(params, h, k - kStep)) /
                         (2.0 * kStep);
        if (v > best) best = v;
    }
    return best;
}

BogoliubovFrame bogoliubov_frame(const ModelParams& params, double h,
                                 const MomentumGrid& grid) {
    BogoliubovFrame frame;
    frame.field = h;
    frame.modes.reserve(grid.modes.size());
    for (const MomentumMode& m : grid.modes) {
        BogoliubovMode mode;
        mode.k = m.k;
        mode.cos_k = m.cos_k;
        mode.sin_k = m.sin_k;
        mode.a_coeff = m.cos_k + h;
        mode.b_coeff = params.delta * m.sin_k;
        mode.energy = std::hypot(mode.a_coeff, mode.b_coeff);
        // theta = 0 at the degenerate mode (only h = 1, k = pi); its energy
        // is exactly zero there because the grid's k = pi trig is exact.
        mode.theta = (mode.energy == 0.0)
                         ? 0.0
                         : 0.5 * std::atan2(mode.b_coeff, mode.a_coeff);
        frame.modes.push_back(mode);
    }
    return frame;
}

}  // namespace squeezechain
