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

#pragma once

#include <vector>

#include "squeezechain/errors.hpp"

namespace squeezechain {

/// Spin-1/2 XY chain in a transverse field, J = 1:
///   H = -J sum_n [(1+delta)/2 sx sx + (1-delta)/2 sy sy] - h sum_n sz/ ...
/// The anisotropy is restricted to (0, 1]; delta = 0 (the gapless XX chain)
/// is rejected.
struct ModelParams {
    int n_sites;
    double delta;
    double coupling = 1.0;

    ModelParams(int n_sites_, double delta_);
};

/// Fermion boundary sector after the Jordan-Wigner transformation.
///
/// `periodic` is the textbook c-cycle grid, k = 2*pi*m/N with integer m.
/// `antiperiodic` uses half-odd-integer m; it carries the even-parity sector
/// in which the finite chain's ground state actually lives, and is the
/// default for all dynamics. See NOTES in quench.hpp.
enum class Sector { antiperiodic, periodic };

struct MomentumMode {
    double k;
    // cos/sin of k with the k = 0 and k = pi grid points made exact, so the
    // degenerate mode at (h = 1, k = pi) is detected exactly.
    double cos_k;
    double sin_k;
};

struct MomentumGrid {
    Sector sector;
    std::vector<MomentumMode> modes;  // ascending in (-pi, pi]

    int size() const { return static_cast<int>(modes.size()); }
};

/// Periodic-sector grid: k = 2*pi*m/N, m = 0, +-1, ..., +-(N/2-1), N/2 for
/// even N and m = 0, +-1, ..., +-(N-1)/2 for odd N.
MomentumGrid momentum_grid(const ModelParams& params);

/// Grid for a chosen fermion sector. The antiperiodic grid uses
/// m = +-1/2, +-3/2, ...; for odd N it contains the unpaired k = pi mode.
MomentumGrid momentum_grid(const ModelParams& params, Sector sector);

/// Quasiparticle energy eps_k = sqrt((cos k + h)^2 + (delta sin k)^2).
double dispersion(const ModelParams& params, double h, double k);

/// Bogoliubov angle, branch fixed by 2*theta = atan2(B_k, A_k) with
/// A_k = cos k + h, B_k = delta sin k, so 2*theta in (-pi, pi].
/// Throws DegenerateModeError at eps_k = 0 (only h = 1, k = pi); the caller
/// must use theta = 0 for that mode.
double bogoliubov_angle(const ModelParams& params, double h, double k);

/// Maximal quasiparticle group velocity max_k |d eps/d k|. At h = 1 exactly
/// this returns delta (the critical post-quench value relevant for revivals);
/// elsewhere it scans |d eps/d k| on a dense grid with central differences.
double max_group_velocity(const ModelParams& params, double h);

struct BogoliubovMode {
    double k;
    double cos_k;
    double sin_k;
    double a_coeff;  // cos k + h
    double b_coeff;  // delta sin k
    double energy;   // sqrt(a^2 + b^2)
    double theta;    // branch as in bogoliubov_angle; 0 at the degenerate mode
};

struct BogoliubovFrame {
    double field;
    std::vector<BogoliubovMode> modes;
};

/// Frame over a grid; applies the theta = 0 convention at a degenerate mode.
BogoliubovFrame bogoliubov_frame(const ModelParams& params, double h,
                                 const MomentumGrid& grid);

}  // namespace squeezechain
