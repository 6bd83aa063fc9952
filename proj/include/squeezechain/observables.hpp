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

#include <optional>
#include <vector>

#include "squeezechain/correlators.hpp"

namespace squeezechain {

/// Kitagawa-Ueda squeezing parameter from the correlator sums:
///   xi^2 = 1 + 2 S+ - 2 sqrt(S-^2 + X^2),
/// S+ = sum(gxx+gyy), S- = sum(gxx-gyy), X = sum(gxy+gyx). The square-root
/// argument is clamped to 0 if it lands in (-1e-12, 0); more negative values
/// throw NegativeDiscriminantError.
double xi_squared(const CorrelatorSet& corrs, int n_sites);

/// nu(J_z) = N (1/4 + sum_n gzz[n]) - (N M_z)^2, with M_z = density[0] - 1/2.
/// Values below -1e-9 throw NegativeVarianceError; small negatives clamp to 0.
double variance_jz(const ContractionKernel& kernel, const CorrelatorSet& corrs,
                   int n_sites);

/// M_z = <J_z>/N = density[0] - 1/2, in [-1/2, 1/2].
double magnetization(const ContractionKernel& kernel);

struct Trajectory {
    ModelParams params;
    double h1;
    double h2;
    std::vector<double> times;
    std::vector<double> xi2;
    std::vector<double> var_jz;
    std::vector<double> mz;
};

/// One kernel -> correlators -> observables evaluation per grid point;
/// points are independent and computed by a worker pool, results merged in
/// index order (bit-exact regardless of scheduling). workers = 0 resolves to
/// SQUEEZECHAIN_WORKERS or the hardware concurrency.
Trajectory evolve(const ModelParams& params, const QuenchSpec& quench,
                  std::vector<double> t_grid, int workers = 0);

struct AveragingWindow {
    double t_min;
    double t_max;
    double step = 0.1;
};

struct AveragePoint {
    double xi2_avg;
    double var_avg;
};

/// Predicted first revival N / (2 v_g(h2)) used to guard averaging windows.
double predicted_revival_time(const ModelParams& params, double h2);

/// Uniform-grid mean with trapezoidal end weights over [t_min, t_max].
/// Requires t_max < 0.9 * predicted_revival_time (WindowTooLongError).
AveragePoint long_time_average(const ModelParams& params,
                               const QuenchSpec& quench,
                               const AveragingWindow& window, int workers = 0);

/// Default window [5, 0.8 * T_rev_predicted], step 0.1, capped below the
/// first revival; for sweeps the cap uses the smallest predicted T_rev.
AveragingWindow default_average_window(const ModelParams& params, double h2);

struct AverageCurve {
    std::vector<double> h2_values;
    std::vector<double> xi2_avg;
    std::vector<double> var_avg;
    AveragingWindow window;
};

/// long_time_average per h2 on a shared window (monotone h2_list required).
AverageCurve average_sweep(const ModelParams& params, double h1,
                           const std::vector<double>& h2_list,
                           std::optional<AveragingWindow> window = std::nullopt,
                           int workers = 0);

struct GroundSweep {
    std::vector<double> h_values;
    std::vector<double> xi2;
};

/// Null quench evaluated at t = 0 per field value.
GroundSweep ground_state_sweep(const ModelParams& params,
                               const std::vector<double>& h_list,
                               int workers = 0);

/// First time t > baseline_t_max where |xi2(t) - baseline mean| exceeds
/// threshold_sigmas * baseline std, refined to the local extremum of the
/// deviation. Throws NoRevivalFoundError within the trajectory horizon.
double detect_revival(const Trajectory& traj, double baseline_t_min,
                      double baseline_t_max, double threshold_sigmas = 6.0);

struct RevivalFit {
    std::vector<int> sizes;
    std::vector<double> revival_times;
    std::vector<int> skipped;  // sizes with no detected revival
    double slope;              // T_rev = slope * N
    double slope_err;
    double max_rel_residual;
};

/// Detects the first revival per size and fits T_rev = k N through the
/// origin. Sizes must be >= 80 (validated regime) and at least three sizes
/// must yield revivals.
RevivalFit revival_scan(double delta, double h1, double h2,
                        const std::vector<int>& sizes, double dt = 0.25,
                        int workers = 0);

}  // namespace squeezechain
