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

#include "squeezechain/observables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "squeezechain/parallel.hpp"

namespace squeezechain {

double xi_squared(const CorrelatorSet& corrs, int n_sites) {
    if (corrs.n_sites != n_sites ||
        corrs.gxx.size() != static_cast<std::size_t>(n_sites - 1)) {
        throw InvalidParameterError("correlator set incomplete for N = " +
                                    std::to_string(n_sites));
    }
    const double s_plus = corrs.sum_xx() + corrs.sum_yy();
    const double s_minus = corrs.sum_xx() - corrs.sum_yy();
    const double cross = corrs.sum_xy() + corrs.sum_yx();
    double arg = s_minus * s_minus + cross * cross;
    if (arg < -1e-12) {
        throw NegativeDiscriminantError(
            "negative discriminant " + std::to_string(arg) +
            " in xi^2; upstream correlators are corrupt");
    }
    if (arg < 0.0) arg = 0.0;
    return 1.0 + 2.0 * s_plus - 2.0 * std::sqrt(arg);
}

double variance_jz(const ContractionKernel& kernel, const CorrelatorSet& corrs,
                   int n_sites) {
    const double n = static_cast<double>(n_sites);
    const double mz = magnetization(kernel);
    double var = n * (0.25 + corrs.sum_zz()) - (n * mz) * (n * mz);
    if (var < -1e-9) {
        throw NegativeVarianceError("nu(J_z) = " + std::to_string(var));
    }
    return std::max(var, 0.0);
}

double magnetization(const ContractionKernel& kernel) {
    return kernel.density[0] - 0.5;
}

namespace {

struct PointObservables {
    double xi2;
    double var_jz;
    double mz;
};

PointObservables observables_at(const QuenchSpec& quench, double t) {
    const ContractionKernel kernel = kernel_at(quench, t);
    const CorrelatorSet corrs = correlators_at(kernel);
    PointObservables out;
    out.xi2 = xi_squared(corrs, kernel.n_sites);
    out.var_jz = variance_jz(kernel, corrs, kernel.n_sites);
    out.mz = magnetization(kernel);
    return out;
}

std::vector<double> uniform_grid(double t_min, double t_max, double step) {
    std::vector<double> grid;
    const int count = static_cast<int>(std::floor((t_max - t_min) / step + 0.5));
    grid.reserve(static_cast<std::size_t>(count) + 1);
    for (int i = 0; i <= count; ++i) {
        grid.push_back(t_min + step * i);
    }
    return grid;
}

}  // namespace

Trajectory evolve(const ModelParams& params, const QuenchSpec& quench,
                  std::vector<double> t_grid, int workers) {
    if (t_grid.empty()) {
        throw InvalidParameterError("time grid must be nonempty");
    }
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (t_grid[i] < 0.0 || (i > 0 && t_grid[i] < t_grid[i - 1])) {
            throw InvalidParameterError(
                "time grid must be nondecreasing and nonnegative");
        }
    }
    Trajectory traj{params, quench.h1, quench.h2, std::move(t_grid), {}, {}, {}};
    const std::size_t count = traj.times.size();
    traj.xi2.resize(count);
    traj.var_jz.resize(count);
    traj.mz.resize(count);
    try {
        parallel_for_index(count, workers, [&](std::size_t i) {
            const PointObservables p = observables_at(quench, traj.times[i]);
            traj.xi2[i] = p.xi2;
            traj.var_jz[i] = p.var_jz;
            traj.mz[i] = p.mz;
        });
    } catch (const Error& e) {
        throw Error(std::string(e.what()) + " (during evolve over " +
                    std::to_string(count) + " points)");
    }
    return traj;
}

double predicted_revival_time(const ModelParams& params, double h2) {
    return params.n_sites / (2.0 * max_group_velocity(params, h2));
}

AveragingWindow default_average_window(const ModelParams& params, double h2) {
    AveragingWindow w;
    w.t_min = 5.0;
    w.t_max = 0.8 * predicted_revival_time(params, h2);
    w.step = 0.1;
    return w;
}

AveragePoint long_time_average(const ModelParams& params,
                               const QuenchSpec& quench,
                               const AveragingWindow& window, int workers) {
    if (!(window.t_min >= 0.0) || !(window.t_max > window.t_min) ||
        !(window.step > 0.0)) {
        throw InvalidParameterError("invalid averaging window");
    }
    const double t_rev = predicted_revival_time(params, quench.h2);
    if (window.t_max >= 0.9 * t_rev) {
        throw WindowTooLongError(
            "averaging window end " + std::to_string(window.t_max) +
            " reaches into the first revival (T_rev ~ " +
            std::to_string(t_rev) + ")");
    }
    const Trajectory traj =
        evolve(params, quench,
               uniform_grid(window.t_min, window.t_max, window.step), workers);
    const std::size_t m = traj.times.size();
    if (m < 2) {
        throw InvalidParameterError("averaging window shorter than one step");
    }
    // trapezoidal weights: half at both ends
    double sx = 0.5 * (traj.xi2.front() + traj.xi2.back());
    double sv = 0.5 * (traj.var_jz.front() + traj.var_jz.back());
    for (std::size_t i = 1; i + 1 < m; ++i) {
        sx += traj.xi2[i];
        sv += traj.var_jz[i];
    }
    const double denom = static_cast<double>(m - 1);
    return AveragePoint{sx / denom, sv / denom};
}

AverageCurve average_sweep(const ModelParams& params, double h1,
                           const std::vector<double>& h2_list,
                           std::optional<AveragingWindow> window, int workers) {
    if (h2_list.empty()) {
        throw InvalidParameterError("h2 list must be nonempty");
    }
    for (std::size_t i = 1; i < h2_list.size(); ++i) {
        if (h2_list[i] <= h2_list[i - 1]) {
            throw InvalidParameterError("h2 list must be strictly increasing");
        }
    }
    AverageCurve curve;
    if (window.has_value()) {
        curve.window = *window;
    } else {
        // shared window capped below the smallest predicted revival time
        double t_rev_min = predicted_revival_time(params, h2_list.front());
        for (double h2 : h2_list) {
            t_rev_min = std::min(t_rev_min, predicted_revival_time(params, h2));
        }
        curve.window = AveragingWindow{5.0, 0.8 * t_rev_min, 0.1};
    }
    curve.h2_values = h2_list;
    curve.xi2_avg.resize(h2_list.size());
    curve.var_avg.resize(h2_list.size());
    for (std::size_t i = 0; i < h2_list.size(); ++i) {
        const QuenchSpec quench = make_quench(params, h1, h2_list[i]);
        const AveragePoint p =
            long_time_average(params, quench, curve.window, workers);
        curve.xi2_avg[i] = p.xi2_avg;
        curve.var_avg[i] = p.var_avg;
    }
    return curve;
}

GroundSweep ground_state_sweep(const ModelParams& params,
                               const std::vector<double>& h_list, int workers) {
    if (h_list.empty()) {
        throw InvalidParameterError("field list must be nonempty");
    }
    GroundSweep sweep;
    sweep.h_values = h_list;
    sweep.xi2.resize(h_list.size());
    parallel_for_index(h_list.size(), workers, [&](std::size_t i) {
        const QuenchSpec null_quench =
            make_quench(params, h_list[i], h_list[i]);
        sweep.xi2[i] = observables_at(null_quench, 0.0).xi2;
    });
    return sweep;
}

double detect_revival(const Trajectory& traj, double baseline_t_min,
                      double baseline_t_max, double threshold_sigmas) {
    if (!(threshold_sigmas > 0.0)) {
        throw InvalidParameterError("threshold_sigmas must be positive");
    }
    if (!(baseline_t_min < baseline_t_max)) {
        throw InvalidParameterError("empty baseline window");
    }
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        if (traj.times[i] >= baseline_t_min && traj.times[i] <= baseline_t_max) {
            sum += traj.xi2[i];
            ++count;
        }
    }
    if (count < 4) {
        throw InvalidParameterError("baseline window holds fewer than 4 samples");
    }
    const double mean = sum / static_cast<double>(count);
    double ss = 0.0;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        if (traj.times[i] >= baseline_t_min && traj.times[i] <= baseline_t_max) {
            const double d = traj.xi2[i] - mean;
            ss += d * d;
        }
    }
    double sigma = std::sqrt(ss / static_cast<double>(count - 1));
    sigma = std::max(sigma, 1e-14);  // flat plateaus: floor at rounding noise

    const double threshold = threshold_sigmas * sigma;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        if (traj.times[i] <= baseline_t_max) continue;
        if (std::abs(traj.xi2[i] - mean) > threshold) {
            // refine to the local extremum of the deviation
            const double refine_horizon = traj.times[i] + 6.0;
            std::size_t best = i;
            double best_dev = std::abs(traj.xi2[i] - mean);
            for (std::size_t j = i + 1;
                 j < traj.times.size() && traj.times[j] <= refine_horizon; ++j) {
                const double dev = std::abs(traj.xi2[j] - mean);
                if (dev > best_dev) {
                    best_dev = dev;
                    best = j;
                }
            }
            return traj.times[best];
        }
    }
    throw NoRevivalFoundError(
        "no revival beyond t = " + std::to_string(baseline_t_max) +
        " within the trajectory horizon");
}

RevivalFit revival_scan(double delta, double h1, double h2,
                        const std::vector<int>& sizes, double dt, int workers) {
    if (sizes.size() < 3) {
        throw InvalidParameterError(
            "revival scan needs at least 3 sizes for a fit");
    }
    for (int n : sizes) {
        if (n < 80) {
            throw InvalidParameterError(
                "revival scan validated for sizes >= 80, got " +
                std::to_string(n));
        }
    }
    if (!(dt > 0.0)) {
        throw InvalidParameterError("dt must be positive");
    }

    RevivalFit fit;
    fit.slope = 0.0;
    fit.slope_err = 0.0;
    fit.max_rel_residual = 0.0;

    for (int n : sizes) {
        const ModelParams params(n, delta);
        const QuenchSpec quench = make_quench(params, h1, h2);
        const double t_rev = predicted_revival_time(params, h2);
        const double base_lo = 0.25 * t_rev;
        const double base_hi = 0.45 * t_rev;

        // evaluate in chunks past the baseline and stop once the revival is
        // found and refined; points are independent so this stays
        // deterministic
        const double t0 = 0.2 * t_rev;
        const double t_cap = 1.3 * t_rev;
        std::vector<double> grid;
        for (double t = t0; t <= t_cap; t += dt) grid.push_back(t);

        const std::size_t chunk = 64;
        Trajectory traj{params, h1, h2, {}, {}, {}, {}};
        bool found = false;
        double detected = 0.0;
        for (std::size_t begin = 0; begin < grid.size() && !found;
             begin += chunk) {
            const std::size_t end = std::min(begin + chunk, grid.size());
            std::vector<double> part(grid.begin() + begin, grid.begin() + end);
            Trajectory piece = evolve(params, quench, std::move(part), workers);
            traj.times.insert(traj.times.end(), piece.times.begin(),
                              piece.times.end());
            traj.xi2.insert(traj.xi2.end(), piece.xi2.begin(),
                            piece.xi2.end());
            traj.var_jz.insert(traj.var_jz.end(), piece.var_jz.begin(),
                               piece.var_jz.end());
            traj.mz.insert(traj.mz.end(), piece.mz.begin(), piece.mz.end());
            if (traj.times.back() < base_hi + 8.0) continue;
            try {
                detected = detect_revival(traj, base_lo, base_hi);
                // accept only once the refine horizon is fully covered
                if (detected + 6.0 <= traj.times.back()) {
                    found = true;
                }
            } catch (const NoRevivalFoundError&) {
            }
        }
        if (found) {
            fit.sizes.push_back(n);
            fit.revival_times.push_back(detected);
        } else {
            fit.skipped.push_back(n);
        }
    }

    if (fit.sizes.size() < 2) {
        throw NoRevivalFoundError(
            "revivals detected for fewer than 2 sizes; cannot fit");
    }

    // least squares through the origin: T = k N
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < fit.sizes.size(); ++i) {
        const double x = static_cast<double>(fit.sizes[i]);
        sxx += x * x;
        sxy += x * fit.revival_times[i];
    }
    fit.slope = sxy / sxx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < fit.sizes.size(); ++i) {
        const double x = static_cast<double>(fit.sizes[i]);
        const double r = fit.revival_times[i] - fit.slope * x;
        ss_res += r * r;
        fit.max_rel_residual =
            std::max(fit.max_rel_residual, std::abs(r) / (fit.slope * x));
    }
    const std::size_t m = fit.sizes.size();
    fit.slope_err =
        (m > 1) ? std::sqrt(ss_res / (static_cast<double>(m - 1) * sxx)) : 0.0;
    return fit;
}

}  // namespace squeezechain
