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

#include "squeezechain/quench.hpp"

#include <cmath>
#include <string>

namespace squeezechain {

QuenchSpec make_quench(const ModelParams& params, double h1, double h2,
                       Sector sector) {
    if (h1 < 0.0 || h2 < 0.0) {
        throw InvalidParameterError("quench fields must be >= 0, got h1 = " +
                                    std::to_string(h1) +
                                    ", h2 = " + std::to_string(h2));
    }
    QuenchSpec spec{params, h1, h2, momentum_grid(params, sector),
                    BogoliubovFrame{}, BogoliubovFrame{}, {}, {}, {}, {}, {}, {}};
    spec.frame1 = bogoliubov_frame(params, h1, spec.grid);
    spec.frame2 = bogoliubov_frame(params, h2, spec.grid);
    const std::size_t n = spec.grid.modes.size();
    spec.phi.resize(n);
    spec.sin_2phi.resize(n);
    spec.cos_2phi.resize(n);
    spec.sin_2theta2.resize(n);
    spec.cos_2theta2.resize(n);
    spec.energy2.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double phi = spec.frame2.modes[i].theta - spec.frame1.modes[i].theta;
        spec.phi[i] = phi;
        spec.sin_2phi[i] = std::sin(2.0 * phi);
        spec.cos_2phi[i] = std::cos(2.0 * phi);
        spec.sin_2theta2[i] = std::sin(2.0 * spec.frame2.modes[i].theta);
        spec.cos_2theta2[i] = std::cos(2.0 * spec.frame2.modes[i].theta);
        spec.energy2[i] = spec.frame2.modes[i].energy;
    }
    return spec;
}

ContractionKernel kernel_at(const QuenchSpec& spec, double t) {
    if (t < 0.0) {
        throw InvalidParameterError("time must be >= 0, got " +
                                    std::to_string(t));
    }
    const int n = spec.params.n_sites;
    const std::size_t nm = spec.grid.modes.size();

    ContractionKernel kernel;
    kernel.n_sites = n;
    kernel.time = t;
    kernel.aa.resize(static_cast<std::size_t>(n));
    kernel.ab.resize(static_cast<std::size_t>(n));
    kernel.ba.resize(static_cast<std::size_t>(n));
    kernel.density.resize(static_cast<std::size_t>(n));

    // per-mode time factors and the r-independent density coefficient
    std::vector<double> cos2et(nm), sin2et(nm), dens_coef(nm);
    for (std::size_t i = 0; i < nm; ++i) {
        cos2et[i] = std::cos(2.0 * spec.energy2[i] * t);
        sin2et[i] = std::sin(2.0 * spec.energy2[i] * t);
        dens_coef[i] = spec.cos_2phi[i] * spec.cos_2theta2[i] +
                       spec.sin_2phi[i] * spec.sin_2theta2[i] * cos2et[i];
    }

    const double inv_n = 1.0 / static_cast<double>(n);
    for (int r = 0; r < n; ++r) {
        double s_aa = 0.0, s_ab = 0.0, s_ba = 0.0, s_d = 0.0;
        for (std::size_t i = 0; i < nm; ++i) {
            const double kr = spec.grid.modes[i].k * r;
            const double ckr = std::cos(kr);
            const double skr = std::sin(kr);
            const double c2t = spec.cos_2theta2[i];
            const double s2t = spec.sin_2theta2[i];
            // cos/sin(2 theta2 +- kr) by angle addition
            const double cos_p = c2t * ckr - s2t * skr;
            const double sin_p = s2t * ckr + c2t * skr;
            const double cos_m = c2t * ckr + s2t * skr;
            const double sin_m = s2t * ckr - c2t * skr;
            s_aa += skr * spec.sin_2phi[i] * sin2et[i];
            s_ab -= cos_p * spec.cos_2phi[i] +
                    spec.sin_2phi[i] * sin_p * cos2et[i];
            s_ba += cos_m * spec.cos_2phi[i] +
                    spec.sin_2phi[i] * sin_m * cos2et[i];
            s_d += dens_coef[i] * ckr;
        }
        kernel.aa[static_cast<std::size_t>(r)] = {0.0, s_aa * inv_n};
        kernel.ab[static_cast<std::size_t>(r)] = s_ab * inv_n;
        kernel.ba[static_cast<std::size_t>(r)] = s_ba * inv_n;
        kernel.density[static_cast<std::size_t>(r)] =
            (r == 0 ? 0.5 : 0.0) + 0.5 * s_d * inv_n;
    }
    kernel.aa[0] = {0.0, 0.0};
    return kernel;
}

}  // namespace squeezechain
