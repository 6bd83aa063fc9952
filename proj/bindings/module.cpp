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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "squeezechain/observables.hpp"
#include "squeezechain/oracle.hpp"
#include "squeezechain/version.hpp"

namespace py = pybind11;
using namespace squeezechain;

namespace {

Sector sector_from_string(const std::string& name) {
    if (name == "antiperiodic") return Sector::antiperiodic;
    if (name == "periodic") return Sector::periodic;
    throw InvalidParameterError("unknown sector: " + name);
}

py::dict trajectory_to_dict(const Trajectory& traj) {
    py::dict out;
    out["t"] = traj.times;
    out["xi2"] = traj.xi2;
    out["var_jz"] = traj.var_jz;
    out["mz"] = traj.mz;
    return out;
}

}  // namespace

PYBIND11_MODULE(_squeezechain, m) {
    m.doc() = "exact spin-squeezing dynamics of the transverse-field XY chain";
    m.attr("__version__") = kVersion;

    m.def(
        "momentum_grid",
        [](int n_sites, double delta, const std::string& sector) {
            const ModelParams params(n_sites, delta);
            const MomentumGrid grid =
                momentum_grid(params, sector_from_string(sector));
            std::vector<double> ks;
            ks.reserve(grid.modes.size());
            for (const auto& mode : grid.modes) ks.push_back(mode.k);
            return ks;
        },
        py::arg("n_sites"), py::arg("delta") = 0.8,
        py::arg("sector") = "periodic");

    m.def(
        "dispersion",
        [](double delta, double h, double k) {
            return dispersion(ModelParams(2, delta), h, k);
        },
        py::arg("delta"), py::arg("h"), py::arg("k"));

    m.def(
        "bogoliubov_angle",
        [](double delta, double h, double k) {
            return bogoliubov_angle(ModelParams(2, delta), h, k);
        },
        py::arg("delta"), py::arg("h"), py::arg("k"));

    m.def(
        "max_group_velocity",
        [](double delta, double h) {
            return max_group_velocity(ModelParams(2, delta), h);
        },
        py::arg("delta"), py::arg("h"));

    m.def(
        "pfaffian",
        [](const std::vector<std::vector<std::complex<double>>>& rows) {
            const int dim = static_cast<int>(rows.size());
            std::vector<std::complex<double>> flat;
            flat.reserve(static_cast<std::size_t>(dim) * dim);
            for (const auto& row : rows) {
                if (static_cast<int>(row.size()) != dim) {
                    throw InvalidParameterError("matrix must be square");
                }
                flat.insert(flat.end(), row.begin(), row.end());
            }
            return pfaffian(SkewMatrix::from_dense(flat, dim));
        },
        py::arg("matrix"), "Pfaffian of a complex skew-symmetric matrix");

    m.def(
        "ground_state_sweep",
        [](int n_sites, double delta, const std::vector<double>& h_list,
           int workers) {
            const GroundSweep sweep = ground_state_sweep(
                ModelParams(n_sites, delta), h_list, workers);
            py::dict out;
            out["h"] = sweep.h_values;
            out["xi2"] = sweep.xi2;
            return out;
        },
        py::arg("n_sites"), py::arg("delta"), py::arg("h_list"),
        py::arg("workers") = 0);

    m.def(
        "quench_trajectory",
        [](int n_sites, double delta, double h1, double h2,
           const std::vector<double>& times, int workers) {
            const ModelParams params(n_sites, delta);
            return trajectory_to_dict(
                evolve(params, make_quench(params, h1, h2), times, workers));
        },
        py::arg("n_sites"), py::arg("delta"), py::arg("h1"), py::arg("h2"),
        py::arg("times"), py::arg("workers") = 0);

    m.def(
        "long_time_average",
        [](int n_sites, double delta, double h1, double h2, double t_min,
           double t_max, double step, int workers) {
            const ModelParams params(n_sites, delta);
            const AveragePoint p = long_time_average(
                params, make_quench(params, h1, h2),
                AveragingWindow{t_min, t_max, step}, workers);
            return py::make_tuple(p.xi2_avg, p.var_avg);
        },
        py::arg("n_sites"), py::arg("delta"), py::arg("h1"), py::arg("h2"),
        py::arg("t_min") = 5.0, py::arg("t_max") = 40.0, py::arg("step") = 0.1,
        py::arg("workers") = 0);

    m.def(
        "average_sweep",
        [](int n_sites, double delta, double h1,
           const std::vector<double>& h2_list, int workers) {
            const AverageCurve curve = average_sweep(
                ModelParams(n_sites, delta), h1, h2_list, std::nullopt,
                workers);
            py::dict out;
            out["h2"] = curve.h2_values;
            out["xi2_avg"] = curve.xi2_avg;
            out["var_avg"] = curve.var_avg;
            out["window"] = py::make_tuple(curve.window.t_min,
                                           curve.window.t_max,
                                           curve.window.step);
            return out;
        },
        py::arg("n_sites"), py::arg("delta"), py::arg("h1"),
        py::arg("h2_list"), py::arg("workers") = 0);

    m.def(
        "revival_scan",
        [](double delta, double h1, double h2, const std::vector<int>& sizes,
           double dt, int workers) {
            const RevivalFit fit =
                revival_scan(delta, h1, h2, sizes, dt, workers);
            py::dict out;
            out["sizes"] = fit.sizes;
            out["t_rev"] = fit.revival_times;
            out["slope"] = fit.slope;
            out["slope_err"] = fit.slope_err;
            out["skipped"] = fit.skipped;
            return out;
        },
        py::arg("delta"), py::arg("h1"), py::arg("h2"), py::arg("sizes"),
        py::arg("dt") = 0.25, py::arg("workers") = 0);

    m.def(
        "oracle_max_mismatch",
        [](int n_sites, double delta, double h1, double h2, double t) {
            return oracle::compare_against_oracle(ModelParams(n_sites, delta),
                                                  h1, h2, t)
                .worst;
        },
        py::arg("n_sites"), py::arg("delta"), py::arg("h1"), py::arg("h2"),
        py::arg("t"),
        "worst |production - Fock oracle| over kernels, correlators and "
        "observables (N <= 10)");

    // most-derived registered last so it is matched first
    py::register_exception<Error>(m, "SqueezechainError", PyExc_RuntimeError);
    py::register_exception<InvalidParameterError>(m, "InvalidParameterError",
                                                  PyExc_ValueError);
}
