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

#include "squeezechain/pfaffian.hpp"
#include "squeezechain/quench.hpp"

namespace squeezechain {

enum class StringKind { xx, yy, xy, yx };

/// Skew matrix of <phi_i phi_j> for the 2n-operator string of kind:
///   xx -> B1 A2 B2 ... An Bn A_{n+1}
///   yy -> A1 B2 A2 ... Bn An B_{n+1}
///   xy -> B1 A2 B2 ... An Bn B_{n+1}
///   yx -> A1 B2 A2 ... Bn An A_{n+1}
/// Entries are looked up in the kernel by operator types and site separation.
SkewMatrix assemble_string_matrix(const ContractionKernel& kernel, int n,
                                  StringKind kind);

/// G_n^zz = 1/4 pf over (A1, B1, A_{n+1}, B_{n+1}):
///   1/4 [ab[0]^2 - aa[n]^2 + ab[n] ba[n]].
double gzz(const ContractionKernel& kernel, int n);

/// The five spin-spin correlator families, index i <-> separation n = i+1.
struct CorrelatorSet {
    int n_sites;
    std::vector<double> gxx, gyy, gxy, gyx, gzz;

    double sum_xx() const;
    double sum_yy() const;
    double sum_xy() const;
    double sum_yx() const;
    double sum_zz() const;
};

/// Evaluation route. Both are exact and agree to rounding:
///  * complex_pfaffian: direct transcription — complex string matrices,
///    complex Pfaffians, prefactors D_n, imaginary-residue check at 1e-9.
///  * phase_reduced (default): rotate A -> e^{i pi/4} A, B -> e^{-i pi/4} B,
///    which makes every string matrix real (aa is purely imaginary); real
///    Parlett-Reid is ~4x faster and the result is real by construction.
enum class CorrelatorRoute { phase_reduced, complex_pfaffian };

/// G_n^{ab} = D_n^{ab} pf(string matrix), D: xx 1/4, yy (-1)^n/4, xy -i/4,
/// yx i(-1)^n/4; gzz via the closed 4x4 form.
CorrelatorSet correlators_at(const ContractionKernel& kernel,
                             CorrelatorRoute route = CorrelatorRoute::phase_reduced);

}  // namespace squeezechain
