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

#include <complex>
#include <vector>

#include "squeezechain/quench.hpp"

namespace squeezechain {
namespace oracle {

/// Brute-force validator: the quadratic fermion Hamiltonian in the full 2^N
/// occupation-number Fock space, with the same boundary sector as the
/// production kernel (a_{N+1} = -a_1 for Sector::antiperiodic, +a_1 for
/// Sector::periodic). N <= 10.
struct FockState {
    ModelParams params;
    double field;
    Sector sector;
    std::vector<std::complex<double>> amplitudes;  // length 2^N, unit norm
};

constexpr int kMaxOracleSites = 10;

/// Lowest eigenvector of the dense Hamiltonian. Degenerate ground spaces are
/// resolved by projecting the momentum-space Bogoliubov vacuum onto the
/// eigenspace (maximal-overlap tie-break).
FockState fock_ground_state(const ModelParams& params, double h,
                            Sector sector = Sector::antiperiodic);

/// e^{-i H(h2) t} |state>, by one-shot dense eigendecomposition.
FockState fock_evolve(const FockState& state, double h2, double t);

/// Ground-state energy of the dense Hamiltonian (for cross-checks against
/// -1/2 sum_k eps_k).
double fock_ground_energy(const ModelParams& params, double h,
                          Sector sector = Sector::antiperiodic);

/// A_n = a_n^+ + a_n, B_n = a_n^+ - a_n at 1-based sites.
enum class MajoranaKind { A, B };
struct MajoranaOp {
    int site;  // 1-based
    MajoranaKind kind;
};

/// <state| phi_1 ... phi_m |state> for an arbitrary A/B string.
std::complex<double> fock_string_expectation(const FockState& state,
                                             const std::vector<MajoranaOp>& ops);

/// <a+_l a_{l+r}> with l = 1.
std::complex<double> fock_density(const FockState& state, int r);

/// G_n^{ab} = <S_1^a S_{1+n}^b> via the Jordan-Wigner spin operators.
/// alpha/beta in {'x','y','z'}.
std::complex<double> fock_spin_correlator(const FockState& state, char alpha,
                                          char beta, int n);

struct CollectiveMoments {
    double jx2;      // <Jx^2>
    double jy2;      // <Jy^2>
    double jxy_sym;  // <Jx Jy + Jy Jx>
    double jz;       // <Jz>
    double jz2;      // <Jz^2>
};

CollectiveMoments fock_collective_moments(const FockState& state);

/// xi_s^2 from the exact Jx/Jy moments. NOTE: equals the correlator-sum
/// closed form only when the state is an exact spin-ring state, i.e. when
/// fock_parity(state) = +1 (always the case for even N in the antiperiodic
/// sector). See the sector notes in quench.hpp.
double fock_xi_squared(const FockState& state);

double fock_variance_jz(const FockState& state);
double fock_magnetization(const FockState& state);

/// Fermion parity <prod_n (1 - 2 a+_n a_n)>, +-1 for eigenstates.
double fock_parity(const FockState& state);

/// <state|H(h)|state> in the state's sector (for energy-conservation checks).
double fock_energy(const FockState& state, double h);

/// Full production-vs-oracle comparison at one parameter tuple: every kernel
/// entry, every G_n^{ab}, xi^2, nu(J_z), M_z. Returns the worst absolute
/// mismatch. When the state parity is even, xi^2 and nu are additionally
/// checked against the exact collective-moment route.
struct OracleComparison {
    double worst = 0.0;
    double worst_kernel = 0.0;
    double worst_correlator = 0.0;
    double worst_observable = 0.0;
};

OracleComparison compare_against_oracle(const ModelParams& params, double h1,
                                        double h2, double t,
                                        Sector sector = Sector::antiperiodic);

}  // namespace oracle
}  // namespace squeezechain
