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

#include "squeezechain/oracle.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "squeezechain/correlators.hpp"
#include "squeezechain/observables.hpp"

namespace squeezechain {
namespace oracle {

namespace {

using Complex = std::complex<double>;
using Vec = std::vector<Complex>;

int check_size(int n_sites) {
    if (n_sites > kMaxOracleSites) {
        throw SizeTooLargeError("Fock oracle limited to N <= " +
                                std::to_string(kMaxOracleSites) + ", got " +
                                std::to_string(n_sites));
    }
    return 1 << n_sites;
}

// occupation-number basis; bit j (0-based) = site j+1; Jordan-Wigner sign
// over lower bits
inline double jw_sign(unsigned b, int j) {
    const unsigned mask = (1u << j) - 1u;
    return (std::popcount(b & mask) & 1u) ? -1.0 : 1.0;
}

void apply_annihilate(const Vec& in, Vec& out, int j) {
    std::fill(out.begin(), out.end(), Complex{0.0, 0.0});
    const unsigned bit = 1u << j;
    for (unsigned b = 0; b < in.size(); ++b) {
        if (in[b] != 0.0 && (b & bit)) {
            out[b & ~bit] += jw_sign(b, j) * in[b];
        }
    }
}

void apply_create(const Vec& in, Vec& out, int j) {
    std::fill(out.begin(), out.end(), Complex{0.0, 0.0});
    const unsigned bit = 1u << j;
    for (unsigned b = 0; b < in.size(); ++b) {
        if (in[b] != 0.0 && !(b & bit)) {
            out[b | bit] += jw_sign(b, j) * in[b];
        }
    }
}

void apply_majorana(const Vec& in, Vec& out, int j, MajoranaKind kind) {
    // A = a+ + a flips bit j with the string sign; B = a+ - a adds a minus
    // on annihilation
    std::fill(out.begin(), out.end(), Complex{0.0, 0.0});
    const unsigned bit = 1u << j;
    const double ann = (kind == MajoranaKind::A) ? 1.0 : -1.0;
    for (unsigned b = 0; b < in.size(); ++b) {
        if (in[b] == 0.0) continue;
        const double s = jw_sign(b, j);
        if (b & bit) {
            out[b & ~bit] += ann * s * in[b];
        } else {
            out[b | bit] += s * in[b];
        }
    }
}

// multiply by prod_{l<j}(1 - 2 n_l) in place
void apply_string_below(Vec& v, int j) {
    const unsigned mask = (1u << j) - 1u;
    for (unsigned b = 0; b < v.size(); ++b) {
        if (std::popcount(b & mask) & 1u) v[b] = -v[b];
    }
}

// S^x_j = 1/2 string_j A_j ; S^y_j = -(i/2) string_j B_j ; S^z_j = n_j - 1/2
void apply_spin(const Vec& in, Vec& out, int j, char axis) {
    if (axis == 'z') {
        out.resize(in.size());
        const unsigned bit = 1u << j;
        for (unsigned b = 0; b < in.size(); ++b) {
            out[b] = in[b] * ((b & bit) ? 0.5 : -0.5);
        }
        return;
    }
    out.resize(in.size());
    apply_majorana(in, out, j,
                   axis == 'x' ? MajoranaKind::A : MajoranaKind::B);
    apply_string_below(out, j);
    const Complex scale = (axis == 'x') ? Complex{0.5, 0.0} : Complex{0.0, -0.5};
    for (auto& v : out) v *= scale;
}

// H = -1/2 sum_n s_n (a+_n a_{n+1} + delta a+_n a+_{n+1} + h.c.)
//     - h sum_n (n_n - 1/2), wrap bond sign s = +1 periodic, -1 antiperiodic
void apply_hamiltonian(const ModelParams& params, double h, Sector sector,
                       const Vec& in, Vec& out) {
    const int n = params.n_sites;
    const double bsign = (sector == Sector::antiperiodic) ? -1.0 : 1.0;
    out.assign(in.size(), Complex{0.0, 0.0});
    Vec tmp1(in.size()), tmp2(in.size());
    for (int site = 0; site < n; ++site) {
        const int next = (site + 1) % n;
        const double s = (site == n - 1) ? bsign : 1.0;
        // -s/2 (a+_site a_next + a+_next a_site)
        apply_annihilate(in, tmp1, next);
        apply_create(tmp1, tmp2, site);
        for (std::size_t b = 0; b < in.size(); ++b) out[b] += -0.5 * s * tmp2[b];
        apply_annihilate(in, tmp1, site);
        apply_create(tmp1, tmp2, next);
        for (std::size_t b = 0; b < in.size(); ++b) out[b] += -0.5 * s * tmp2[b];
        // -s delta/2 (a+_site a+_next + a_next a_site)
        apply_create(in, tmp1, next);
        apply_create(tmp1, tmp2, site);
        for (std::size_t b = 0; b < in.size(); ++b) {
            out[b] += -0.5 * s * params.delta * tmp2[b];
        }
        apply_annihilate(in, tmp1, site);
        apply_annihilate(tmp1, tmp2, next);
        for (std::size_t b = 0; b < in.size(); ++b) {
            out[b] += -0.5 * s * params.delta * tmp2[b];
        }
    }
    for (unsigned b = 0; b < in.size(); ++b) {
        out[b] += -h * (static_cast<double>(std::popcount(b)) -
                        0.5 * static_cast<double>(n)) *
                  in[b];
    }
}

Eigen::MatrixXd dense_hamiltonian(const ModelParams& params, double h,
                                  Sector sector) {
    const int dim = check_size(params.n_sites);
    Eigen::MatrixXd ham(dim, dim);
    Vec unit(static_cast<std::size_t>(dim));
    Vec col(static_cast<std::size_t>(dim));
    for (int c = 0; c < dim; ++c) {
        std::fill(unit.begin(), unit.end(), Complex{0.0, 0.0});
        unit[static_cast<std::size_t>(c)] = 1.0;
        apply_hamiltonian(params, h, sector, unit, col);
        for (int r = 0; r < dim; ++r) {
            ham(r, c) = col[static_cast<std::size_t>(r)].real();
        }
    }
    return ham;
}

// a+_k = (1/sqrt N) sum_n e^{-ikn} a+_n, sites 1..N
void apply_create_momentum(const ModelParams& params, const Vec& in, Vec& out,
                           double k) {
    const int n = params.n_sites;
    out.assign(in.size(), Complex{0.0, 0.0});
    Vec tmp(in.size());
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (int site = 0; site < n; ++site) {
        apply_create(in, tmp, site);
        const double arg = -k * static_cast<double>(site + 1);
        const Complex phase = norm * Complex{std::cos(arg), std::sin(arg)};
        for (std::size_t b = 0; b < in.size(); ++b) out[b] += phase * tmp[b];
    }
}

// Bogoliubov vacuum of H(h) in the given sector, used as the tie-break
// reference for degenerate ground spaces. Paired modes contribute
// cos(tt) + i sin(tt) a+_k a+_{-k} with 2 tt = atan2(-B, -A); an unpaired
// mode (k = 0 or pi) is occupied iff A_k >= 0 (at A = 0 the occupied choice
// matches the theta = 0 kernel convention).
Vec bogoliubov_vacuum(const ModelParams& params, double h, Sector sector) {
    const int dim = check_size(params.n_sites);
    Vec psi(static_cast<std::size_t>(dim), Complex{0.0, 0.0});
    psi[0] = 1.0;
    const MomentumGrid grid = momentum_grid(params, sector);
    const BogoliubovFrame frame = bogoliubov_frame(params, h, grid);
    Vec tmp1(psi.size()), tmp2(psi.size());
    for (const BogoliubovMode& mode : frame.modes) {
        if (mode.sin_k == 0.0) {
            // unpaired k = 0 or k = pi
            if (mode.a_coeff >= 0.0) {
                apply_create_momentum(params, psi, tmp1, mode.k);
                psi = tmp1;
            }
            continue;
        }
        if (mode.k < 0.0) continue;  // handle each (k, -k) pair once
        const double tt = 0.5 * std::atan2(-mode.b_coeff, -mode.a_coeff);
        apply_create_momentum(params, psi, tmp1, -mode.k);
        apply_create_momentum(params, tmp1, tmp2, mode.k);
        const Complex c{std::cos(tt), 0.0};
        const Complex is{0.0, std::sin(tt)};
        for (std::size_t b = 0; b < psi.size(); ++b) {
            psi[b] = c * psi[b] + is * tmp2[b];
        }
    }
    double norm = 0.0;
    for (const Complex& v : psi) norm += std::norm(v);
    norm = std::sqrt(norm);
    for (Complex& v : psi) v /= norm;
    return psi;
}

Complex inner(const Vec& a, const Vec& b) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

}  // namespace

FockState fock_ground_state(const ModelParams& params, double h,
                            Sector sector) {
    const int dim = check_size(params.n_sites);
    const Eigen::MatrixXd ham = dense_hamiltonian(params, h, sector);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(ham);
    const Eigen::VectorXd& evals = solver.eigenvalues();
    const Eigen::MatrixXd& evecs = solver.eigenvectors();

    const double e0 = evals(0);
    const double tol = 1e-10 * std::max(1.0, std::abs(e0));
    int degeneracy = 1;
    while (degeneracy < dim && evals(degeneracy) < e0 + tol) ++degeneracy;

    FockState state{params, h, sector, Vec(static_cast<std::size_t>(dim))};
    if (degeneracy == 1) {
        for (int b = 0; b < dim; ++b) {
            state.amplitudes[static_cast<std::size_t>(b)] = evecs(b, 0);
        }
        return state;
    }
    // degenerate ground space: project the Bogoliubov vacuum onto it
    const Vec bogo = bogoliubov_vacuum(params, h, sector);
    Vec proj(static_cast<std::size_t>(dim), Complex{0.0, 0.0});
    for (int c = 0; c < degeneracy; ++c) {
        Complex coef{0.0, 0.0};
        for (int b = 0; b < dim; ++b) {
            coef += evecs(b, c) * bogo[static_cast<std::size_t>(b)];
        }
        for (int b = 0; b < dim; ++b) {
            proj[static_cast<std::size_t>(b)] += coef * evecs(b, c);
        }
    }
    double norm = 0.0;
    for (const Complex& v : proj) norm += std::norm(v);
    norm = std::sqrt(norm);
    if (norm < 1e-8) {
        throw Error("Bogoliubov vacuum has no weight in the degenerate ground "
                    "space; tie-break failed");
    }
    for (Complex& v : proj) v /= norm;
    state.amplitudes = std::move(proj);
    return state;
}

double fock_ground_energy(const ModelParams& params, double h, Sector sector) {
    const Eigen::MatrixXd ham = dense_hamiltonian(params, h, sector);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        ham, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

FockState fock_evolve(const FockState& state, double h2, double t) {
    const int dim = check_size(state.params.n_sites);
    const Eigen::MatrixXd ham =
        dense_hamiltonian(state.params, h2, state.sector);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(ham);
    const Eigen::VectorXd& evals = solver.eigenvalues();
    const Eigen::MatrixXd& evecs = solver.eigenvectors();

    Eigen::VectorXd re(dim), im(dim);
    for (int b = 0; b < dim; ++b) {
        re(b) = state.amplitudes[static_cast<std::size_t>(b)].real();
        im(b) = state.amplitudes[static_cast<std::size_t>(b)].imag();
    }
    Eigen::VectorXcd coef =
        (evecs.transpose() * re).cast<Complex>() +
        Complex{0.0, 1.0} * (evecs.transpose() * im).cast<Complex>();
    for (int c = 0; c < dim; ++c) {
        coef(c) *= std::exp(Complex{0.0, -evals(c) * t});
    }
    const Eigen::VectorXcd psi =
        (evecs * coef.real()).cast<Complex>() +
        Complex{0.0, 1.0} * (evecs * coef.imag()).cast<Complex>();

    FockState out = state;
    out.field = h2;
    for (int b = 0; b < dim; ++b) {
        out.amplitudes[static_cast<std::size_t>(b)] = psi(b);
    }
    return out;
}

std::complex<double> fock_string_expectation(
    const FockState& state, const std::vector<MajoranaOp>& ops) {
    Vec work = state.amplitudes;
    Vec tmp(work.size());
    // apply right-to-left
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        apply_majorana(work, tmp, it->site - 1, it->kind);
        work.swap(tmp);
    }
    return inner(state.amplitudes, work);
}

std::complex<double> fock_density(const FockState& state, int r) {
    Vec tmp1(state.amplitudes.size()), tmp2(state.amplitudes.size());
    apply_annihilate(state.amplitudes, tmp1, r);
    apply_create(tmp1, tmp2, 0);
    return inner(state.amplitudes, tmp2);
}

std::complex<double> fock_spin_correlator(const FockState& state, char alpha,
                                          char beta, int n) {
    Vec tmp1, tmp2;
    apply_spin(state.amplitudes, tmp1, n, beta);  // site 1+n, 0-based index n
    apply_spin(tmp1, tmp2, 0, alpha);
    return inner(state.amplitudes, tmp2);
}

CollectiveMoments fock_collective_moments(const FockState& state) {
    const int n = state.params.n_sites;
    const std::size_t dim = state.amplitudes.size();
    Vec jx(dim, Complex{0.0, 0.0}), jy(dim, Complex{0.0, 0.0}),
        jz(dim, Complex{0.0, 0.0}), tmp;
    for (int site = 0; site < n; ++site) {
        apply_spin(state.amplitudes, tmp, site, 'x');
        for (std::size_t b = 0; b < dim; ++b) jx[b] += tmp[b];
        apply_spin(state.amplitudes, tmp, site, 'y');
        for (std::size_t b = 0; b < dim; ++b) jy[b] += tmp[b];
        apply_spin(state.amplitudes, tmp, site, 'z');
        for (std::size_t b = 0; b < dim; ++b) jz[b] += tmp[b];
    }
    CollectiveMoments m;
    m.jx2 = inner(jx, jx).real();
    m.jy2 = inner(jy, jy).real();
    m.jxy_sym = 2.0 * inner(jx, jy).real();
    m.jz = inner(state.amplitudes, jz).real();
    m.jz2 = inner(jz, jz).real();
    return m;
}

double fock_xi_squared(const FockState& state) {
    const CollectiveMoments m = fock_collective_moments(state);
    const double n = static_cast<double>(state.params.n_sites);
    return (2.0 / n) *
           (m.jx2 + m.jy2 - std::hypot(m.jx2 - m.jy2, m.jxy_sym));
}

double fock_variance_jz(const FockState& state) {
    const CollectiveMoments m = fock_collective_moments(state);
    return m.jz2 - m.jz * m.jz;
}

double fock_magnetization(const FockState& state) {
    const CollectiveMoments m = fock_collective_moments(state);
    return m.jz / static_cast<double>(state.params.n_sites);
}

double fock_parity(const FockState& state) {
    double acc = 0.0;
    for (unsigned b = 0; b < state.amplitudes.size(); ++b) {
        const double sign = (std::popcount(b) & 1u) ? -1.0 : 1.0;
        acc += sign * std::norm(state.amplitudes[b]);
    }
    return acc;
}

double fock_energy(const FockState& state, double h) {
    Vec out(state.amplitudes.size());
    apply_hamiltonian(state.params, h, state.sector, state.amplitudes, out);
    return inner(state.amplitudes, out).real();
}

OracleComparison compare_against_oracle(const ModelParams& params, double h1,
                                        double h2, double t, Sector sector) {
    const FockState evolved =
        fock_evolve(fock_ground_state(params, h1, sector), h2, t);

    const QuenchSpec quench = make_quench(params, h1, h2, sector);
    const ContractionKernel kernel = kernel_at(quench, t);
    const CorrelatorSet corrs = correlators_at(kernel);

    OracleComparison cmp;
    const int n = params.n_sites;

    // kernel entries
    for (int r = 0; r < n; ++r) {
        const std::vector<MajoranaOp> aa_ops{{1, MajoranaKind::A},
                                             {1 + r, MajoranaKind::A}};
        const std::vector<MajoranaOp> ab_ops{{1, MajoranaKind::A},
                                             {1 + r, MajoranaKind::B}};
        const std::vector<MajoranaOp> ba_ops{{1, MajoranaKind::B},
                                             {1 + r, MajoranaKind::A}};
        if (r > 0) {
            cmp.worst_kernel = std::max(
                cmp.worst_kernel,
                std::abs(fock_string_expectation(evolved, aa_ops) -
                         kernel.aa[static_cast<std::size_t>(r)]));
        }
        cmp.worst_kernel =
            std::max(cmp.worst_kernel,
                     std::abs(fock_string_expectation(evolved, ab_ops) -
                              kernel.ab[static_cast<std::size_t>(r)]));
        cmp.worst_kernel =
            std::max(cmp.worst_kernel,
                     std::abs(fock_string_expectation(evolved, ba_ops) -
                              kernel.ba[static_cast<std::size_t>(r)]));
        cmp.worst_kernel = std::max(
            cmp.worst_kernel,
            std::abs(fock_density(evolved, r) -
                     kernel.density[static_cast<std::size_t>(r)]));
    }

    // all five correlator families
    for (int sep = 1; sep < n; ++sep) {
        const std::size_t i = static_cast<std::size_t>(sep - 1);
        cmp.worst_correlator =
            std::max(cmp.worst_correlator,
                     std::abs(fock_spin_correlator(evolved, 'x', 'x', sep) -
                              corrs.gxx[i]));
        cmp.worst_correlator =
            std::max(cmp.worst_correlator,
                     std::abs(fock_spin_correlator(evolved, 'y', 'y', sep) -
                              corrs.gyy[i]));
        cmp.worst_correlator =
            std::max(cmp.worst_correlator,
                     std::abs(fock_spin_correlator(evolved, 'x', 'y', sep) -
                              corrs.gxy[i]));
        cmp.worst_correlator =
            std::max(cmp.worst_correlator,
                     std::abs(fock_spin_correlator(evolved, 'y', 'x', sep) -
                              corrs.gyx[i]));
        cmp.worst_correlator =
            std::max(cmp.worst_correlator,
                     std::abs(fock_spin_correlator(evolved, 'z', 'z', sep) -
                              corrs.gzz[i]));
    }

    // observables; the closed forms assume exact spin-ring states, which the
    // fermion state is iff its parity is even, so compare the collective
    // J-moment route only then (always true for even N, antiperiodic sector)
    const double xi2 = xi_squared(corrs, n);
    const double nu = variance_jz(kernel, corrs, n);
    const double mz = magnetization(kernel);
    cmp.worst_observable =
        std::max(cmp.worst_observable, std::abs(fock_magnetization(evolved) - mz));
    if (fock_parity(evolved) > 0.0) {
        cmp.worst_observable = std::max(cmp.worst_observable,
                                        std::abs(fock_xi_squared(evolved) - xi2));
        cmp.worst_observable = std::max(
            cmp.worst_observable, std::abs(fock_variance_jz(evolved) - nu));
    } else {
        // spin-correlator route: same closed form on exact G_n sums
        double sxx = 0.0, syy = 0.0, sxy = 0.0, syx = 0.0, szz = 0.0;
        for (int sep = 1; sep < n; ++sep) {
            sxx += fock_spin_correlator(evolved, 'x', 'x', sep).real();
            syy += fock_spin_correlator(evolved, 'y', 'y', sep).real();
            sxy += fock_spin_correlator(evolved, 'x', 'y', sep).real();
            syx += fock_spin_correlator(evolved, 'y', 'x', sep).real();
            szz += fock_spin_correlator(evolved, 'z', 'z', sep).real();
        }
        const double oxi2 =
            1.0 + 2.0 * (sxx + syy) -
            2.0 * std::hypot(sxx - syy, sxy + syx);
        const double nn = static_cast<double>(n);
        const double omz = fock_magnetization(evolved);
        const double onu = nn * (0.25 + szz) - (nn * omz) * (nn * omz);
        cmp.worst_observable =
            std::max(cmp.worst_observable, std::abs(oxi2 - xi2));
        cmp.worst_observable =
            std::max(cmp.worst_observable, std::abs(onu - nu));
    }

    cmp.worst = std::max({cmp.worst_kernel, cmp.worst_correlator,
                          cmp.worst_observable});
    return cmp;
}

}  // namespace oracle
}  // namespace squeezechain
