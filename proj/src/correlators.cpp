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

#include "squeezechain/correlators.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace squeezechain {

namespace {

// The 2n-operator string as (site, is_b) pairs, sites 1-based.
// xx: B1 A2 B2 ... An Bn A_{n+1}; xy ends with B_{n+1} instead.
// yy: A1 B2 A2 ... Bn An B_{n+1}; yx ends with A_{n+1} instead.
void build_string(int n, StringKind kind, std::vector<int>& site,
                  std::vector<bool>& is_b) {
    const bool starts_b = (kind == StringKind::xx || kind == StringKind::xy);
    const bool ends_b = (kind == StringKind::yy || kind == StringKind::xy);
    site.clear();
    is_b.clear();
    site.push_back(1);
    is_b.push_back(starts_b);
    for (int j = 2; j <= n; ++j) {
        // interior pairs: (A_j B_j) for x-leading strings, (B_j A_j) for y
        site.push_back(j);
        is_b.push_back(!starts_b);
        site.push_back(j);
        is_b.push_back(starts_b);
    }
    site.push_back(n + 1);
    is_b.push_back(ends_b);
}

void check_separation(const ContractionKernel& kernel, int n) {
    if (n < 1 || n > kernel.n_sites - 1) {
        throw SeparationOutOfRangeError(
            "separation n must be in [1, N-1], got n = " + std::to_string(n) +
            " for N = " + std::to_string(kernel.n_sites));
    }
}

}  // namespace

SkewMatrix assemble_string_matrix(const ContractionKernel& kernel, int n,
                                  StringKind kind) {
    check_separation(kernel, n);
    std::vector<int> site;
    std::vector<bool> is_b;
    build_string(n, kind, site, is_b);
    const int dim = 2 * n;
    SkewMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            const int r = site[static_cast<std::size_t>(j)] -
                          site[static_cast<std::size_t>(i)];
            std::complex<double> v;
            if (is_b[static_cast<std::size_t>(i)] ==
                is_b[static_cast<std::size_t>(j)]) {
                v = kernel.aa[static_cast<std::size_t>(r)];  // r >= 1 here
            } else if (!is_b[static_cast<std::size_t>(i)]) {
                v = kernel.ab[static_cast<std::size_t>(r)];
            } else {
                v = kernel.ba[static_cast<std::size_t>(r)];
            }
            m.set_upper(i, j, v);
        }
    }
    return m;
}

double gzz(const ContractionKernel& kernel, int n) {
    check_separation(kernel, n);
    const double ab0 = kernel.ab[0];
    const std::complex<double> aan = kernel.aa[static_cast<std::size_t>(n)];
    const double abn = kernel.ab[static_cast<std::size_t>(n)];
    const double ban = kernel.ba[static_cast<std::size_t>(n)];
    // pf over (A1, B1, A_{n+1}, B_{n+1}); aa is purely imaginary so -aa^2 is
    // +Im(aa)^2
    return 0.25 * (ab0 * ab0 + aan.imag() * aan.imag() + abn * ban);
}

double CorrelatorSet::sum_xx() const {
    return std::accumulate(gxx.begin(), gxx.end(), 0.0);
}
double CorrelatorSet::sum_yy() const {
    return std::accumulate(gyy.begin(), gyy.end(), 0.0);
}
double CorrelatorSet::sum_xy() const {
    return std::accumulate(gxy.begin(), gxy.end(), 0.0);
}
double CorrelatorSet::sum_yx() const {
    return std::accumulate(gyx.begin(), gyx.end(), 0.0);
}
double CorrelatorSet::sum_zz() const {
    return std::accumulate(gzz.begin(), gzz.end(), 0.0);
}

namespace {

constexpr double kResidueTolerance = 1e-9;

// Complex route: D_n^{ab} * pf(complex string matrix), residue-checked.
double correlator_complex(const ContractionKernel& kernel, int n,
                          StringKind kind) {
    const SkewMatrix m = assemble_string_matrix(kernel, n, kind);
    const std::complex<double> pf = pfaffian(m);
    std::complex<double> pref;
    const double quarter = 0.25;
    const double alt = (n % 2 == 0) ? 1.0 : -1.0;
    switch (kind) {
        case StringKind::xx: pref = {quarter, 0.0}; break;
        case StringKind::yy: pref = {alt * quarter, 0.0}; break;
        case StringKind::xy: pref = {0.0, -quarter}; break;
        case StringKind::yx: pref = {0.0, alt * quarter}; break;
    }
    const std::complex<double> g = pref * pf;
    if (std::abs(g.imag()) >= kResidueTolerance) {
        throw ImaginaryResidueError(
            "correlator imaginary residue " + std::to_string(g.imag()) +
            " at n = " + std::to_string(n));
    }
    return g.real();
}

// Phase-reduced route: with A -> e^{i pi/4} A and B -> e^{-i pi/4} B every
// string-matrix entry is real (A-A entries become -Im aa, B-B entries +Im aa,
// A-B and B-A stay as ab/ba), and
//   pf(M) = pf(M_real) * e^{-i pi/4 (n_A - n_B)}.
// Folding the phase into D_n gives real prefactors:
//   gxx = pf_r/4, gyy = (-1)^n pf_r/4, gxy = pf_r/4, gyx = (-1)^n pf_r/4.
double correlator_real(const ContractionKernel& kernel,
                       std::vector<double>& work, int n, StringKind kind) {
    std::vector<int> site;
    std::vector<bool> is_b;
    build_string(n, kind, site, is_b);
    const int dim = 2 * n;
    work.assign(static_cast<std::size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            const int r = site[static_cast<std::size_t>(j)] -
                          site[static_cast<std::size_t>(i)];
            double v;
            const bool bi = is_b[static_cast<std::size_t>(i)];
            const bool bj = is_b[static_cast<std::size_t>(j)];
            if (bi == bj) {
                const double im = kernel.aa[static_cast<std::size_t>(r)].imag();
                v = bi ? im : -im;
            } else if (!bi) {
                v = kernel.ab[static_cast<std::size_t>(r)];
            } else {
                v = kernel.ba[static_cast<std::size_t>(r)];
            }
            work[static_cast<std::size_t>(i) * dim + j] = v;
            work[static_cast<std::size_t>(j) * dim + i] = -v;
        }
    }
    const double pf = detail::pfaffian_inplace(work.data(), dim);
    const double alt = (n % 2 == 0) ? 1.0 : -1.0;
    switch (kind) {
        case StringKind::xx: return 0.25 * pf;
        case StringKind::yy: return alt * 0.25 * pf;
        case StringKind::xy: return 0.25 * pf;
        case StringKind::yx: return alt * 0.25 * pf;
    }
    return 0.0;  // unreachable
}

}  // namespace

CorrelatorSet correlators_at(const ContractionKernel& kernel,
                             CorrelatorRoute route) {
    const int n_max = kernel.n_sites - 1;
    CorrelatorSet set;
    set.n_sites = kernel.n_sites;
    set.gxx.resize(static_cast<std::size_t>(n_max));
    set.gyy.resize(static_cast<std::size_t>(n_max));
    set.gxy.resize(static_cast<std::size_t>(n_max));
    set.gyx.resize(static_cast<std::size_t>(n_max));
    set.gzz.resize(static_cast<std::size_t>(n_max));

    std::vector<double> work;
    for (int n = 1; n <= n_max; ++n) {
        const std::size_t i = static_cast<std::size_t>(n - 1);
        if (route == CorrelatorRoute::complex_pfaffian) {
            set.gxx[i] = correlator_complex(kernel, n, StringKind::xx);
            set.gyy[i] = correlator_complex(kernel, n, StringKind::yy);
            set.gxy[i] = correlator_complex(kernel, n, StringKind::xy);
            set.gyx[i] = correlator_complex(kernel, n, StringKind::yx);
        } else {
            set.gxx[i] = correlator_real(kernel, work, n, StringKind::xx);
            set.gyy[i] = correlator_real(kernel, work, n, StringKind::yy);
            set.gxy[i] = correlator_real(kernel, work, n, StringKind::xy);
            set.gyx[i] = correlator_real(kernel, work, n, StringKind::yx);
        }
        set.gzz[i] = gzz(kernel, n);
    }
    return set;
}

}  // namespace squeezechain
