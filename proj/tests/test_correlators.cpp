#include <doctest.h>

#include <cmath>
#include <random>

#include "squeezechain/correlators.hpp"
#include "squeezechain/oracle.hpp"

using namespace squeezechain;

TEST_SUITE("correlators") {

TEST_CASE("n = 1 closed forms") {
    const ModelParams p(10, 0.8);
    const ContractionKernel k = kernel_at(make_quench(p, 0.5, 1.5), 0.7);
    const CorrelatorSet c = correlators_at(k);
    CHECK(c.gxx[0] == doctest::Approx(0.25 * k.ba[1]).epsilon(1e-13));
    // G_1^xy = (-i/4) <B1 B2> = (-i/4) aa[1], real since aa is imaginary
    CHECK(c.gxy[0] == doctest::Approx(0.25 * k.aa[1].imag()).epsilon(1e-13));
    // G_1^zz = 1/4 [ab[0]^2 - aa[1]^2 + ab[1] ba[1]]
    CHECK(c.gzz[0] ==
          doctest::Approx(0.25 * (k.ab[0] * k.ab[0] +
                                  k.aa[1].imag() * k.aa[1].imag() +
                                  k.ab[1] * k.ba[1]))
              .epsilon(1e-13));
    CHECK(gzz(k, 1) == c.gzz[0]);
}

TEST_CASE("separation bounds") {
    const ModelParams p(6, 0.8);
    const ContractionKernel k = kernel_at(make_quench(p, 0.5, 1.5), 0.1);
    CHECK_THROWS_AS(assemble_string_matrix(k, 0, StringKind::xx),
                    SeparationOutOfRangeError);
    CHECK_THROWS_AS(assemble_string_matrix(k, 6, StringKind::yy),
                    SeparationOutOfRangeError);
    CHECK_THROWS_AS(gzz(k, 0), SeparationOutOfRangeError);
    CHECK(assemble_string_matrix(k, 5, StringKind::xy).dim() == 10);
}

TEST_CASE("string matrix matches the spec orderings at n = 1") {
    const ModelParams p(8, 0.8);
    const ContractionKernel k = kernel_at(make_quench(p, 0.4, 1.2), 0.3);
    const SkewMatrix xx = assemble_string_matrix(k, 1, StringKind::xx);
    CHECK(xx(0, 1) == std::complex<double>{k.ba[1], 0.0});  // <B1 A2>
    const SkewMatrix xy = assemble_string_matrix(k, 1, StringKind::xy);
    CHECK(xy(0, 1) == k.aa[1]);  // <B1 B2>
    const SkewMatrix yy = assemble_string_matrix(k, 1, StringKind::yy);
    CHECK(yy(0, 1) == std::complex<double>{k.ab[1], 0.0});  // <A1 B2>
    const SkewMatrix yx = assemble_string_matrix(k, 1, StringKind::yx);
    CHECK(yx(0, 1) == k.aa[1]);  // <A1 A2>
}

TEST_CASE("complex and phase-reduced routes agree") {
    const ModelParams p(24, 0.8);
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> fd(0.0, 2.0);
    for (double t : {0.0, 0.9, 2.4}) {
        const QuenchSpec q = make_quench(p, fd(rng), fd(rng));
        const ContractionKernel k = kernel_at(q, t);
        const CorrelatorSet fast = correlators_at(k, CorrelatorRoute::phase_reduced);
        const CorrelatorSet ref =
            correlators_at(k, CorrelatorRoute::complex_pfaffian);
        for (int n = 1; n < p.n_sites; ++n) {
            const std::size_t i = static_cast<std::size_t>(n - 1);
            CHECK(fast.gxx[i] == doctest::Approx(ref.gxx[i]).epsilon(1e-12));
            CHECK(fast.gyy[i] == doctest::Approx(ref.gyy[i]).epsilon(1e-12));
            CHECK(fast.gxy[i] == doctest::Approx(ref.gxy[i]).epsilon(1e-12));
            CHECK(fast.gyx[i] == doctest::Approx(ref.gyx[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("equilibrium: off-diagonal correlators vanish") {
    const ModelParams p(16, 0.8);
    const ContractionKernel k = kernel_at(make_quench(p, 0.8, 0.8), 0.0);
    const CorrelatorSet c = correlators_at(k);
    for (int n = 1; n < p.n_sites; ++n) {
        CHECK(std::abs(c.gxy[static_cast<std::size_t>(n - 1)]) < 1e-12);
        CHECK(std::abs(c.gyx[static_cast<std::size_t>(n - 1)]) < 1e-12);
    }
}

TEST_CASE("t = 0 set equals the pre-quench ground-state set") {
    const ModelParams p(12, 0.8);
    const CorrelatorSet quenched =
        correlators_at(kernel_at(make_quench(p, 0.5, 1.7), 0.0));
    const CorrelatorSet ground =
        correlators_at(kernel_at(make_quench(p, 0.5, 0.5), 0.0));
    for (int n = 1; n < p.n_sites; ++n) {
        const std::size_t i = static_cast<std::size_t>(n - 1);
        CHECK(quenched.gxx[i] == doctest::Approx(ground.gxx[i]).epsilon(1e-12));
        CHECK(quenched.gyy[i] == doctest::Approx(ground.gyy[i]).epsilon(1e-12));
        CHECK(quenched.gzz[i] == doctest::Approx(ground.gzz[i]).epsilon(1e-12));
    }
}

TEST_CASE("bounds and zz sum rule") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> fd(0.0, 2.0);
    std::uniform_real_distribution<double> td(0.0, 4.0);
    for (int trial = 0; trial < 6; ++trial) {
        const ModelParams p(20, 0.4 + 0.1 * trial);
        const ContractionKernel k =
            kernel_at(make_quench(p, fd(rng), fd(rng)), td(rng));
        const CorrelatorSet c = correlators_at(k);
        double sum_zz = 0.0;
        for (int n = 1; n < p.n_sites; ++n) {
            const std::size_t i = static_cast<std::size_t>(n - 1);
            CHECK(std::abs(c.gxx[i]) <= 0.25 + 1e-12);
            CHECK(std::abs(c.gyy[i]) <= 0.25 + 1e-12);
            CHECK(std::abs(c.gxy[i]) <= 0.25 + 1e-12);
            CHECK(std::abs(c.gyx[i]) <= 0.25 + 1e-12);
            CHECK(std::abs(c.gzz[i]) <= 0.25 + 1e-12);
            sum_zz += c.gzz[i];
        }
        const double mz = k.density[0] - 0.5;
        // variance / N must be nonnegative
        CHECK(0.25 + sum_zz - p.n_sites * mz * mz >= -1e-9);
    }
}

TEST_CASE("fully polarized limit") {
    const ModelParams p(12, 0.8);
    const CorrelatorSet c =
        correlators_at(kernel_at(make_quench(p, 50.0, 50.0), 0.0));
    for (int n = 1; n < p.n_sites; ++n) {
        CHECK(c.gzz[static_cast<std::size_t>(n - 1)] ==
              doctest::Approx(0.25).epsilon(1e-3));
    }
}

TEST_CASE("yy string ground-state value against the Fock oracle") {
    // n = 3, null quench at delta = 0.8, h = 0.8, N = 8 (Toeplitz structure)
    const ModelParams p(8, 0.8);
    const ContractionKernel k = kernel_at(make_quench(p, 0.8, 0.8), 0.0);
    const CorrelatorSet c = correlators_at(k);
    const oracle::FockState gs = oracle::fock_ground_state(p, 0.8);
    const double expected = oracle::fock_spin_correlator(gs, 'y', 'y', 3).real();
    CHECK(c.gyy[2] == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("quench correlators match the Fock oracle at N = 8") {
    const ModelParams p(8, 0.8);
    const oracle::OracleComparison cmp =
        oracle::compare_against_oracle(p, 0.5, 1.5, 0.7);
    CHECK(cmp.worst_correlator < 1e-10);
    CHECK(cmp.worst_kernel < 1e-10);
}

}  // TEST_SUITE
