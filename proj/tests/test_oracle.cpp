#include <doctest.h>

#include <cmath>
#include <complex>

#include "squeezechain/oracle.hpp"

using namespace squeezechain;
using oracle::FockState;
using oracle::MajoranaKind;
using oracle::MajoranaOp;

namespace {

double grid_ground_energy(const ModelParams& p, double h, Sector s) {
    const BogoliubovFrame f = bogoliubov_frame(p, h, momentum_grid(p, s));
    double acc = 0.0;
    for (const auto& m : f.modes) acc += m.energy;
    return -0.5 * acc;
}

double state_norm(const FockState& s) {
    double acc = 0.0;
    for (const auto& v : s.amplitudes) acc += std::norm(v);
    return std::sqrt(acc);
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("ground energy equals -1/2 sum of quasiparticle energies") {
    for (Sector s : {Sector::antiperiodic, Sector::periodic}) {
        const ModelParams p4(4, 0.8);
        CHECK(oracle::fock_ground_energy(p4, 0.5, s) ==
              doctest::Approx(grid_ground_energy(p4, 0.5, s)).epsilon(1e-10));
        const ModelParams p7(7, 0.6);
        CHECK(oracle::fock_ground_energy(p7, 1.3, s) ==
              doctest::Approx(grid_ground_energy(p7, 1.3, s)).epsilon(1e-10));
    }
}

TEST_CASE("degenerate zero mode at h = 1 still matches the grid energy") {
    const ModelParams p(8, 0.8);
    CHECK(oracle::fock_ground_energy(p, 1.0, Sector::periodic) ==
          doctest::Approx(grid_ground_energy(p, 1.0, Sector::periodic))
              .epsilon(1e-10));
    const ModelParams p7(7, 0.8);
    CHECK(oracle::fock_ground_energy(p7, 1.0, Sector::antiperiodic) ==
          doctest::Approx(grid_ground_energy(p7, 1.0, Sector::antiperiodic))
              .epsilon(1e-10));
}

TEST_CASE("strong field polarizes the chain") {
    const ModelParams p(2, 0.8);
    // N = 2 periodic grid {0, pi}: eps = h + 1, h - 1, so E0 = -h = -h N/2
    CHECK(oracle::fock_ground_energy(p, 50.0, Sector::periodic) ==
          doctest::Approx(-50.0).epsilon(1e-12));
    const FockState gs = oracle::fock_ground_state(p, 50.0);
    CHECK(oracle::fock_magnetization(gs) == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("size cap") {
    CHECK_THROWS_AS(oracle::fock_ground_state(ModelParams(12, 0.8), 1.0),
                    SizeTooLargeError);
}

TEST_CASE("operator identities") {
    const FockState gs = oracle::fock_ground_state(ModelParams(6, 0.8), 0.7);
    // A_l A_l = 1 and B_l B_l = -1 as operators
    const std::complex<double> aa = oracle::fock_string_expectation(
        gs, {{3, MajoranaKind::A}, {3, MajoranaKind::A}});
    CHECK(std::abs(aa - std::complex<double>{1.0, 0.0}) < 1e-12);
    const std::complex<double> bb = oracle::fock_string_expectation(
        gs, {{3, MajoranaKind::B}, {3, MajoranaKind::B}});
    CHECK(std::abs(bb + std::complex<double>{1.0, 0.0}) < 1e-12);
}

TEST_CASE("evolution preserves norm and energy") {
    const ModelParams p(8, 0.8);
    const FockState gs = oracle::fock_ground_state(p, 0.5);
    const FockState evolved = oracle::fock_evolve(gs, 1.5, 2.3);
    CHECK(state_norm(evolved) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(oracle::fock_energy(evolved, 1.5) ==
          doctest::Approx(oracle::fock_energy(gs, 1.5)).epsilon(1e-12));
}

TEST_CASE("null-quench measurements are stationary") {
    const ModelParams p(6, 0.8);
    const FockState gs = oracle::fock_ground_state(p, 0.8);
    const FockState later = oracle::fock_evolve(gs, 0.8, 7.3);
    const std::vector<MajoranaOp> ops{{1, MajoranaKind::A},
                                      {3, MajoranaKind::B}};
    CHECK(std::abs(oracle::fock_string_expectation(gs, ops) -
                   oracle::fock_string_expectation(later, ops)) < 1e-12);
    CHECK(oracle::fock_xi_squared(later) ==
          doctest::Approx(oracle::fock_xi_squared(gs)).epsilon(1e-12));
}

TEST_CASE("ground-state parity by sector") {
    const ModelParams p(6, 0.8);
    // antiperiodic sector: even parity (the spin ring's true ground sector)
    CHECK(oracle::fock_parity(oracle::fock_ground_state(
              p, 0.5, Sector::antiperiodic)) == doctest::Approx(1.0));
    CHECK(oracle::fock_parity(oracle::fock_ground_state(
              p, 1.5, Sector::antiperiodic)) == doctest::Approx(1.0));
    // periodic sector: k = 0 occupied, odd parity below the transition
    CHECK(oracle::fock_parity(oracle::fock_ground_state(
              p, 0.5, Sector::periodic)) == doctest::Approx(-1.0));
}

TEST_CASE("production pipeline matches the oracle in both sectors") {
    const ModelParams p(8, 0.8);
    for (Sector s : {Sector::antiperiodic, Sector::periodic}) {
        const oracle::OracleComparison cmp =
            oracle::compare_against_oracle(p, 0.5, 1.5, 0.7, s);
        CHECK(cmp.worst < 1e-10);
    }
    // critical pre- and post-quench fields exercise the degenerate-mode and
    // tie-break conventions
    for (Sector s : {Sector::antiperiodic, Sector::periodic}) {
        const oracle::OracleComparison cmp =
            oracle::compare_against_oracle(p, 1.0, 1.0, 0.5, s);
        CHECK(cmp.worst < 1e-10);
    }
    const ModelParams p7(7, 0.8);
    CHECK(oracle::compare_against_oracle(p7, 1.0, 0.6, 0.9).worst < 1e-10);
    CHECK(oracle::compare_against_oracle(p7, 0.5, 1.5, 0.7).worst < 1e-10);
}

}  // TEST_SUITE
