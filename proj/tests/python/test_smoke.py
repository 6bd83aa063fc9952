import math

import pytest

import squeezechain as sq


def test_version():
    assert sq.__version__


def test_dispersion_values():
    assert sq.dispersion(0.8, 2.0, 0.0) == pytest.approx(3.0)
    assert sq.dispersion(0.8, 0.5, math.pi / 2) == pytest.approx(
        math.sqrt(0.89), abs=1e-14
    )
    assert sq.dispersion(0.8, 1.0, math.pi) == pytest.approx(0.0, abs=1e-12)


def test_bogoliubov_angle_branch():
    assert sq.bogoliubov_angle(0.8, 2.0, 0.0) == 0.0
    assert sq.bogoliubov_angle(0.8, 0.5, math.pi) == pytest.approx(math.pi / 2)
    with pytest.raises(RuntimeError):
        sq.bogoliubov_angle(0.8, 1.0, math.pi)


def test_momentum_grid():
    ks = sq.momentum_grid(4, 0.8, sector="periodic")
    assert len(ks) == 4
    assert math.pi in ks
    assert sum(ks) == pytest.approx(math.pi)
    ns = sq.momentum_grid(4, 0.8, sector="antiperiodic")
    assert sum(ns) == pytest.approx(0.0)
    with pytest.raises(ValueError):
        sq.momentum_grid(4, 0.8, sector="moebius")


def test_max_group_velocity_critical():
    assert sq.max_group_velocity(0.8, 1.0) == 0.8


def test_pfaffian():
    a = 1.5 - 0.25j
    assert sq.pfaffian([[0, a], [-a, 0]]) == a
    m = [
        [0, 1, 2, 4],
        [-1, 0, 8, 16],
        [-2, -8, 0, 32],
        [-4, -16, -32, 0],
    ]
    assert sq.pfaffian(m) == pytest.approx(1 * 32 - 2 * 16 + 4 * 8)


def test_ground_state_sweep_crossing():
    out = sq.ground_state_sweep(40, 0.8, [0.4, 0.6, 0.8])
    xi2 = out["xi2"]
    assert xi2[0] > 1.0
    assert xi2[1] == pytest.approx(1.0, abs=0.02)
    assert xi2[2] < 1.0


def test_null_quench_trajectory_is_constant():
    out = sq.quench_trajectory(24, 0.8, 0.8, 0.8, [0.0, 1.0, 2.0, 5.0])
    xi2 = out["xi2"]
    assert max(xi2) - min(xi2) < 1e-10


def test_oracle_agreement_small_chain():
    assert sq.oracle_max_mismatch(6, 0.8, 0.5, 1.5, 0.7) < 1e-9
