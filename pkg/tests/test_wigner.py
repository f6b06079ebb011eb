"""Spin-s rotation matrices and coupling coefficients against independent
oracles: the angle-based reduced-matrix sum formula and a ladder-operator
construction of the coupling table."""

import cmath
import math
import random

import numpy as np
import pytest

from oracles import ladder_cg_table, little_d
from spinframes import (
    EPS,
    IDENTITY,
    MAX_TWICE_SPIN,
    CGTable,
    TwiceSpin,
    Vec3,
    clebsch_gordan,
    compose,
    exchange_symmetry_sign,
    from_axis_angle,
    m_range,
    wigner_D,
)
from util import rand_quaternion

YHAT = Vec3(0.0, 1.0, 0.0)
ZHAT = Vec3(0.0, 0.0, 1.0)


def test_identity_matrix_spin_half():
    mat = wigner_D(TwiceSpin(1), IDENTITY)
    assert np.allclose(mat.entries, np.eye(2), atol=1e-15)


def test_full_turn_signs():
    q = from_axis_angle(ZHAT, 2.0 * math.pi)
    half = wigner_D(TwiceSpin(1), q)
    assert np.abs(half.entries + np.eye(2)).max() < EPS
    one = wigner_D(TwiceSpin(2), q)
    assert np.abs(one.entries - np.eye(3)).max() < EPS


def test_y_rotation_matches_little_d_oracle():
    for ts in range(0, 7):
        s = TwiceSpin(ts)
        order = [m.twice for m in m_range(s)]
        for beta in (0.3, 1.1, 2.5, -0.7, 3.9):
            mat = wigner_D(s, from_axis_angle(YHAT, beta))
            for i, tmp in enumerate(order):
                for j, tm in enumerate(order):
                    got = mat.entries[i, j]
                    assert abs(got.imag) < EPS
                    assert abs(got.real - little_d(ts, tmp, tm, beta)) < EPS


def test_z_rotation_phases():
    # diagonal exp(-i m alpha): the phase convention everything else rests on
    for ts in (1, 2, 3, 4):
        s = TwiceSpin(ts)
        alpha = 0.9
        mat = wigner_D(s, from_axis_angle(ZHAT, alpha))
        for i, m in enumerate(m_range(s)):
            want = cmath.exp(-0.5j * m.twice * alpha)
            assert abs(mat.entry(m, m) - want) < EPS
            for j, mc in enumerate(m_range(s)):
                if i != j:
                    assert abs(mat.entries[i, j]) < EPS


def test_double_cover_sign_random():
    rng = random.Random(21)
    for ts in range(1, 7):
        s = TwiceSpin(ts)
        sign = (-1) ** ts
        for _ in range(30):
            q = rand_quaternion(rng)
            a = wigner_D(s, -q).entries
            b = sign * wigner_D(s, q).entries
            assert np.abs(a - b).max() < EPS


def test_homomorphism_random():
    rng = random.Random(22)
    for ts in range(1, 7):
        s = TwiceSpin(ts)
        for _ in range(25):
            p = rand_quaternion(rng)
            q = rand_quaternion(rng)
            left = wigner_D(s, compose(p, q)).entries
            right = wigner_D(s, p).entries @ wigner_D(s, q).entries
            assert np.abs(left - right).max() < 1e-9


def test_unitarity_and_det_modulus():
    rng = random.Random(23)
    for ts in (1, 2, 3, 5):
        s = TwiceSpin(ts)
        for _ in range(20):
            mat = wigner_D(s, rand_quaternion(rng)).entries
            assert np.abs(mat @ mat.conj().T - np.eye(s.dim)).max() < 1e-10
            assert abs(abs(np.linalg.det(mat)) - 1.0) < 1e-10


def test_entry_accessor_and_m_order():
    s = TwiceSpin(2)
    mat = wigner_D(s, from_axis_angle(YHAT, 0.7))
    assert mat.m_order() == (2, 0, -2)
    top = s.component(2)
    bottom = s.component(-2)
    assert mat.entry(top, bottom) == pytest.approx(mat.entries[0, 2])
    with pytest.raises(ValueError):
        mat.entry(s.component(2), TwiceSpin(4).component(4))


def test_spin_bound():
    wigner_D(TwiceSpin(MAX_TWICE_SPIN), IDENTITY)
    with pytest.raises(ValueError):
        wigner_D(TwiceSpin(MAX_TWICE_SPIN + 1), IDENTITY)


def test_cg_frozen_values():
    half = TwiceSpin(1)
    zero = TwiceSpin(0)
    one = TwiceSpin(2)
    up, dn = half.component(1), half.component(-1)
    assert clebsch_gordan(half, half, up, dn, zero, zero.component(0)) == pytest.approx(
        0.7071067811865476, abs=1e-15
    )
    assert clebsch_gordan(half, half, dn, up, zero, zero.component(0)) == pytest.approx(
        -0.7071067811865476, abs=1e-15
    )
    assert clebsch_gordan(half, half, up, up, one, one.component(2)) == pytest.approx(1.0)
    assert clebsch_gordan(
        one, one, one.component(2), one.component(-2), one, one.component(0)
    ) == pytest.approx(0.7071067811865476, abs=1e-15)
    assert clebsch_gordan(
        one, one, one.component(-2), one.component(2), one, one.component(0)
    ) == pytest.approx(-0.7071067811865476, abs=1e-15)


def test_cg_against_ladder_oracle():
    for tj1, tj2 in ((1, 1), (2, 2), (1, 2), (3, 3), (2, 4), (3, 1), (4, 4), (6, 6)):
        s1, s2 = TwiceSpin(tj1), TwiceSpin(tj2)
        oracle = ladder_cg_table(tj1, tj2)
        for m1 in m_range(s1):
            for m2 in m_range(s2):
                tM = m1.twice + m2.twice
                for tS in range(abs(tj1 - tj2), tj1 + tj2 + 1, 2):
                    if abs(tM) > tS:
                        continue
                    S = TwiceSpin(tS)
                    got = clebsch_gordan(s1, s2, m1, m2, S, S.component(tM))
                    want = oracle[(m1.twice, m2.twice, tS, tM)]
                    assert abs(got - want) < 1e-12


def test_cg_selection_rules_and_errors():
    half = TwiceSpin(1)
    one = TwiceSpin(2)
    up = half.component(1)
    # M != m1 + m2 is zero, not an error
    assert clebsch_gordan(half, half, up, up, one, one.component(0)) == 0.0
    # triangle violation is an error
    with pytest.raises(ValueError):
        clebsch_gordan(half, half, up, up, TwiceSpin(4), TwiceSpin(4).component(2))
    # parity mismatch between twice-labels is an error
    with pytest.raises(ValueError):
        clebsch_gordan(
            half, half, up, half.component(-1), TwiceSpin(1), TwiceSpin(1).component(1)
        )
    # m invalid for its spin
    with pytest.raises(ValueError):
        clebsch_gordan(half, half, one.component(2), up, one, one.component(2))


def test_cg_table_orthonormality_both_ways():
    for tj1, tj2 in ((1, 1), (2, 2), (1, 2), (3, 2)):
        s1, s2 = TwiceSpin(tj1), TwiceSpin(tj2)
        table = CGTable(s1, s2)
        labels = [(m1, m2) for m1 in m_range(s1) for m2 in m_range(s2)]
        couplings = [
            (S, S.component(tM))
            for S in table.allowed_total_spins()
            for tM in range(S.twice, -S.twice - 1, -2)
        ]
        # completeness over (S, M) for fixed product labels
        for m1, m2 in labels:
            for m1p, m2p in labels:
                acc = sum(
                    table.coefficient(m1, m2, S, M) * table.coefficient(m1p, m2p, S, M)
                    for S, M in couplings
                )
                want = 1.0 if (m1, m2) == (m1p, m2p) else 0.0
                assert abs(acc - want) < 1e-12
        # orthonormality over product labels for fixed couplings
        for S, M in couplings:
            for Sp, Mp in couplings:
                acc = sum(
                    table.coefficient(m1, m2, S, M) * table.coefficient(m1, m2, Sp, Mp)
                    for m1, m2 in labels
                )
                want = 1.0 if (S, M) == (Sp, Mp) else 0.0
                assert abs(acc - want) < 1e-12


def test_cg_table_out_of_range_total_spin():
    table = CGTable(TwiceSpin(1), TwiceSpin(1))
    with pytest.raises(ValueError):
        table.coefficient(
            TwiceSpin(1).component(1),
            TwiceSpin(1).component(1),
            TwiceSpin(4),
            TwiceSpin(4).component(2),
        )


def test_exchange_symmetry_sign_examples():
    assert exchange_symmetry_sign(TwiceSpin(1), TwiceSpin(0)) == -1
    assert exchange_symmetry_sign(TwiceSpin(1), TwiceSpin(2)) == 1
    assert exchange_symmetry_sign(TwiceSpin(2), TwiceSpin(4)) == 1


def test_exchange_symmetry_sign_matches_direct_swap():
    for ts in range(1, 7):
        s = TwiceSpin(ts)
        oracle = ladder_cg_table(ts, ts)
        for tS in range(0, 2 * ts + 1, 2):
            S = TwiceSpin(tS)
            sign = exchange_symmetry_sign(s, S)
            assert sign == (-1) ** ((2 * ts - tS) // 2)
            seen = False
            for (tm1, tm2, tJ, tM), v in oracle.items():
                if tJ != tS or tm1 == tm2 or abs(v) < 1e-9:
                    continue
                assert abs(oracle[(tm2, tm1, tJ, tM)] - sign * v) < 1e-9
                seen = True
            if tS < 2 * ts:
                assert seen  # swap comparison actually exercised


def test_exchange_symmetry_sign_invalid():
    with pytest.raises(ValueError):
        exchange_symmetry_sign(TwiceSpin(1), TwiceSpin(1))  # odd total
    with pytest.raises(ValueError):
        exchange_symmetry_sign(TwiceSpin(1), TwiceSpin(4))  # beyond 2s
