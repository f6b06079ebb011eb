"""Shared random generators for the test suite. Seeds are fixed per test."""

from __future__ import annotations

import math
import random

from spinframes import (
    IDENTITY,
    FrameTag,
    ParticleDescriptor,
    TwiceSpin,
    UnitQuaternion,
    Vec3,
)


def rand_quaternion(rng: random.Random) -> UnitQuaternion:
    while True:
        comps = [rng.gauss(0.0, 1.0) for _ in range(4)]
        n = math.sqrt(sum(c * c for c in comps))
        if n > 1e-3:
            return UnitQuaternion(*(c / n for c in comps))


def rand_unit_vec(rng: random.Random) -> Vec3:
    while True:
        v = Vec3(rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0))
        if v.norm() > 1e-3:
            return v.normalized()


def rand_noncollinear_pair(rng: random.Random) -> tuple[Vec3, Vec3]:
    while True:
        a = rand_unit_vec(rng)
        b = rand_unit_vec(rng)
        if a.cross(b).norm() > 1e-3:
            return a, b


def rand_descriptor(
    rng: random.Random,
    q_label: str,
    p: Vec3,
    max_twice_spin: int = 4,
    base: FrameTag = FrameTag.CANONICAL,
) -> ParticleDescriptor:
    s = TwiceSpin(rng.randint(1, max_twice_spin))
    tm = rng.choice(range(-s.twice, s.twice + 1, 2))
    return ParticleDescriptor(
        Q=q_label,
        p=p,
        s=s,
        m=s.component(tm),
        base=base,
        R_BS=rand_quaternion(rng),
    )


def figure_pair(theta: float) -> tuple[Vec3, Vec3]:
    """Momentum pair mirrored across the z-axis in the x-z plane, so the
    bisector of the two directions is zhat."""
    return (
        Vec3(math.sin(theta), 0.0, math.cos(theta)),
        Vec3(-math.sin(theta), 0.0, math.cos(theta)),
    )


IDENTITY_Q = IDENTITY
