"""Single-particle descriptors and two-particle spin state vectors.

A particle is described by intrinsic content (Q, p, s) plus a spin
description: a projection m and a sign-carrying rotation R_BS from the base
frame to the standard quantization frame. The pair state expands every
description onto one shared basis labeled by (content, helicity) pairs.

The joint basis label is the UNORDERED pair of single-particle labels, sorted
by a total order on the labels themselves, never by argument position. On
that basis, permuting the argument order of a description is literally the
identity map; all the physics of exchange lives in the descriptions'
rotations instead. Order-dependent conventions, where the second slot's
rotation is derived from the first's through a half-turn about the momentum
bisector, pick up the (-1)^(2s) phases computed here.
"""

from __future__ import annotations

import enum
import math
import struct
from dataclasses import dataclass, replace

import numpy as np

from .exactnum import EPS, TwiceM, TwiceSpin, fmt15, m_range, neg_one_pow
from .frames import bisector_axis
from .rotations import UnitQuaternion, Vec3, compose, from_axis_angle, inverse
from .wigner import wigner_D


class FrameTag(enum.Enum):
    HELICITY = "HELICITY"
    CANONICAL = "CANONICAL"


class ExchangeCase(enum.Enum):
    """Which slot keeps its rotation when an ordered description is exchanged.

    FIRST: the exchanged description satisfies R_b = R_a * R_21 (the particle
    moving into slot 1 keeps its rotation; the other collects a full turn).
    SECOND: the exchanged description satisfies R_a = R_b * R_21.
    """

    FIRST = "FIRST"
    SECOND = "SECOND"


def _f64_bits(x: float) -> int:
    return struct.unpack("<Q", struct.pack("<d", x))[0]


def _vec_bits(p: Vec3) -> tuple[int, int, int]:
    return (_f64_bits(p.x), _f64_bits(p.y), _f64_bits(p.z))


@dataclass(frozen=True)
class ParticleDescriptor:
    """One particle: content (Q, p, s), projection m, and quantization frame.

    R_BS carries the double-cover sign: descriptors with R_BS and -R_BS label
    the same physical frame but different state-vector conventions.
    """

    Q: str
    p: Vec3
    s: TwiceSpin
    m: TwiceM
    base: FrameTag
    R_BS: UnitQuaternion

    def __post_init__(self) -> None:
        self.s.component(self.m.twice)

    def content_key(self) -> tuple:
        """Total-order key for the particle content; Q compares bytewise and
        momentum components compare by float bit pattern."""
        return (self.Q, _vec_bits(self.p), self.s.twice)

    def sort_key(self) -> tuple:
        return (
            self.content_key(),
            self.m.twice,
            self.base.value,
            tuple(_f64_bits(c) for c in self.R_BS.components()),
        )

    def __str__(self) -> str:
        px, py, pz = (fmt15(self.p.x), fmt15(self.p.y), fmt15(self.p.z))
        rw, rx, ry, rz = (fmt15(c) for c in self.R_BS.components())
        return (
            f"Q={self.Q} p={px},{py},{pz} 2s={self.s.twice} 2m={self.m.twice} "
            f"base={self.base.value} R_BS={rw},{rx},{ry},{rz}"
        )


# A single-particle basis label: (content key, doubled helicity).
_Label = tuple[tuple, int]
# A joint label: the unordered (sorted) pair of single labels.
_JointKey = tuple[_Label, _Label]


def _joint_key(label_1: _Label, label_2: _Label) -> _JointKey:
    return (label_1, label_2) if label_1 <= label_2 else (label_2, label_1)


@dataclass(frozen=True, eq=False)
class PairState:
    """Two-particle state on the content-keyed helicity basis.

    amplitudes maps the unordered joint label to a complex amplitude. The
    descriptor pair is stored in canonical content order, so two descriptions
    of the same physical assignment compare equal structure-by-structure no
    matter which argument order produced them.
    """

    desc_a: ParticleDescriptor
    desc_b: ParticleDescriptor
    amplitudes: dict[_JointKey, complex]

    def __post_init__(self) -> None:
        if self.desc_b.sort_key() < self.desc_a.sort_key():
            a, b = self.desc_b, self.desc_a
            object.__setattr__(self, "desc_a", a)
            object.__setattr__(self, "desc_b", b)

    def merged_content(self) -> bool:
        """True when both particles carry identical content (Q, p, s)."""
        return self.desc_a.content_key() == self.desc_b.content_key()

    def amplitude(self, lam_a: TwiceM, lam_b: TwiceM) -> complex:
        """Amplitude at helicity lam_a for desc_a and lam_b for desc_b."""
        self.desc_a.s.component(lam_a.twice)
        self.desc_b.s.component(lam_b.twice)
        key = _joint_key(
            (self.desc_a.content_key(), lam_a.twice),
            (self.desc_b.content_key(), lam_b.twice),
        )
        return self.amplitudes.get(key, 0j)

    def norm(self) -> float:
        return float(np.sqrt(sum(abs(v) ** 2 for v in self.amplitudes.values())))

    def to_matrix(self) -> np.ndarray:
        """Amplitudes as a (2s_a+1) x (2s_b+1) matrix, rows lam_a descending.

        Only defined for distinct content: on a merged basis a label cannot
        be attributed to either particle and the matrix would double-count.
        """
        if self.merged_content():
            raise ValueError(
                "joint amplitudes of identical-content pairs are stored on a "
                "merged basis and have no slot-ordered matrix form"
            )
        rows = m_range(self.desc_a.s)
        cols = m_range(self.desc_b.s)
        out = np.zeros((len(rows), len(cols)), dtype=complex)
        for i, la in enumerate(rows):
            for j, lb in enumerate(cols):
                out[i, j] = self.amplitude(la, lb)
        return out

    def allclose(self, other: PairState, tol: float = EPS) -> bool:
        """Same descriptor pair and amplitudes equal within tol, key by key."""
        if (
            self.desc_a != other.desc_a
            or self.desc_b != other.desc_b
        ):
            return False
        keys = set(self.amplitudes) | set(other.amplitudes)
        return all(
            abs(self.amplitudes.get(k, 0j) - other.amplitudes.get(k, 0j)) <= tol
            for k in keys
        )

    def scaled(self, c: complex) -> PairState:
        return PairState(
            desc_a=self.desc_a,
            desc_b=self.desc_b,
            amplitudes={k: c * v for k, v in self.amplitudes.items()},
        )

    def dump(self) -> str:
        """Serialize: header with both descriptors, then one line per joint
        label as `(lambda_a_twice, lambda_b_twice) re im`, 15 significant
        digits, labels descending."""
        lines = [f"pair: {self.desc_a} ; {self.desc_b}"]
        if self.merged_content():
            for key in sorted(self.amplitudes, reverse=True):
                (_, l1), (_, l2) = key
                v = self.amplitudes[key]
                lines.append(f"({l1}, {l2}) {fmt15(v.real)} {fmt15(v.imag)}")
        else:
            for la in m_range(self.desc_a.s):
                for lb in m_range(self.desc_b.s):
                    v = self.amplitude(la, lb)
                    lines.append(
                        f"({la.twice}, {lb.twice}) {fmt15(v.real)} {fmt15(v.imag)}"
                    )
        return "\n".join(lines) + "\n"


@dataclass(frozen=True, init=False)
class OrderedDescription:
    """Slot-ordered list of descriptors with the derived-rotation convention.

    Only the first slot's rotation is free. Each later slot's R_BS is
    replaced on construction by R_prev * R_k(+pi), the half-turn about the
    bisector of the adjacent momenta on the +pi sheet. Exchanging slots
    therefore changes rotations, not just positions; that is the point.
    """

    slots: tuple[ParticleDescriptor, ...]

    def __init__(self, slots: list[ParticleDescriptor] | tuple[ParticleDescriptor, ...]) -> None:
        slots = tuple(slots)
        if len(slots) < 1:
            raise ValueError("ordered description needs at least one slot")
        derived = [slots[0]]
        for nxt in slots[1:]:
            prev = derived[-1]
            r21 = from_axis_angle(bisector_axis(prev.p, nxt.p), math.pi)
            derived.append(replace(nxt, R_BS=compose(prev.R_BS, r21)))
        object.__setattr__(self, "slots", tuple(derived))


def rotate_sqf(desc: ParticleDescriptor, q: UnitQuaternion) -> np.ndarray:
    """Coefficient column expanding |m along the frame reached by q> over the
    base-frame projections m' (descending): column m of wigner_D(desc.s, q)."""
    mat = wigner_D(desc.s, q)
    col = (desc.s.twice - desc.m.twice) // 2
    return mat.entries[:, col].copy()


def _require_noncollinear(desc_a: ParticleDescriptor, desc_b: ParticleDescriptor) -> None:
    # Helicity-based descriptions need the momentum pair to span a plane;
    # canonical-based ones carry their frames independently of the partner.
    if FrameTag.HELICITY in (desc_a.base, desc_b.base):
        from .frames import helicity_frame

        helicity_frame(desc_a.p, desc_b.p)


def assemble_pair_canonical_orderfree(
    desc_a: ParticleDescriptor,
    desc_b: ParticleDescriptor,
    R_a: UnitQuaternion,
    R_b: UnitQuaternion,
) -> PairState:
    """Expand the pair description onto the content-keyed joint basis.

    amplitude(lam_a, lam_b) = D^{s_a}[lam_a, m_a](R_a) * D^{s_b}[lam_b, m_b](R_b).

    The rotations are supplied explicitly and independently: a physically
    complete description says how each particle's frame was reached, sign
    included. Identical-content pairs land on merged (unordered) labels and
    their amplitudes add.
    """
    _require_noncollinear(desc_a, desc_b)
    col_a = rotate_sqf(desc_a, R_a)
    col_b = rotate_sqf(desc_b, R_b)
    key_a = desc_a.content_key()
    key_b = desc_b.content_key()
    amps: dict[_JointKey, complex] = {}
    for i, la in enumerate(m_range(desc_a.s)):
        for j, lb in enumerate(m_range(desc_b.s)):
            key = _joint_key((key_a, la.twice), (key_b, lb.twice))
            amps[key] = amps.get(key, 0j) + complex(col_a[i]) * complex(col_b[j])
    return PairState(desc_a=desc_a, desc_b=desc_b, amplitudes=amps)


def pair_state_from_matrix(
    desc_a: ParticleDescriptor,
    desc_b: ParticleDescriptor,
    matrix: np.ndarray,
) -> PairState:
    """Pair state with the given joint amplitudes, rows indexed by desc_a's
    helicity (descending) and columns by desc_b's.

    For building superpositions directly; contents must be distinct so the
    matrix rows/columns attach unambiguously to the two particles.
    """
    key_a = desc_a.content_key()
    key_b = desc_b.content_key()
    if key_a == key_b:
        raise ValueError(
            "identical particle content: a slot-ordered matrix does not "
            "determine merged-basis amplitudes"
        )
    if matrix.shape != (desc_a.s.dim, desc_b.s.dim):
        raise ValueError(
            f"matrix shape {matrix.shape} does not match spin dimensions "
            f"({desc_a.s.dim}, {desc_b.s.dim})"
        )
    _require_noncollinear(desc_a, desc_b)
    amps: dict[_JointKey, complex] = {}
    for i, la in enumerate(m_range(desc_a.s)):
        for j, lb in enumerate(m_range(desc_b.s)):
            key = _joint_key((key_a, la.twice), (key_b, lb.twice))
            amps[key] = complex(matrix[i, j])
    return PairState(desc_a=desc_a, desc_b=desc_b, amplitudes=amps)


def pure_permute(state: PairState) -> PairState:
    """Relist the two descriptions in the opposite argument order.

    The joint labels are unordered and the descriptor pair is stored in
    canonical content order, so this rebuild returns a state equal to its
    input: pure permutation of an order-free description is the identity.
    """
    return PairState(
        desc_a=state.desc_b,
        desc_b=state.desc_a,
        amplitudes=dict(state.amplitudes),
    )


def exchange_order_dependent(
    ordered: OrderedDescription, case: ExchangeCase
) -> tuple[PairState, int]:
    """Exchange the two slots of an order-dependent description.

    The exchanged description must satisfy the same derived-rotation
    convention, which can be done while preserving either particle's
    rotation, not both:

      FIRST: the new slot-1 particle keeps its rotation, so the new slot-2
        rotation is R * R_21^2 = -R, a full turn on the other particle;
        phase (-1)^(2s) of the particle originally in slot 1.
      SECOND: the particle moving to slot 2 keeps its rotation; the full
        turn lands on the new slot-1 particle instead; phase (-1)^(2s) of
        the particle originally in slot 2.

    Returns the exchanged state and that phase; the exchanged state equals
    phase times the assembled original within EPS. The two cases differ from
    each other by (-1)^(2s_a + 2s_b), a full turn on both frames.
    """
    if len(ordered.slots) != 2:
        raise ValueError(
            f"exchange needs exactly two slots, got {len(ordered.slots)}"
        )
    d1, d2 = ordered.slots
    r21 = from_axis_angle(bisector_axis(d1.p, d2.p), math.pi)
    if case is ExchangeCase.FIRST:
        new_first_rotation = d2.R_BS  # equals compose(d1.R_BS, r21)
        phase = neg_one_pow(d1.s.twice)
    elif case is ExchangeCase.SECOND:
        new_first_rotation = compose(d1.R_BS, inverse(r21))
        phase = neg_one_pow(d2.s.twice)
    else:
        raise ValueError(f"unknown exchange case {case!r}")
    exchanged = OrderedDescription(
        [replace(d2, R_BS=new_first_rotation), d1]
    )
    state = assemble_ordered(exchanged)
    return state, phase


def assemble_ordered(ordered: OrderedDescription) -> PairState:
    """Assemble a two-slot ordered description with its derived rotations."""
    if len(ordered.slots) != 2:
        raise ValueError(
            f"pair assembly needs exactly two slots, got {len(ordered.slots)}"
        )
    d1, d2 = ordered.slots
    return assemble_pair_canonical_orderfree(d1, d2, d1.R_BS, d2.R_BS)


def order_dependence_phase(n: list[int], spins: list[TwiceSpin]) -> int:
    """Net sign (-1)^(sum_i n_i * 2s_i) collected when particle i's frame is
    turned through n_i full turns; only the parities of the n_i matter."""
    if len(n) != len(spins):
        raise ValueError(
            f"need one turn count per particle: {len(n)} counts, {len(spins)} spins"
        )
    total = 0
    for n_i, s_i in zip(n, spins):
        if isinstance(n_i, bool) or not isinstance(n_i, int):
            raise TypeError(f"turn counts must be ints, got {n_i!r}")
        total += n_i * s_i.twice
    return neg_one_pow(total)
