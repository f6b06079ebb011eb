"""Composite spin of a pair, the even-S exclusion rule, and commuting pair
operators.

Coupling two identical spins s, the coefficient relating the product basis to
the composite basis picks up (-1)^(2s - S) under slot swap. Bringing both
particles to one common quantization frame costs a further half-turn-squared
sign (-1)^(2s), because the two particles' frames are related by a half-turn
whose sheet is an order-dependent choice. The product of the two signs is
(-1)^S: the net coefficient symmetry is even in S regardless of whether the
spin is integer or half-integer, which is what confines identical pairs with
all other quantum numbers equal to even composite spin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exactnum import EPS, TwiceM, TwiceSpin, fmt15, m_range, neg_one_pow
from .frames import bisector_axis
from .rotations import IDENTITY, UnitQuaternion, from_axis_angle
from .states import PairState
from .wigner import CGTable, exchange_symmetry_sign, wigner_D

# Dense-matrix desk-scale bounds.
MAX_OPERATOR_PARTICLES = 5
MAX_OPERATOR_TWICE_SPIN = 2
MAX_FAMILY_PARTICLES = 4
MAX_FAMILY_TWICE_SPIN = 1


@dataclass(frozen=True, eq=False)
class CompositeProjection:
    """Amplitudes of a pair state on the composite basis |S M>."""

    s_a: TwiceSpin
    s_b: TwiceSpin
    amplitudes: dict[tuple[TwiceSpin, TwiceM], complex]

    def amplitude(self, S: TwiceSpin, M: TwiceM) -> complex:
        S.component(M.twice)
        return self.amplitudes.get((S, M), 0j)

    def weight(self, S: TwiceSpin) -> float:
        """Total probability in the composite-spin-S channel."""
        return float(
            sum(abs(v) ** 2 for (tS, _), v in self.amplitudes.items() if tS == S)
        )

    def total_weight(self) -> float:
        return float(sum(abs(v) ** 2 for v in self.amplitudes.values()))

    def report_lines(self) -> list[str]:
        """`S_twice M_twice re im` per entry, S ascending then M descending."""
        keys = sorted(self.amplitudes, key=lambda k: (k[0].twice, -k[1].twice))
        return [
            f"{S.twice} {M.twice} {fmt15(self.amplitudes[(S, M)].real)} "
            f"{fmt15(self.amplitudes[(S, M)].imag)}"
            for (S, M) in keys
        ]


def project_composite(
    state: PairState,
    route: int | tuple[UnitQuaternion, UnitQuaternion],
) -> CompositeProjection:
    """Couple the pair's spins after bringing both to one common frame.

    route says how the common frame is reached. Either a pair (R_a, R_b) of
    rotations applied to the two label slots directly, or an integer sheet
    (+1 or -1): then R_a is the identity and R_b is the half-turn about the
    momentum bisector on that sheet, the relation between the two sides of a
    back-to-back pair. The sheet must be given explicitly in that form; the
    two choices multiply every amplitude by (-1)^(2s_b), so they agree for a
    fullon slot and differ by a global sign for a halfon slot.

    The change of basis is unitary, so the channel weights sum to 1 for a
    normalized input.
    """
    if isinstance(route, int):
        if route not in (1, -1):
            raise ValueError(f"sheet must be +1 or -1, got {route!r}")
        k = bisector_axis(state.desc_a.p, state.desc_b.p)
        r_a = IDENTITY
        r_b = from_axis_angle(k, route * math.pi)
    else:
        r_a, r_b = route
    psi = state.to_matrix()
    d_a = wigner_D(state.desc_a.s, r_a).entries
    d_b = wigner_D(state.desc_b.s, r_b).entries
    common = d_a @ psi @ d_b.T

    s_a, s_b = state.desc_a.s, state.desc_b.s
    table = CGTable(s_a, s_b)
    rows = m_range(s_a)
    cols = m_range(s_b)
    amps: dict[tuple[TwiceSpin, TwiceM], complex] = {}
    for S in table.allowed_total_spins():
        for M in m_range(S):
            total = 0j
            for i, ma in enumerate(rows):
                for j, mb in enumerate(cols):
                    if ma.twice + mb.twice != M.twice:
                        continue
                    total += table.coefficient(ma, mb, S, M) * complex(common[i, j])
            amps[(S, M)] = total
    return CompositeProjection(s_a=s_a, s_b=s_b, amplitudes=amps)


def pseudo_antisymmetrize(psi: np.ndarray, s: TwiceSpin) -> np.ndarray:
    """Project a square amplitude matrix onto the slot-swap eigenspace with
    eigenvalue (-1)^(2s), normalized: (psi + (-1)^(2s) psi^T) / norm.

    For half-integer s this looks like antisymmetrization, for integer s like
    symmetrization; both keep exactly the even-S coupling channels.
    """
    if psi.shape[0] != psi.shape[1] or psi.shape[0] != s.dim:
        raise ValueError(
            f"matrix shape {psi.shape} does not match spin dimension {s.dim}"
        )
    out = psi + neg_one_pow(s.twice) * psi.T
    norm = np.linalg.norm(out)
    if norm < EPS:
        raise ValueError("projection annihilates this matrix entirely")
    return out / norm


def pseudo_antisymmetry_sign(s: TwiceSpin, S: TwiceSpin) -> int:
    """Net symmetry of the coupling coefficients once both particles use
    order-independent common-frame descriptions.

    The swap symmetry (-1)^(2s - S) of the coefficients combines with the
    (-1)^(2s) from the half-turn relating the two particles' frames; the
    product is (-1)^S, so the sign is +1 exactly for even S.
    """
    return exchange_symmetry_sign(s, S) * neg_one_pow(s.twice)


def exclusion_check(s: TwiceSpin) -> set[TwiceSpin]:
    """Composite spins available to an identical pair with every other
    quantum number equal: the channels whose net coefficient symmetry is +1.

    The result is always the even values {0, 2, ...} up to 2s, for integer
    and half-integer s alike.
    """
    allowed = set()
    for t in range(0, 2 * s.twice + 1, 2):
        S = TwiceSpin(t)
        if pseudo_antisymmetry_sign(s, S) == 1:
            allowed.add(S)
    return allowed


def _single_spin_matrices(s: TwiceSpin) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    # (Sx, Sy, Sz) in the descending-m basis, hbar = 1.
    dim = s.dim
    ms = [m.twice for m in m_range(s)]
    sz = np.diag([tm / 2.0 for tm in ms]).astype(complex)
    sp = np.zeros((dim, dim), dtype=complex)
    for idx in range(1, dim):
        tm = ms[idx]  # raising maps m -> m+1, i.e. column idx to row idx-1
        sp[idx - 1, idx] = math.sqrt((s.twice * (s.twice + 2) - tm * (tm + 2)) / 4.0)
    sm = sp.conj().T
    sx = 0.5 * (sp + sm)
    sy = -0.5j * (sp - sm)
    return sx, sy, sz


def _embed(op: np.ndarray, n: int, slot: int) -> np.ndarray:
    dim = op.shape[0]
    out = np.array([[1.0 + 0j]])
    for i in range(n):
        out = np.kron(out, op if i == slot else np.eye(dim, dtype=complex))
    return out


@dataclass(frozen=True, eq=False)
class PairSpinOperator:
    """(sum of the subset's spin vectors) squared, on the N-fold product space."""

    n_particles: int
    s: TwiceSpin
    subset: frozenset[int]
    matrix: np.ndarray


def build_pair_spin_operator(
    n_particles: int, s: TwiceSpin, subset: set[int] | frozenset[int]
) -> PairSpinOperator:
    """Composite-spin-squared operator of the given particle subset (indices
    1..N), embedded in the N-particle product space.

    Hermitian by construction; its spectrum is S(S+1) over the coupling range
    of |subset| spins s.
    """
    if n_particles > MAX_OPERATOR_PARTICLES:
        raise ValueError(f"N={n_particles} exceeds bound {MAX_OPERATOR_PARTICLES}")
    if s.twice > MAX_OPERATOR_TWICE_SPIN:
        raise ValueError(f"2s={s.twice} exceeds bound {MAX_OPERATOR_TWICE_SPIN}")
    subset = frozenset(subset)
    if len(subset) < 2:
        raise ValueError("subset must contain at least two particles")
    if not subset <= set(range(1, n_particles + 1)):
        raise ValueError(f"subset {sorted(subset)} not within 1..{n_particles}")
    components = _single_spin_matrices(s)
    dim_total = s.dim**n_particles
    total = np.zeros((dim_total, dim_total), dtype=complex)
    for comp in components:
        summed = np.zeros((dim_total, dim_total), dtype=complex)
        for i in sorted(subset):
            summed += _embed(comp, n_particles, i - 1)
        total += summed @ summed
    return PairSpinOperator(
        n_particles=n_particles, s=s, subset=subset, matrix=total
    )


def max_commuting_pairset(n_particles: int, s: TwiceSpin) -> int:
    """Largest family of distinct subset-spin operators (each subset of size
    at least 2) that commute pairwise, found by brute force.

    Distinct subsets and pairwise matrix commutation is this package's
    concrete reading of "independent simultaneous eigenstates"; the count it
    yields for small N is N - 1, never the N(N-1)/2 a full pairwise family
    would need.
    """
    if n_particles > MAX_FAMILY_PARTICLES:
        raise ValueError(f"N={n_particles} exceeds bound {MAX_FAMILY_PARTICLES}")
    if s.twice > MAX_FAMILY_TWICE_SPIN:
        raise ValueError(f"2s={s.twice} exceeds bound {MAX_FAMILY_TWICE_SPIN}")
    subsets = []
    for mask in range(1, 2**n_particles):
        members = {i + 1 for i in range(n_particles) if mask & (1 << i)}
        if len(members) >= 2:
            subsets.append(frozenset(members))
    subsets.sort(key=lambda f: (len(f), sorted(f)))
    ops = [build_pair_spin_operator(n_particles, s, f).matrix for f in subsets]
    k = len(ops)
    commutes = [[False] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            resid = np.abs(ops[i] @ ops[j] - ops[j] @ ops[i]).max()
            commutes[i][j] = commutes[j][i] = resid <= EPS
    best = 0
    for mask in range(1, 2**k):
        chosen = [i for i in range(k) if mask & (1 << i)]
        if len(chosen) <= best:
            continue
        if all(
            commutes[a][b] for ai, a in enumerate(chosen) for b in chosen[ai + 1 :]
        ):
            best = len(chosen)
    return best
