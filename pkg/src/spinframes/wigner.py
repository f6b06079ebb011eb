"""Spin-s rotation matrices on the double cover, and angular-momentum coupling.

The D-matrix is evaluated directly from the quaternion's Cayley-Klein pair

    a = w - i z,   b = -y - i x,

which packs the quaternion into the SU(2) matrix [[a, b], [-conj(b), conj(a)]].
Every entry is a homogeneous polynomial of degree 2s in (a, b, conj(a),
conj(b)):

    D[m', m] = sum_i  sqrt((s+m')! (s-m')! (s+m)! (s-m)!)
               / ((s+m-i)! i! (m'-m+i)! (s-m'-i)!)
               * a^(s+m-i) * conj(a)^(s-m'-i) * b^(m'-m+i) * (-conj(b))^i,

so D(-q) = (-1)^(2s) D(q) holds identically in the arithmetic, with no angle
extraction and no branch cuts. Phases follow the Condon-Shortley convention:
a rotation by alpha about z gives diag(exp(-i m alpha)) and a rotation about
y gives the standard real reduced matrix.

Clebsch-Gordan coefficients use the closed-form alternating sum over exact
rational factorials, with a single square root at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

import numpy as np

from .exactnum import TwiceM, TwiceSpin, factorial_exact, m_range, neg_one_pow
from .rotations import UnitQuaternion

# Largest 2s this module evaluates; the factorial budget and the intended
# desk-scale use both stop here.
MAX_TWICE_SPIN = 12


def _cayley_klein(q: UnitQuaternion) -> tuple[complex, complex]:
    return complex(q.w, -q.z), complex(-q.y, -q.x)


@dataclass(frozen=True, eq=False)
class WignerMatrix:
    """Rotation matrix D^s in the projection basis, rows/columns descending in m."""

    s: TwiceSpin
    q: UnitQuaternion
    entries: np.ndarray

    def m_order(self) -> tuple[int, ...]:
        """Doubled projection labels indexing rows and columns, +2s down to -2s."""
        return tuple(m.twice for m in m_range(self.s))

    def _index(self, m: TwiceM) -> int:
        self.s.component(m.twice)
        return (self.s.twice - m.twice) // 2

    def entry(self, m_row: TwiceM, m_col: TwiceM) -> complex:
        return complex(self.entries[self._index(m_row), self._index(m_col)])


def wigner_D(s: TwiceSpin, q: UnitQuaternion) -> WignerMatrix:
    """D^s(q) as a (2s+1) x (2s+1) complex matrix.

    Exact unitary-representation property: wigner_D(s, compose(p, q)) equals
    wigner_D(s, p) @ wigner_D(s, q) up to floating error, and negating q
    multiplies the whole matrix by (-1)^(2s).
    """
    if s.twice > MAX_TWICE_SPIN:
        raise ValueError(f"2s={s.twice} exceeds supported maximum {MAX_TWICE_SPIN}")
    a, b = _cayley_klein(q)
    ac = a.conjugate()
    nbc = -b.conjugate()
    ts = s.twice
    order = [m.twice for m in m_range(s)]
    dim = s.dim
    out = np.zeros((dim, dim), dtype=complex)
    for row, tmp in enumerate(order):
        f_row = factorial_exact((ts + tmp) // 2) * factorial_exact((ts - tmp) // 2)
        for col, tm in enumerate(order):
            f_col = factorial_exact((ts + tm) // 2) * factorial_exact((ts - tm) // 2)
            pref = sqrt(f_row * f_col)
            lo = max(0, (tm - tmp) // 2)
            hi = min((ts + tm) // 2, (ts - tmp) // 2)
            total = 0j
            for i in range(lo, hi + 1):
                e_a = (ts + tm) // 2 - i
                e_ac = (ts - tmp) // 2 - i
                e_b = (tmp - tm) // 2 + i
                den = (
                    factorial_exact(e_a)
                    * factorial_exact(i)
                    * factorial_exact(e_b)
                    * factorial_exact(e_ac)
                )
                total += (pref / den) * a**e_a * ac**e_ac * b**e_b * nbc**i
            out[row, col] = total
    return WignerMatrix(s=s, q=q, entries=out)


def clebsch_gordan(
    s1: TwiceSpin,
    s2: TwiceSpin,
    m1: TwiceM,
    m2: TwiceM,
    S: TwiceSpin,
    M: TwiceM,
) -> float:
    """<s1 m1; s2 m2 | S M> in the Condon-Shortley convention (real).

    S must satisfy the triangle rule with s1, s2 (including the parity of the
    doubled labels); the coefficient is zero whenever M != m1 + m2.
    """
    s1.component(m1.twice)
    s2.component(m2.twice)
    S.component(M.twice)
    if not (abs(s1.twice - s2.twice) <= S.twice <= s1.twice + s2.twice):
        raise ValueError(
            f"total spin 2S={S.twice} outside triangle range for "
            f"2s1={s1.twice}, 2s2={s2.twice}"
        )
    if (s1.twice + s2.twice - S.twice) % 2 != 0:
        raise ValueError(
            f"total spin 2S={S.twice} has wrong parity for "
            f"2s1={s1.twice}, 2s2={s2.twice}"
        )
    if m1.twice + m2.twice != M.twice:
        return 0.0

    ts1, ts2, tS = s1.twice, s2.twice, S.twice
    tm1, tm2, tM = m1.twice, m2.twice, M.twice

    def fh(t: int) -> int:
        return factorial_exact(t // 2)

    pref = Fraction(tS + 1)
    pref *= Fraction(
        fh(tS + ts1 - ts2) * fh(tS - ts1 + ts2) * fh(ts1 + ts2 - tS),
        fh(ts1 + ts2 + tS + 2),
    )
    pref *= fh(tS + tM) * fh(tS - tM)
    pref *= fh(ts1 - tm1) * fh(ts1 + tm1) * fh(ts2 - tm2) * fh(ts2 + tm2)

    k_lo = max(0, (ts2 - tS - tm1) // 2, (ts1 - tS + tm2) // 2)
    k_hi = min((ts1 + ts2 - tS) // 2, (ts1 - tm1) // 2, (ts2 + tm2) // 2)
    ksum = Fraction(0)
    for k in range(k_lo, k_hi + 1):
        den = (
            factorial_exact(k)
            * fh(ts1 + ts2 - tS - 2 * k)
            * fh(ts1 - tm1 - 2 * k)
            * fh(ts2 + tm2 - 2 * k)
            * fh(tS - ts2 + tm1 + 2 * k)
            * fh(tS - ts1 - tm2 + 2 * k)
        )
        ksum += Fraction(neg_one_pow(k), den)
    if ksum == 0:
        return 0.0
    sign = 1.0 if ksum > 0 else -1.0
    return sign * sqrt(float(pref * ksum * ksum))


class CGTable:
    """All coupling coefficients for a fixed spin pair (s1, s2).

    Entries are keyed by doubled labels; coefficient() accepts the typed
    labels and returns 0.0 off the M = m1 + m2 diagonal.
    """

    def __init__(self, s1: TwiceSpin, s2: TwiceSpin):
        self.s1 = s1
        self.s2 = s2
        self._table: dict[tuple[int, int, int], float] = {}
        for m1 in m_range(s1):
            for m2 in m_range(s2):
                tM = m1.twice + m2.twice
                for S in self.allowed_total_spins():
                    if abs(tM) > S.twice:
                        continue
                    value = clebsch_gordan(s1, s2, m1, m2, S, S.component(tM))
                    self._table[(m1.twice, m2.twice, S.twice)] = value

    def allowed_total_spins(self) -> list[TwiceSpin]:
        """Triangle-range total spins, ascending."""
        lo = abs(self.s1.twice - self.s2.twice)
        hi = self.s1.twice + self.s2.twice
        return [TwiceSpin(t) for t in range(lo, hi + 1, 2)]

    def coefficient(self, m1: TwiceM, m2: TwiceM, S: TwiceSpin, M: TwiceM) -> float:
        self.s1.component(m1.twice)
        self.s2.component(m2.twice)
        S.component(M.twice)
        if m1.twice + m2.twice != M.twice:
            return 0.0
        key = (m1.twice, m2.twice, S.twice)
        if key not in self._table:
            raise ValueError(
                f"2S={S.twice} outside triangle range for this table"
            )
        return self._table[key]


def exchange_symmetry_sign(s: TwiceSpin, S: TwiceSpin) -> int:
    """Sign picked up by the coupled state |S M> of two spin-s particles when
    the two projection slots are swapped: (-1)^(2s - S).

    Follows from the coefficient symmetry <s m2; s m1 | S M> =
    (-1)^(2s - S) <s m1; s m2 | S M>; independent of M.
    """
    if S.twice % 2 != 0 or not (0 <= S.twice <= 2 * s.twice):
        raise ValueError(
            f"2S={S.twice} is not a valid total spin for two spin {s} particles"
        )
    return neg_one_pow(s.twice - S.twice // 2)
