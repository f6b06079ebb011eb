"""Parity ledger for order-dependence signs and the exhaustive check that
universal pairwise sign flips are impossible beyond two particles.

An order-dependent description convention can silently rotate particle i's
quantization frame by n_i full turns, contributing (-1)^(2 s_i n_i) to the
state vector's sign. The ledger tracks those integers. Demanding that every
unordered pair of identical half-integer particles pick up a sign under
exchange, while bystanders stay untouched, yields one XOR constraint per
pair over one parity bit per particle; enumeration shows the system has
solutions only for N = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .exactnum import TwiceSpin, neg_one_pow

MAX_ENUM_VARS = 20


@dataclass(frozen=True)
class ParityLedger:
    """Turn counts n[r][i] for order-slot r and particle i (0-based), N x N."""

    n_particles: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.table) != self.n_particles or any(
            len(row) != self.n_particles for row in self.table
        ):
            raise ValueError(
                f"ledger table must be {self.n_particles}x{self.n_particles}"
            )

    @staticmethod
    def from_rows(rows: list[list[int]]) -> ParityLedger:
        return ParityLedger(
            n_particles=len(rows), table=tuple(tuple(r) for r in rows)
        )

    def particle_total(self, i: int) -> int:
        """Net turn count of particle i, summed over slots."""
        return sum(row[i] for row in self.table)


def exchange_sign(
    before: ParityLedger, after: ParityLedger, spins: list[TwiceSpin]
) -> int:
    """Sign (-1)^(sum_i delta_n_i * 2s_i) collected in passing from one
    ledger to the other; only per-particle total parities matter."""
    if before.n_particles != after.n_particles:
        raise ValueError("ledgers have different particle counts")
    if len(spins) != before.n_particles:
        raise ValueError(
            f"need {before.n_particles} spins, got {len(spins)}"
        )
    total = 0
    for i, s in enumerate(spins):
        delta = after.particle_total(i) - before.particle_total(i)
        total += delta * s.twice
    return neg_one_pow(total)


def check_noninterference(
    before: ParityLedger, after: ParityLedger, exchanged: tuple[int, int]
) -> bool:
    """True iff every particle outside the exchanged pair keeps its turn
    parity: bystanders may not contribute to an exchange sign."""
    if before.n_particles != after.n_particles:
        raise ValueError("ledgers have different particle counts")
    i, j = exchanged
    if i == j or not (0 <= i < before.n_particles and 0 <= j < before.n_particles):
        raise ValueError(f"invalid exchanged pair {exchanged!r}")
    return all(
        before.particle_total(k) % 2 == after.particle_total(k) % 2
        for k in range(before.n_particles)
        if k not in (i, j)
    )


@dataclass(frozen=True)
class ExchangeConstraintSystem:
    """x_i = parity of particle i's turn-count difference between the two
    slot orders; each unordered pair demands x_i XOR x_j = 1."""

    n_vars: int
    constraints: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for i, j in self.constraints:
            if not (0 <= i < j < self.n_vars):
                raise ValueError(f"bad constraint pair ({i}, {j})")


def build_constraints(n_particles: int) -> ExchangeConstraintSystem:
    """One XOR-inequality per unordered particle pair: N(N-1)/2 in all."""
    if n_particles < 2:
        raise ValueError(f"need at least two particles, got {n_particles}")
    pairs = tuple(
        (i, j) for i in range(n_particles) for j in range(i + 1, n_particles)
    )
    return ExchangeConstraintSystem(n_vars=n_particles, constraints=pairs)


class SatResult(NamedTuple):
    satisfiable: bool
    witness: Optional[tuple[int, ...]]
    count: int


def exhaustive_satisfiable(system: ExchangeConstraintSystem) -> SatResult:
    """Try all 2^N parity assignments; return satisfiability, the first
    witness found, and the number of satisfying assignments."""
    if system.n_vars > MAX_ENUM_VARS:
        raise ValueError(
            f"{system.n_vars} variables exceeds enumeration bound {MAX_ENUM_VARS}"
        )
    witness: Optional[tuple[int, ...]] = None
    count = 0
    for assignment in range(2**system.n_vars):
        ok = True
        for i, j in system.constraints:
            if ((assignment >> i) ^ (assignment >> j)) & 1 != 1:
                ok = False
                break
        if ok:
            count += 1
            if witness is None:
                witness = tuple(
                    (assignment >> i) & 1 for i in range(system.n_vars)
                )
    return SatResult(satisfiable=count > 0, witness=witness, count=count)


def impossibility_report(n_max: int) -> list[tuple[int, bool, int]]:
    """(N, satisfiable, count) rows for N = 2..n_max."""
    if not 2 <= n_max <= MAX_ENUM_VARS:
        raise ValueError(f"N_max={n_max} outside [2, {MAX_ENUM_VARS}]")
    rows = []
    for n in range(2, n_max + 1):
        result = exhaustive_satisfiable(build_constraints(n))
        rows.append((n, result.satisfiable, result.count))
    return rows


def n2_only_pattern(rows: list[tuple[int, bool, int]]) -> bool:
    """True iff the report is satisfiable exactly at N=2 (with both witnesses)."""
    return all(
        (sat and count == 2) if n == 2 else (not sat and count == 0)
        for (n, sat, count) in rows
    )


def report_lines(rows: list[tuple[int, bool, int]]) -> list[str]:
    return [
        f"N={n} satisfiable={'true' if sat else 'false'} witnesses={count}"
        for (n, sat, count) in rows
    ]
