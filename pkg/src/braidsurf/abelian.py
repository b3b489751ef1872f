"""Smith normal form over the integers and abelianization of presentations."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .presentation import Presentation

INT64_MAX = 2**63 - 1


class IntegerOverflow(OverflowError):
    pass


def _check(v: int) -> int:
    if not -INT64_MAX - 1 <= v <= INT64_MAX:
        raise IntegerOverflow(f"entry {v} exceeds 64-bit range")
    return v


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(int(v) for v in row) for row in self.entries)
        if len(entries) != self.rows or any(len(row) != self.cols for row in entries):
            raise ValueError("matrix dimensions do not match entries")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, grid: Sequence[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
        grid = [list(row) for row in grid]
        if cols is None:
            cols = len(grid[0]) if grid else 0
        return cls(len(grid), cols, tuple(tuple(row) for row in grid))


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def smith_normal_form(a: IntegerMatrix | Sequence[Sequence[int]]) -> list[int]:
    """Diagonal d_1 | d_2 | ... of the Smith normal form, min(rows, cols) entries.

    Arithmetic is checked against the signed 64-bit range.
    """
    if not isinstance(a, IntegerMatrix):
        a = IntegerMatrix.of(a)
    m = [[_check(v) for v in row] for row in a.entries]
    rows, cols = a.rows, a.cols
    diag = []
    for t in range(min(rows, cols)):
        # pivot: nonzero entry of least magnitude in the trailing block
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if m[i][j] and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            i, j = pivot
            m[t], m[i] = m[i], m[t]
            for row in m:
                row[t], row[j] = row[j], row[t]
            p = m[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = m[i][t] // p
                if q:
                    m[i] = [_check(x - q * y) for x, y in zip(m[i], m[t])]
                dirty |= m[i][t] != 0
            for j in range(t + 1, cols):
                q = m[t][j] // p
                if q:
                    for row in m:
                        row[j] = _check(row[j] - q * row[t])
                dirty |= m[t][j] != 0
            if dirty:
                continue
            # divisibility: fold any entry not divisible by p into row t
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if m[i][j] % p), None)
            if bad is None:
                break
            m[t] = [_check(x + y) for x, y in zip(m[t], m[bad[0]])]
        diag.append(abs(m[t][t]) if t < rows and t < cols else 0)
    return diag


def relation_matrix(p: Presentation) -> IntegerMatrix:
    grid = []
    for r in p.relators:
        row = [0] * p.generator_count
        for a in r.letters:
            row[abs(a) - 1] += 1 if a > 0 else -1
        grid.append(row)
    return IntegerMatrix.of(grid, cols=p.generator_count)


def abelianize(p: Presentation) -> AbelianInvariants:
    diag = smith_normal_form(relation_matrix(p)) if p.relators else []
    nonzero = [d for d in diag if d]
    free_rank = p.generator_count - len(nonzero)
    return AbelianInvariants(free_rank, tuple(d for d in nonzero if d != 1))


def homs_to_cyclic(inv: AbelianInvariants, q: int) -> int:
    """|Hom(A, Z/q)| for the abelian group A with invariants ``inv``."""
    count = q**inv.free_rank
    for d in inv.torsion:
        count *= gcd(d, q)
    return count
