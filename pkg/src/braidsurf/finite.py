"""
Finite groups as multiplication tables, homomorphism counting from finitely
presented groups, and hom-count fingerprints.

Assignments of generator images are enumerated in lexicographic order, one
generator at a time; a relator is checked as soon as every generator it
mentions has an image, so most of the N^n candidates are never built.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .braid import FreeWord
from .presentation import Presentation

MAX_ORDER = 5040
_BLOCK_ROWS = 1 << 18


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    label: str
    table: np.ndarray
    identity: int
    inverses: np.ndarray

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __repr__(self):
        return f"FiniteGroup({self.label}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def verify(self) -> bool:
        """Check the group axioms by full enumeration."""
        t, n, e = self.table, self.order, self.identity
        elems = np.arange(n)
        if not ((t[e] == elems).all() and (t[:, e] == elems).all()):
            return False
        if not ((t[elems, self.inverses] == e).all() and (t[self.inverses, elems] == e).all()):
            return False
        if not all(sorted(row) == list(range(n)) for row in t.tolist()):
            return False
        # (ab)c == a(bc) for all triples
        return bool((t[t[:, :, None], elems] == t[elems[:, None, None], t[None, :, :]]).all())


def _from_table(label: str, table) -> FiniteGroup:
    table = np.asarray(table, dtype=np.int32)
    n = table.shape[0]
    identity = next(e for e in range(n) if (table[e] == np.arange(n)).all())
    inverses = np.argmax(table == identity, axis=1).astype(np.int32)
    table.setflags(write=False)
    inverses.setflags(write=False)
    return FiniteGroup(label, table, identity, inverses)


def cyclic(n: int) -> FiniteGroup:
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"cyclic group order must be in 1..{MAX_ORDER}")
    k = np.arange(n)
    return _from_table(f"Z{n}", (k[:, None] + k[None, :]) % n)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; element ``k + n*e`` is r^k s^e."""
    if not 2 <= n <= MAX_ORDER // 2:
        raise ValueError(f"dihedral index must be in 2..{MAX_ORDER // 2}")
    table = np.empty((2 * n, 2 * n), dtype=np.int32)
    for x in range(2 * n):
        a, e = x % n, x // n
        for y in range(2 * n):
            b, f = y % n, y // n
            # r^a s^e r^b s^f = r^(a + (-1)^e b) s^(e+f)
            table[x, y] = (a + (b if e == 0 else -b)) % n + n * ((e + f) % 2)
    return _from_table(f"D{n}", table)


def symmetric(n: int) -> FiniteGroup:
    """S_n on permutations in lexicographic order; products compose left to right."""
    if not 1 <= n <= 7:
        raise ValueError("symmetric group degree must be in 1..7")
    arr = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    lookup = np.zeros(n**n, dtype=np.int32)
    lookup[arr @ weights] = np.arange(len(arr), dtype=np.int32)
    table = np.empty((len(arr), len(arr)), dtype=np.int32)
    for i, p in enumerate(arr):
        # row j is the permutation k -> q_j[p[k]]
        table[i] = lookup[arr[:, p] @ weights]
    return _from_table(f"S{n}", table)


# --- evaluation and counting ---------------------------------------------

def evaluate_word(w: FreeWord, assignment: Sequence[int], g: FiniteGroup) -> int:
    if len(assignment) != w.rank:
        raise ValueError("assignment length must equal the word's rank")
    cur = g.identity
    for a in w.letters:
        img = assignment[abs(a) - 1]
        cur = int(g.table[cur, img if a > 0 else g.inverses[img]])
    return cur


def _evaluate_many(letters: Sequence[int], assign: np.ndarray, g: FiniteGroup) -> np.ndarray:
    cur = np.full(assign.shape[0], g.identity, dtype=np.int32)
    for a in letters:
        img = assign[:, abs(a) - 1]
        cur = g.table[cur, img if a > 0 else g.inverses[img]]
    return cur


def _relators_by_stage(p: Presentation) -> list[list[tuple[int, ...]]]:
    stages: list[list[tuple[int, ...]]] = [[] for _ in range(p.generator_count)]
    for r in p.relators:
        if r.letters:
            stages[max(abs(a) for a in r.letters) - 1].append(r.letters)
    return stages


def satisfying_assignments(p: Presentation, g: FiniteGroup) -> Iterator[np.ndarray]:
    """Blocks of generator assignments satisfying every relator, in lexicographic order."""
    n, N = p.generator_count, g.order
    stages = _relators_by_stage(p)
    elems = np.arange(N, dtype=np.int32)

    def extend(block: np.ndarray, k: int) -> Iterator[np.ndarray]:
        if k == n:
            yield block
            return
        if block.shape[0] * N > _BLOCK_ROWS and block.shape[0] > 1:
            step = max(1, _BLOCK_ROWS // N)
            for lo in range(0, block.shape[0], step):
                yield from extend(block[lo:lo + step], k)
            return
        grown = np.empty((block.shape[0] * N, k + 1), dtype=np.int32)
        grown[:, :k] = np.repeat(block, N, axis=0)
        grown[:, k] = np.tile(elems, block.shape[0])
        for rel in stages[k]:
            grown = grown[_evaluate_many(rel, grown, g) == g.identity]
            if not grown.shape[0]:
                return
        yield from extend(grown, k + 1)

    yield from extend(np.zeros((1, 0), dtype=np.int32), 0)


def count_homs(p: Presentation, g: FiniteGroup) -> int:
    return sum(block.shape[0] for block in satisfying_assignments(p, g))


def generated_subgroup(gens: Sequence[int], g: FiniteGroup) -> np.ndarray:
    """Boolean mask of the subgroup generated by ``gens``."""
    reached = np.zeros(g.order, dtype=bool)
    reached[g.identity] = True
    frontier = np.array([g.identity])
    gens = np.unique(np.asarray(gens, dtype=np.int64))
    while frontier.size:
        products = np.unique(g.table[frontier][:, gens])
        frontier = products[~reached[products]]
        reached[frontier] = True
    return reached


def exists_surjection(p: Presentation, g: FiniteGroup) -> bool:
    seen = set()
    for block in satisfying_assignments(p, g):
        for row in block:
            key = frozenset(row.tolist())
            if key in seen:
                continue
            seen.add(key)
            if generated_subgroup(row, g).all():
                return True
    return False


# --- fingerprints ---------------------------------------------------------

Fingerprint = dict[str, int]


def fingerprint(p: Presentation, panel: Sequence[FiniteGroup]) -> Fingerprint:
    return {g.label: count_homs(p, g) for g in panel}


def fingerprints_equal(f1: Fingerprint, f2: Fingerprint) -> bool:
    return f1 == f2


def first_difference(f1: Fingerprint, f2: Fingerprint) -> str | None:
    """Label of the first panel group (in ``f1`` order) on which the counts differ."""
    for label, count in f1.items():
        if f2.get(label) != count:
            return label
    for label in f2:
        if label not in f1:
            return label
    return None


_CONSTRUCTORS = {"Z": cyclic, "D": dihedral, "S": symmetric}
_ITEM_RE = re.compile(r"^([ZDS])(\d+)(?:-([ZDS])(\d+))?$")

DEFAULT_PANEL = "Z2-Z6,S3,S4,D3-D8"


def parse_panel(spec: str) -> list[FiniteGroup]:
    """Parse ``Z<n>``, ``D<n>``, ``S<n>`` items and same-family ranges like ``D3-D8``."""
    panel = []
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        match = _ITEM_RE.match(item)
        if not match:
            raise ValueError(f"bad panel item {item!r}")
        kind, lo, kind2, hi = match.groups()
        lo = int(lo)
        hi = int(hi) if hi is not None else lo
        if kind2 is not None and kind2 != kind:
            raise ValueError(f"range {item!r} mixes group families")
        if hi < lo:
            raise ValueError(f"empty range {item!r}")
        panel.extend(_CONSTRUCTORS[kind](k) for k in range(lo, hi + 1))
    return panel


def default_panel() -> list[FiniteGroup]:
    return parse_panel(DEFAULT_PANEL)
