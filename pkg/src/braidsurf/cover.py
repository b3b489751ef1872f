"""
Double branched covers: the index-2 subgroup phi^-1(2Z) via Reidemeister-Schreier
with transversal {e, x1}, the quotient by meridian squares, and Todd-Coxeter
enumeration for certifying small group orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .braid import FreeWord, _reduce
from .presentation import Presentation

IDENTITY_COSET, X1_COSET = 0, 1
DEFAULT_MAX_COSETS = 100_000


class RewriteError(ValueError):
    pass


def degree_zero_check(p: Presentation) -> bool:
    """True iff the degree map x_i -> 1 is well defined on ``p``."""
    return all(r.exponent_sum() == 0 for r in p.relators)


@dataclass(frozen=True)
class CoverPresentation:
    presentation: Presentation
    # (coset representative, original generator index) for each subgroup generator
    generator_labels: tuple[tuple[str, int], ...]

    def label(self, k: int) -> str:
        rep, i = self.generator_labels[k - 1]
        return f"u{i}" if rep == "e" else f"v{i}"


def _schreier_index(coset: int, i: int, m: int) -> int | None:
    # u_i = x_i x1^-1 (i >= 2) live at 1..m-1; v_i = x1 x_i at m..2m-1; (e, x1) is the tree edge
    if coset == IDENTITY_COSET:
        return None if i == 1 else i - 1
    return m - 1 + i


def schreier_labels(m: int) -> tuple[tuple[str, int], ...]:
    return tuple([("e", i) for i in range(2, m + 1)] + [("x1", i) for i in range(1, m + 1)])


def rs_rewrite(w: FreeWord, start_coset: int = IDENTITY_COSET) -> FreeWord:
    """Rewrite ``w`` as a word in the Schreier generators of phi^-1(2Z)."""
    m = w.rank
    coset = start_coset
    out = []
    for a in w.letters:
        # with two cosets every letter swaps them; x_i^-1 reads the edge (other coset, x_i) backwards
        if a > 0:
            k = _schreier_index(coset, a, m)
            coset = 1 - coset
        else:
            coset = 1 - coset
            k = _schreier_index(coset, -a, m)
        if k is not None:
            out.append(k if a > 0 else -k)
    if coset != start_coset:
        raise RewriteError("word has odd degree and does not lie in the subgroup")
    return FreeWord(2 * m - 1, _reduce(out))


def cover_presentation(p: Presentation) -> CoverPresentation:
    if not degree_zero_check(p):
        raise RewriteError("relators must have exponent sum zero")
    m = p.generator_count
    if m < 1:
        raise RewriteError("need at least one meridian generator")
    x1 = FreeWord(m, (1,))
    rels = []
    for r in p.relators:
        rels.append(rs_rewrite(r))
        rels.append(rs_rewrite(x1 * r * ~x1))
    for i in range(1, m + 1):
        square = FreeWord(m, (i, i))
        rels.append(rs_rewrite(square))
        rels.append(rs_rewrite(FreeWord(m, (1, i, i, -1))))
    return CoverPresentation(Presentation(2 * m - 1, tuple(rels)), schreier_labels(m))


# --- Todd-Coxeter ---------------------------------------------------------

@dataclass(frozen=True)
class Order:
    n: int

    def __str__(self):
        return f"Order({self.n})"


@dataclass(frozen=True)
class Inconclusive:
    cosets_used: int

    def __str__(self):
        return f"Inconclusive({self.cosets_used})"


EnumerationResult = Union[Order, Inconclusive]


class _Exhausted(Exception):
    pass


class _CosetTable:
    """HLT coset enumeration over the trivial subgroup."""

    def __init__(self, ngens: int, max_cosets: int):
        self.ncols = 2 * ngens
        self.max_cosets = max_cosets
        self.table = [[-1] * self.ncols]
        self.parent = [0]
        self.live = 1

    def is_live(self, c):
        return self.parent[c] == c

    def rep(self, c):
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def define(self, c, x):
        if self.live >= self.max_cosets:
            raise _Exhausted
        d = len(self.table)
        self.table.append([-1] * self.ncols)
        self.parent.append(d)
        self.live += 1
        self.table[c][x] = d
        self.table[d][x ^ 1] = c
        return d

    def _merge(self, a, b, queue):
        a, b = self.rep(a), self.rep(b)
        if a != b:
            a, b = min(a, b), max(a, b)
            self.parent[b] = a
            queue.append(b)

    def coincidence(self, a, b):
        table = self.table
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = table[e][x]
                if f < 0:
                    continue
                table[f][x ^ 1] = -1
                e1, f1 = self.rep(e), self.rep(f)
                if table[e1][x] >= 0:
                    self._merge(f1, table[e1][x], queue)
                elif table[f1][x ^ 1] >= 0:
                    self._merge(e1, table[f1][x ^ 1], queue)
                else:
                    table[e1][x] = f1
                    table[f1][x ^ 1] = e1
        self.live -= len(queue)

    def scan_and_fill(self, c, word):
        table = self.table
        f, b = c, c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] >= 0:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] >= 0:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            self.define(f, word[i])


def coset_enumerate(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> EnumerationResult:
    """Order of the presented group if the coset table closes within ``max_cosets`` live cosets."""
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    n = p.generator_count
    if n == 0:
        return Order(1)
    rels = [[2 * (abs(a) - 1) + (a < 0) for a in r.letters] for r in p.relators if r.letters]
    ct = _CosetTable(n, max_cosets)
    try:
        c = 0
        while c < len(ct.table):
            if ct.is_live(c):
                for rel in rels:
                    ct.scan_and_fill(c, rel)
                    if not ct.is_live(c):
                        break
                else:
                    for x in range(ct.ncols):
                        if ct.table[c][x] < 0:
                            ct.define(c, x)
            c += 1
    except _Exhausted:
        return Inconclusive(len(ct.table))
    return Order(ct.live)
