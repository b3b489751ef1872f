"""
Finitely presented groups: complement presentations from band factorizations,
conjugacy in free groups, and Tietze simplification.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .braid import FreeWord, RankMismatch, _reduce, artin_apply, render_word
from .factorization import Band, Factorization

Letters = tuple[int, ...]


@dataclass(frozen=True)
class Presentation:
    generator_count: int
    relators: tuple[FreeWord, ...] = field(default=())

    def __post_init__(self):
        rels = []
        for r in self.relators:
            if not isinstance(r, FreeWord):
                r = FreeWord(self.generator_count, tuple(r))
            if r.rank != self.generator_count:
                raise RankMismatch(
                    f"relator of rank {r.rank} in a {self.generator_count}-generator presentation")
            rels.append(r)
        object.__setattr__(self, "relators", tuple(rels))

    @classmethod
    def from_letters(cls, n: int, relators: Iterable[Sequence[int]]) -> Presentation:
        return cls(n, tuple(FreeWord(n, tuple(r)) for r in relators))

    def normalized(self) -> Presentation:
        """Freely reduce relators and drop the empty ones."""
        rels = (_reduce(r.letters) for r in self.relators)
        return Presentation.from_letters(self.generator_count, [r for r in rels if r])

    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def render(self) -> str:
        return render_presentation(self)


def render_presentation(p: Presentation) -> str:
    """Generators on the first line, then one relator per line."""
    gens = ", ".join(f"x{i}" for i in range(1, p.generator_count + 1))
    lines = [f"generators: {gens}" if gens else "generators: (none)"]
    lines.extend(render_word(r.letters) for r in p.relators)
    return "\n".join(lines)


# --- van Kampen relators -------------------------------------------------

def relation_sides(b: Band) -> tuple[FreeWord, FreeWord]:
    """The two meridian words that the band identifies: ``(W_i, W_{i+1})``."""
    m = b.strands
    qinv = b.conjugator.inverse()
    return (artin_apply(qinv, FreeWord(m, (b.core,))),
            artin_apply(qinv, FreeWord(m, (b.core + 1,))))


def band_relator(b: Band, m: int | None = None) -> FreeWord:
    if m is not None and m != b.strands:
        raise RankMismatch(f"band on {b.strands} strands used with m={m}")
    left, right = relation_sides(b)
    return left * ~right


def complement_presentation(f: Factorization) -> Presentation:
    return Presentation(f.strands, tuple(band_relator(b) for b in f.bands))


# --- free-group conjugacy ------------------------------------------------

def _cyclic(letters: Letters) -> Letters:
    letters = _reduce(letters)
    lo, hi = 0, len(letters)
    while hi - lo >= 2 and letters[lo] == -letters[hi - 1]:
        lo += 1
        hi -= 1
    return letters[lo:hi]


def _inverse(letters: Letters) -> Letters:
    return tuple(-a for a in reversed(letters))


def cyclic_reduce(w: FreeWord) -> FreeWord:
    return FreeWord(w.rank, _cyclic(w.letters))


def _is_rotation(u: Letters, v: Letters) -> bool:
    if len(u) != len(v):
        return False
    if not u:
        return True
    doubled = u + u
    return any(doubled[k:k + len(v)] == v for k in range(len(u)))


def conjugate_in_free(u: FreeWord, v: FreeWord, allow_inverse: bool = False) -> bool:
    if u.rank != v.rank:
        raise RankMismatch("ranks differ")
    cu, cv = _cyclic(u.letters), _cyclic(v.letters)
    if _is_rotation(cu, cv):
        return True
    return allow_inverse and _is_rotation(cu, _inverse(cv))


def _conjugacy_key(letters: Letters) -> Letters:
    # Least rotation of the word or its inverse; equal keys iff conjugate up to inversion.
    c = _cyclic(letters)
    if not c:
        return c
    inv = _inverse(c)
    return min(min(w[k:] + w[:k] for k in range(len(w))) for w in (c, inv))


# --- Tietze simplification -----------------------------------------------

def _dedupe(rels: list[Letters]) -> list[Letters]:
    seen = set()
    out = []
    for r in rels:
        r = _cyclic(r)
        if not r:
            continue
        key = _conjugacy_key(r)
        if key not in seen:
            seen.add(key)
            out.append(r)
    return out


def _pick_elimination(n: int, rels: list[Letters]):
    # Lowest generator occurring exactly once in some relator; shortest such relator.
    for g in range(1, n + 1):
        best = None
        for idx, r in enumerate(rels):
            if sum(1 for a in r if abs(a) == g) == 1:
                if best is None or len(r) < len(rels[best]):
                    best = idx
        if best is not None:
            return g, best
    return None


def _solve_for(g: int, r: Letters) -> Letters:
    # r = A g^e B = 1  gives  g = A^-1 B^-1 (e = 1)  or  g = B A (e = -1).
    k = next(i for i, a in enumerate(r) if abs(a) == g)
    head, tail = r[:k], r[k + 1:]
    if r[k] > 0:
        return _reduce(_inverse(head) + _inverse(tail))
    return _reduce(tail + head)


def _eliminate(g: int, value: Letters, rels: list[Letters]) -> list[Letters]:
    value_inv = _inverse(value)
    out = []
    for r in rels:
        new: list[int] = []
        for a in r:
            if a == g:
                new.extend(value)
            elif a == -g:
                new.extend(value_inv)
            else:
                new.append(a - 1 if a > g else a + 1 if a < -g else a)
        out.append(_reduce(new))
    return out


def tietze_simplify(p: Presentation, size_budget: int = 100_000) -> Presentation:
    """Simplify ``p`` by Tietze moves; the result presents an isomorphic group.

    Relators are cyclically reduced and deduplicated up to conjugacy and
    inversion, and a generator appearing exactly once in some relator is
    eliminated by substitution.  Stops when nothing applies or when an
    elimination would push the total relator length past ``size_budget``.
    """
    if size_budget <= 0:
        raise ValueError("size_budget must be positive")
    n = p.generator_count
    rels = _dedupe([r.letters for r in p.relators])
    while True:
        choice = _pick_elimination(n, rels)
        if choice is None:
            break
        g, idx = choice
        value = _solve_for(g, rels[idx])
        # value never mentions g, so renumbering after substitution is safe
        value = tuple(a - 1 if a > g else a + 1 if a < -g else a for a in value)
        candidate = _dedupe(_eliminate(g, value, rels[:idx] + rels[idx + 1:]))
        if sum(map(len, candidate)) > size_budget:
            break
        rels = candidate
        n -= 1
    return Presentation.from_letters(n, rels)
