"""
Braid words, free-group words, and the Artin action of B_m on F_m.

Letters are stored as signed 1-based integers: ``+j`` is sigma_j (or x_j),
``-j`` is its inverse.  All values are immutable; every operation returns a
fresh, freely reduced object.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class RankMismatch(ValueError):
    pass


@dataclass(frozen=True)
class FreeWord:
    """A word in the free group F_rank on x_1, ..., x_rank."""

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        for a in letters:
            if a == 0 or abs(a) > self.rank:
                raise ValueError(f"letter {a} out of range for rank {self.rank}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def gen(cls, rank: int, i: int, exp: int = 1) -> FreeWord:
        return cls(rank, (i,) * exp if exp >= 0 else (-i,) * (-exp))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        return word_concat(self, other)

    def __invert__(self) -> FreeWord:
        return word_inverse(self)

    def exponent_sum(self) -> int:
        return sum(1 if a > 0 else -1 for a in self.letters)

    def __str__(self):
        return render_word(self.letters)


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of B_strands."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("a braid needs at least 2 strands")
        letters = tuple(int(a) for a in self.letters)
        for a in letters:
            if a == 0 or abs(a) >= self.strands:
                raise ValueError(
                    f"generator index {abs(a)} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise RankMismatch("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-a for a in reversed(self.letters)))

    def __str__(self):
        return " ".join(letter_token(a) for a in self.letters) or "()"


def letter_token(a: int) -> str:
    """Letter token for a braid letter: a..y for sigma_1..sigma_25, upper case inverts."""
    ch = chr(ord("a") + abs(a) - 1)
    return ch if a > 0 else ch.upper()


def render_word(letters: Sequence[int], name: str = "x") -> str:
    if not letters:
        return "1"
    return " ".join(f"{name}{a}" if a > 0 else f"{name}{-a}^-1" for a in letters)


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def free_reduce(w: FreeWord) -> FreeWord:
    return FreeWord(w.rank, _reduce(w.letters))


def word_inverse(w: FreeWord) -> FreeWord:
    return FreeWord(w.rank, _reduce(-a for a in reversed(w.letters)))


def word_concat(u: FreeWord, v: FreeWord) -> FreeWord:
    if u.rank != v.rank:
        raise RankMismatch(f"rank {u.rank} != rank {v.rank}")
    return FreeWord(u.rank, _reduce(u.letters + v.letters))


def _images(letter: int) -> dict[int, tuple[int, ...]]:
    # Substitution for one Artin letter; generators not listed are fixed.
    j = abs(letter)
    if letter > 0:
        return {j: (j + 1,), j + 1: (j + 1, j, -(j + 1))}
    return {j: (-j, j + 1, j), j + 1: (j,)}


def _substitute(letters: Sequence[int], images: dict[int, tuple[int, ...]]) -> tuple[int, ...]:
    out: list[int] = []
    for a in letters:
        img = images.get(abs(a))
        if img is None:
            out.append(a)
        elif a > 0:
            out.extend(img)
        else:
            out.extend(-b for b in reversed(img))
    return _reduce(out)


def letter_apply(letter: int, w: FreeWord) -> FreeWord:
    """Apply the automorphism of one braid letter (``+j`` or ``-j``) to ``w``."""
    if letter == 0 or abs(letter) >= w.rank:
        raise ValueError(f"letter {letter} out of range for rank {w.rank}")
    return FreeWord(w.rank, _substitute(w.letters, _images(letter)))


def artin_apply(b: BraidWord, w: FreeWord) -> FreeWord:
    """Right action of ``b`` on ``w``: letters of ``b`` are applied left to right."""
    if b.strands != w.rank:
        raise RankMismatch(f"braid on {b.strands} strands acting on rank {w.rank}")
    letters = _reduce(w.letters)
    for a in b.letters:
        letters = _substitute(letters, _images(a))
    return FreeWord(w.rank, letters)


def braid_equal(b1: BraidWord, b2: BraidWord) -> bool:
    # The Artin action is faithful, so agreement on every generator decides equality.
    if b1.strands != b2.strands:
        raise RankMismatch("strand counts differ")
    m = b1.strands
    return all(artin_apply(b1, FreeWord(m, (i,))) == artin_apply(b2, FreeWord(m, (i,)))
               for i in range(1, m + 1))


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..degree}; ``images[k-1]`` is the image of k.

    Products are function composition: ``(p * q)(k) == p(q(k))``.
    """

    degree: int
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if len(images) != self.degree or sorted(images) != list(range(1, self.degree + 1)):
            raise ValueError(f"not a permutation of 1..{self.degree}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(degree, tuple(range(1, degree + 1)))

    @classmethod
    def transposition(cls, degree: int, i: int, j: int) -> Permutation:
        images = list(range(1, degree + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(degree, tuple(images))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise RankMismatch("degrees differ")
        return Permutation(self.degree, tuple(self(v) for v in other.images))

    def inverse(self) -> Permutation:
        images = [0] * self.degree
        for k, v in enumerate(self.images, 1):
            images[v - 1] = k
        return Permutation(self.degree, tuple(images))

    def cycles(self, include_fixed: bool = True) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            k = self(start)
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = self(k)
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self):
        cyc = self.cycles(include_fixed=False)
        if not cyc:
            return "()"
        sep = "," if self.degree > 9 else ""
        return "".join("(" + sep.join(map(str, c)) + ")" for c in cyc)


def perm_image(b: BraidWord) -> Permutation:
    p = Permutation.identity(b.strands)
    for a in b.letters:
        p = p * Permutation.transposition(b.strands, abs(a), abs(a) + 1)
    return p


def cycle_count(p: Permutation) -> int:
    return len(p.cycles())
