"""Band factorizations of braids and the surfaces they bound."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .braid import BraidWord, Permutation, cycle_count, letter_token, perm_image

MAX_STRANDS = 25


class FactorizationError(ValueError):
    """Malformed factorization text or data."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Band:
    """The factor ``Q sigma_core Q^-1``."""

    conjugator: BraidWord
    core: int

    def __post_init__(self):
        if not 1 <= self.core < self.conjugator.strands:
            raise FactorizationError(
                f"band core {self.core} out of range for {self.conjugator.strands} strands")

    @property
    def strands(self) -> int:
        return self.conjugator.strands


@dataclass(frozen=True)
class Factorization:
    strands: int
    bands: tuple[Band, ...]

    def __post_init__(self):
        object.__setattr__(self, "bands", tuple(self.bands))
        if not self.bands:
            raise FactorizationError("a factorization needs at least one band")
        for band in self.bands:
            if band.strands != self.strands:
                raise FactorizationError("band strand count differs from factorization")

    def __len__(self):
        return len(self.bands)


@dataclass(frozen=True)
class SurfaceInvariants:
    strands: int
    band_count: int
    euler_characteristic: int
    connected: bool
    boundary_components: int
    genus: Optional[int]


def band_word(b: Band) -> BraidWord:
    q = b.conjugator
    return BraidWord(q.strands, q.letters + (b.core,) + q.inverse().letters)


def band_transposition(b: Band) -> Permutation:
    return perm_image(band_word(b))


def product_word(f: Factorization) -> BraidWord:
    letters: tuple[int, ...] = ()
    for band in f.bands:
        letters += band_word(band).letters
    return BraidWord(f.strands, letters)


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x != y:
            self.parent[max(x, y)] = min(x, y)
        return x != y


def is_transitive(transpositions: list[Permutation], degree: int) -> bool:
    uf = UnionFind(degree)
    for t in transpositions:
        i, j = t.cycles(include_fixed=False)[0]
        uf.union(i - 1, j - 1)
    return len({uf.find(k) for k in range(degree)}) == 1


def invariants(f: Factorization) -> SurfaceInvariants:
    m, k = f.strands, len(f.bands)
    euler = m - k
    connected = is_transitive([band_transposition(b) for b in f.bands], m)
    boundary = cycle_count(perm_image(product_word(f)))
    genus = None
    if connected:
        twice = 2 - euler - boundary
        if twice < 0 or twice % 2:
            raise FactorizationError(
                f"inconsistent surface data: chi={euler}, boundary components={boundary}")
        genus = twice // 2
    return SurfaceInvariants(m, k, euler, connected, boundary, genus)


# --- text format ---------------------------------------------------------

_BAND_RE = re.compile(r"^band\s*\((?P<word>[^()]*)\)\s*(?P<core>\S+)$")
_NUMERIC_RE = re.compile(r"^([sS])(\d+)$")


def parse_token(token: str, strands: int, line: Optional[int] = None) -> int:
    """Signed generator index for a token (``b``, ``B``, ``s2``, ``S2``)."""
    num = _NUMERIC_RE.match(token)
    if num:
        index = int(num.group(2))
        sign = 1 if num.group(1) == "s" else -1
    elif len(token) == 1 and token.isalpha() and token.lower() <= "y":
        index = ord(token.lower()) - ord("a") + 1
        sign = 1 if token.islower() else -1
    else:
        raise FactorizationError(f"bad generator token {token!r}", line)
    if not 1 <= index < strands:
        raise FactorizationError(
            f"generator {token!r} out of range for {strands} strands", line)
    return sign * index


def parse_factorization(text: str) -> Factorization:
    strands = None
    bands = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("strands"):
            if strands is not None:
                raise FactorizationError("repeated strands declaration", lineno)
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise FactorizationError("expected 'strands <m>'", lineno)
            strands = int(parts[1])
            if not 2 <= strands <= MAX_STRANDS:
                raise FactorizationError(
                    f"strand count must be in 2..{MAX_STRANDS}", lineno)
            continue
        if strands is None:
            raise FactorizationError("missing 'strands <m>' declaration", lineno)
        match = _BAND_RE.match(line)
        if not match:
            raise FactorizationError(f"cannot parse {line!r}", lineno)
        conj = tuple(parse_token(t, strands, lineno) for t in match.group("word").split())
        core = parse_token(match.group("core"), strands, lineno)
        if core < 0:
            raise FactorizationError("band core must be a positive generator", lineno)
        bands.append(Band(BraidWord(strands, conj), core))
    if strands is None:
        raise FactorizationError("missing 'strands <m>' declaration")
    if not bands:
        raise FactorizationError("no bands given")
    return Factorization(strands, tuple(bands))


def format_band(b: Band) -> str:
    word = " ".join(letter_token(a) for a in b.conjugator.letters)
    return f"band ({word}) {letter_token(b.core)}"


def serialize_factorization(f: Factorization) -> str:
    lines = [f"strands {f.strands}"]
    lines.extend(format_band(b) for b in f.bands)
    return "\n".join(lines) + "\n"
