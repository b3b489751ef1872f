"""Bundled factorization files and the a^s b a^-s variant family."""

from __future__ import annotations

from importlib import resources

from .braid import BraidWord
from .factorization import Band, Factorization, format_band, parse_factorization

FIXTURES = ("auroux1.fac", "auroux2.fac", "disk_b2.fac")


def fixture_text(name: str) -> str:
    return resources.files("braidsurf").joinpath("data").joinpath(name).read_text(encoding="utf-8")


def load_fixture(name: str) -> Factorization:
    return parse_factorization(fixture_text(name))


def variant_text(s: int, which: int) -> str:
    """Fixture (1) or (2) with the last band's conjugator replaced by a^s."""
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    if s < 3 or s % 2 == 0:
        raise ValueError("s must be an odd integer >= 3")
    text = fixture_text(f"auroux{which}.fac")
    f = parse_factorization(text)
    last = f.bands[-1]
    band = Band(BraidWord(f.strands, (1,) * s), last.core)
    lines = text.splitlines(keepends=True)
    idx = max(i for i, line in enumerate(lines) if line.strip().startswith("band"))
    ending = "\n" if lines[idx].endswith("\n") else ""
    lines[idx] = format_band(band) + ending
    return "".join(lines)


def variant(s: int, which: int) -> Factorization:
    return parse_factorization(variant_text(s, which))
