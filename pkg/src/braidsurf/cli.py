"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 semantic validation failure,
10 when ``equal`` finds two different braids.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .abelian import abelianize
from .braid import RankMismatch, braid_equal, render_word
from .cover import DEFAULT_MAX_COSETS, Order, coset_enumerate, cover_presentation
from .factorization import (Factorization, FactorizationError, band_transposition,
                            invariants, parse_factorization, product_word)
from .finite import (DEFAULT_PANEL, cyclic, exists_surjection, fingerprint,
                     first_difference, parse_panel)
from .fixtures import variant_text
from .presentation import Presentation, complement_presentation, tietze_simplify

EXIT_OK, EXIT_USAGE, EXIT_SEMANTIC, EXIT_DIFFERENT = 0, 1, 2, 10
SIZE_BUDGET = 100_000


class UsageError(Exception):
    pass


class SemanticError(Exception):
    pass


@dataclass
class Report:
    command: str
    inputs: dict
    result: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "result": self.result,
                "versions": {"braidsurf": __version__, "report": 1}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"# {self.command}"]
        _text_lines(self.result, lines, "")
        return "\n".join(lines)


def _text_lines(value, lines, indent):
    for key, val in value.items():
        if isinstance(val, dict):
            lines.append(f"{indent}{key}:")
            _text_lines(val, lines, indent + "  ")
        elif isinstance(val, list) and val and all(isinstance(v, str) for v in val) and key == "relators":
            lines.append(f"{indent}{key}:")
            lines.extend(f"{indent}  {v}" for v in val)
        elif isinstance(val, list):
            lines.append(f"{indent}{key}: {' '.join(map(str, val)) if val else '(none)'}")
        elif isinstance(val, bool):
            lines.append(f"{indent}{key}: {'yes' if val else 'no'}")
        else:
            lines.append(f"{indent}{key}: {val}")


def _load(path: str) -> Factorization:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return parse_factorization(text)
    except FactorizationError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _panel(spec: str):
    try:
        return parse_panel(spec)
    except ValueError as exc:
        raise UsageError(f"bad panel: {exc}") from exc


def presentation_dict(p: Presentation) -> dict:
    return {"generators": p.generator_count,
            "relators": [render_word(r.letters) for r in p.relators]}


def invariants_dict(f: Factorization) -> dict:
    try:
        inv = invariants(f)
    except FactorizationError as exc:
        raise SemanticError(str(exc)) from exc
    return {
        "strands": inv.strands,
        "bands": inv.band_count,
        "euler_characteristic": inv.euler_characteristic,
        "connected": inv.connected,
        "boundary_components": inv.boundary_components,
        "genus": inv.genus,
        "transpositions": [str(band_transposition(b)) for b in f.bands],
    }


def _same_strands(f1: Factorization, f2: Factorization):
    if f1.strands != f2.strands:
        raise SemanticError(f"strand counts differ: {f1.strands} vs {f2.strands}")


def cmd_invariants(args) -> tuple[Report, int]:
    f = _load(args.file)
    return Report("invariants", {"file": args.file}, invariants_dict(f)), EXIT_OK


def cmd_equal(args) -> tuple[Report, int]:
    f1, f2 = _load(args.file1), _load(args.file2)
    _same_strands(f1, f2)
    same = braid_equal(product_word(f1), product_word(f2))
    report = Report("equal", {"file1": args.file1, "file2": args.file2}, {"same_braid": same})
    return report, EXIT_OK if same else EXIT_DIFFERENT


def cmd_pi1(args) -> tuple[Report, int]:
    f = _load(args.file)
    p = complement_presentation(f)
    if args.simplify:
        p = tietze_simplify(p, SIZE_BUDGET)
    result = {"simplified": args.simplify, "presentation": presentation_dict(p)}
    return Report("pi1", {"file": args.file, "simplify": args.simplify}, result), EXIT_OK


def _complement_fingerprint(f: Factorization, panel) -> dict:
    # simplification preserves the group, and enumeration is much cheaper afterwards
    return fingerprint(tietze_simplify(complement_presentation(f), SIZE_BUDGET), panel)


def cmd_fingerprint(args) -> tuple[Report, int]:
    f = _load(args.file)
    panel = _panel(args.panel)
    result = {"fingerprint": _complement_fingerprint(f, panel)}
    return Report("fingerprint", {"file": args.file, "panel": args.panel}, result), EXIT_OK


def cmd_compare(args) -> tuple[Report, int]:
    f1, f2 = _load(args.file1), _load(args.file2)
    _same_strands(f1, f2)
    panel = _panel(args.panel)
    inv1, inv2 = invariants_dict(f1), invariants_dict(f2)
    fp1, fp2 = _complement_fingerprint(f1, panel), _complement_fingerprint(f2, panel)
    diff = first_difference(fp1, fp2)
    topology = [k for k in inv1 if k != "transpositions"]
    result = {
        "same_braid": braid_equal(product_word(f1), product_word(f2)),
        "same_invariants": all(inv1[k] == inv2[k] for k in topology),
        "fingerprint1": fp1,
        "fingerprint2": fp2,
        "distinguished": diff is not None,
        "first_difference": None if diff is None else {
            "group": diff, "count1": fp1[diff], "count2": fp2[diff]},
    }
    inputs = {"file1": args.file1, "file2": args.file2, "panel": args.panel}
    return Report("compare", inputs, result), EXIT_OK


def cmd_cover(args) -> tuple[Report, int]:
    f = _load(args.file)
    panel = _panel(args.panel)
    if args.enumerate_max < 1:
        raise UsageError("--enumerate-max must be positive")
    cover = cover_presentation(complement_presentation(f))
    simple = tietze_simplify(cover.presentation, SIZE_BUDGET)
    outcome = coset_enumerate(simple, args.enumerate_max)
    enumeration = ({"outcome": "order", "order": outcome.n} if isinstance(outcome, Order)
                   else {"outcome": "inconclusive", "cosets_used": outcome.cosets_used})
    inv = abelianize(simple)
    result = {
        "cover_generators_raw": cover.presentation.generator_count,
        "cover_relators_raw": len(cover.presentation.relators),
        "presentation": presentation_dict(simple),
        "abelianization": {"free_rank": inv.free_rank, "torsion": list(inv.torsion),
                           "text": str(inv)},
        "fingerprint": fingerprint(simple, panel),
        "enumeration": enumeration,
        "surjects_onto_Z3": exists_surjection(simple, cyclic(3)),
    }
    inputs = {"file": args.file, "panel": args.panel, "enumerate_max": args.enumerate_max}
    return Report("cover", inputs, result), EXIT_OK


def cmd_variant(args) -> tuple[Report, int]:
    try:
        text = variant_text(args.s, args.which)
    except ValueError as exc:
        raise SemanticError(str(exc)) from exc
    try:
        Path(args.output).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot write {args.output}: {exc.strerror}") from exc
    inputs = {"s": args.s, "which": args.which, "output": args.output}
    return Report("variant", inputs, {"written": args.output, "bands": len(parse_factorization(text).bands)}), EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braidsurf", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, files=1, panel=False):
        sp = sub.add_parser(name, help=help_text)
        if files == 1:
            sp.add_argument("file")
        elif files == 2:
            sp.add_argument("file1")
            sp.add_argument("file2")
        if panel:
            sp.add_argument("--panel", default=DEFAULT_PANEL,
                            help="finite groups, e.g. 'Z2-Z6,S3,D3-D8'")
        sp.add_argument("--json", action="store_true", help="emit a JSON report")
        sp.set_defaults(func=func)
        return sp

    add("invariants", cmd_invariants, "surface invariants of a factorization")
    add("equal", cmd_equal, "decide whether two factorizations give the same braid", files=2)
    sp = add("pi1", cmd_pi1, "presentation of the complement's fundamental group")
    sp.add_argument("--simplify", action="store_true", help="apply Tietze simplification")
    add("fingerprint", cmd_fingerprint, "homomorphism counts into a panel of groups", panel=True)
    add("compare", cmd_compare, "compare two factorizations", files=2, panel=True)
    sp = add("cover", cmd_cover, "analyse the double branched cover", panel=True)
    sp.add_argument("--enumerate-max", type=int, default=DEFAULT_MAX_COSETS)
    sp = add("variant", cmd_variant, "write the a^s b a^-s variant of fixture 1 or 2", files=0)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--which", type=int, choices=(1, 2), required=True)
    sp.add_argument("-o", "--output", required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SemanticError, RankMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    print(report.to_json() if args.json else report.to_text())
    return code


if __name__ == "__main__":
    sys.exit(main())
