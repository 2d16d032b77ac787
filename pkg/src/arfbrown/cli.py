"""Command-line front end.

Commands: surface, arf-brown, majorana, tqft, selftest.  Input files hold
one statement per line (blank lines and # comments allowed):

    surface <name>: a b a' b'
    enhance <name>: a=1 b=3
    circle <name>: 0 1 0 [orientation=+|-]
    interval <name>: 1 0 [orientation=+|-]
    point <name>

An enhance line attaches Z/4 values to the named surface's intersection
form basis.  Structured output is one JSON record per line with exact
number encodings only: integers, [numerator, denominator] pairs for
rationals, {re, im} pairs for Gaussian rationals, and 4-tuples of integers
for elements of Z[zeta8].  Exit codes: 0 success, 1 failing selftest,
2 parse error, 3 precondition violation, 4 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .clifford import GaussianRational
from .errors import CapExceeded
from .majorana import ChainSetup, ground_states
from .pin1 import HasBoundary, classify_circle
from .quadform import (
    Cyc8,
    DimensionMismatch,
    Enhancement,
    NotSpin,
    ParityViolation,
    arf,
    arf_brown,
    gauss_sum,
)
from .surface import (
    GluingScheme,
    MalformedWord,
    MultipleVertices,
    analyze,
    intersection_form,
    normalize,
)
from .tqft import (
    TheoryClass,
    consistency_report,
    evaluate_circle,
    evaluate_point,
    is_stable,
    partition_function,
    surface_form,
)

__all__ = ["main", "ParseError", "PreconditionError"]


class ParseError(Exception):
    """Bad input text, reported with file, line, and column."""

    def __init__(self, message: str, path: str, line: int, col: int = 1):
        super().__init__(f"{path}:{line}:{col}: {message}")
        self.path = path
        self.line = line
        self.col = col


class PreconditionError(ValueError):
    """Structurally valid input that a command cannot evaluate."""


_WORD_TOKEN = re.compile(r"[A-Za-z][A-Za-z0-9]*'?$")
_NAME_TOKEN = re.compile(r"[A-Za-z0-9_.-]+$")


@dataclass(frozen=True)
class SurfaceStmt:
    name: str
    scheme: GluingScheme
    path: str
    line: int


@dataclass(frozen=True)
class EnhanceStmt:
    name: str
    values: tuple[tuple[str, int], ...]
    path: str
    line: int


@dataclass(frozen=True)
class ComponentStmt:
    name: str
    kind: str
    bits: tuple[int, ...]
    orientation: int
    path: str
    line: int


@dataclass(frozen=True)
class PointStmt:
    name: str
    path: str
    line: int


def _tokens(line: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


def _parse_name(tokens: list[tuple[str, int]], path: str, lineno: int) -> str:
    if len(tokens) < 2:
        raise ParseError("missing name", path, lineno, tokens[0][1])
    name, col = tokens[1]
    if not name.endswith(":"):
        raise ParseError("expected '<name>:' after the directive", path, lineno, col)
    name = name[:-1]
    if not _NAME_TOKEN.match(name):
        raise ParseError(f"bad name {name!r}", path, lineno, col)
    return name


def _parse_surface_payload(
    tokens: list[tuple[str, int]], path: str, lineno: int
) -> GluingScheme:
    word = []
    for tok, col in tokens:
        if not _WORD_TOKEN.match(tok):
            raise ParseError(f"bad letter token {tok!r}", path, lineno, col)
        if tok.endswith("'"):
            word.append((tok[:-1], -1))
        else:
            word.append((tok, 1))
    if not word:
        raise ParseError("surface word is empty", path, lineno)
    try:
        return GluingScheme(word)
    except MalformedWord as exc:
        raise ParseError(str(exc), path, lineno) from exc


def _parse_enhance_payload(
    tokens: list[tuple[str, int]], path: str, lineno: int
) -> tuple[tuple[str, int], ...]:
    values = []
    seen = set()
    for tok, col in tokens:
        label, eq, raw = tok.partition("=")
        if not eq or not label or not raw:
            raise ParseError(f"expected label=value, got {tok!r}", path, lineno, col)
        if label in seen:
            raise ParseError(f"label {label!r} assigned twice", path, lineno, col)
        seen.add(label)
        try:
            values.append((label, int(raw)))
        except ValueError:
            raise ParseError(f"bad integer {raw!r}", path, lineno, col) from None
    return tuple(values)


def _parse_bits_payload(
    tokens: list[tuple[str, int]], path: str, lineno: int
) -> tuple[tuple[int, ...], int]:
    bits = []
    orientation = 1
    for pos, (tok, col) in enumerate(tokens):
        if tok.startswith("orientation="):
            if pos != len(tokens) - 1:
                raise ParseError(
                    "orientation flag must come last", path, lineno, col
                )
            flag = tok.split("=", 1)[1]
            if flag == "+":
                orientation = 1
            elif flag == "-":
                orientation = -1
            else:
                raise ParseError(
                    f"orientation must be + or -, got {flag!r}", path, lineno, col
                )
        elif tok in ("0", "1"):
            bits.append(int(tok))
        else:
            raise ParseError(f"expected edge bit 0 or 1, got {tok!r}", path, lineno, col)
    if not bits:
        raise ParseError("component needs at least one edge bit", path, lineno)
    return tuple(bits), orientation


def parse_file(path: str) -> list:
    """All statements in a file, in order."""
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", path, 0) from exc
    statements = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0]
        tokens = _tokens(line)
        if not tokens:
            continue
        directive, col = tokens[0]
        if directive == "surface":
            name = _parse_name(tokens, path, lineno)
            scheme = _parse_surface_payload(tokens[2:], path, lineno)
            statements.append(SurfaceStmt(name, scheme, path, lineno))
        elif directive == "enhance":
            name = _parse_name(tokens, path, lineno)
            values = _parse_enhance_payload(tokens[2:], path, lineno)
            statements.append(EnhanceStmt(name, values, path, lineno))
        elif directive in ("circle", "interval"):
            name = _parse_name(tokens, path, lineno)
            bits, orientation = _parse_bits_payload(tokens[2:], path, lineno)
            statements.append(
                ComponentStmt(name, directive, bits, orientation, path, lineno)
            )
        elif directive == "point":
            if len(tokens) != 2:
                raise ParseError("usage: point <name>", path, lineno, col)
            name, ncol = tokens[1]
            if not _NAME_TOKEN.match(name):
                raise ParseError(f"bad name {name!r}", path, lineno, ncol)
            statements.append(PointStmt(name, path, lineno))
        else:
            raise ParseError(f"unknown directive {directive!r}", path, lineno, col)
    return statements


def parse_theory(text: str) -> TheoryClass:
    """`ab=<0..7> [euler=<rational or Gaussian rational>]`."""
    path = "<theory>"
    tokens = _tokens(text)
    ab = None
    euler: GaussianRational | int = 1
    for tok, col in tokens:
        key, eq, raw = tok.partition("=")
        if key == "ab" and eq:
            try:
                ab = int(raw)
            except ValueError:
                raise ParseError(f"bad integer {raw!r}", path, 1, col) from None
            if not 0 <= ab <= 7:
                raise ParseError("ab must lie in 0..7", path, 1, col)
        elif key == "euler" and eq:
            try:
                euler = _parse_gaussian(raw)
            except (ValueError, ZeroDivisionError):
                raise ParseError(
                    f"bad Gaussian rational {raw!r}", path, 1, col
                ) from None
        else:
            raise ParseError(f"unknown theory field {tok!r}", path, 1, col)
    if ab is None:
        raise ParseError("theory needs ab=<0..7>", path, 1)
    try:
        return TheoryClass(ab, euler)
    except ValueError as exc:
        raise ParseError(str(exc), path, 1) from exc


def _parse_gaussian(text: str) -> GaussianRational:
    """Literals like 2, -1/2, i, -i, 3i, 1+i, -1/2-3/4i."""
    if text.endswith("i"):
        body = text[:-1]
        re_part, im_part = "0", body
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] not in "+-/":
                re_part, im_part = body[:k], body[k:]
                break
        if im_part in ("", "+"):
            im = Fraction(1)
        elif im_part == "-":
            im = Fraction(-1)
        else:
            im = Fraction(im_part)
        return GaussianRational(Fraction(re_part), im)
    return GaussianRational(Fraction(text))


def _enc_fraction(f: Fraction) -> list[int]:
    return [f.numerator, f.denominator]


def _enc_gaussian(g: GaussianRational) -> dict:
    return {"re": _enc_fraction(g.re), "im": _enc_fraction(g.im)}


def _render_fraction(f: Fraction) -> str:
    return str(f)


def _render_gaussian(g: GaussianRational) -> str:
    if g.im == 0:
        return str(g.re)
    if g.im == 1:
        im = "i"
    elif g.im == -1:
        im = "-i"
    else:
        im = f"{g.im}i"
    if g.re == 0:
        return im
    sign = "+" if g.im > 0 else ""
    return f"{g.re}{sign}{im}"


_SURD = {
    0: "1",
    1: "(1+i)/√2",
    2: "i",
    3: "(-1+i)/√2",
    4: "-1",
    5: "(-1-i)/√2",
    6: "-i",
    7: "(1-i)/√2",
}


def _render_root(exponent: int) -> str:
    return f"ζ₈^{exponent} = {_SURD[exponent % 8]}"


def _render_cyc8(value: Cyc8) -> str:
    parts = []
    for power, coeff in enumerate(value.coefficients):
        if coeff == 0:
            continue
        unit = "" if power == 0 else ("ζ₈" if power == 1 else f"ζ₈^{power}")
        if unit and coeff == 1:
            parts.append(unit)
        elif unit and coeff == -1:
            parts.append(f"-{unit}")
        elif unit:
            parts.append(f"{coeff}{unit}")
        else:
            parts.append(str(coeff))
    if not parts:
        return "0"
    text = parts[0]
    for part in parts[1:]:
        text += part if part.startswith("-") else f"+{part}"
    return text


class Emitter:
    """Writes records as JSON lines or indented human text."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream if stream is not None else sys.stdout

    def emit(self, record: dict, human: Sequence[str]) -> None:
        if self.fmt == "structured":
            print(
                json.dumps(record, sort_keys=True, separators=(",", ":")),
                file=self.stream,
            )
        else:
            for line in human:
                print(line, file=self.stream)


def _collect(paths: Iterable[str]) -> list:
    statements = []
    for path in paths:
        statements.extend(parse_file(path))
    return statements


def cmd_surface(paths: Sequence[str], emitter: Emitter) -> int:
    for stmt in _collect(paths):
        if not isinstance(stmt, SurfaceStmt):
            continue
        info = analyze(stmt.scheme)
        nf = normalize(stmt.scheme)
        form = surface_form(stmt.scheme)
        record = {
            "record": "surface",
            "name": stmt.name,
            "word": stmt.scheme.text(),
            "euler_char": info.euler_char,
            "orientable": info.orientable,
            "betti1": info.betti1_mod2,
            "vertex_count": info.vertex_count,
            "normal_form": nf.text(),
            "form_basis": list(form.basis_labels),
            "gram": form.gram.to_lists(),
        }
        human = [
            f"surface {stmt.name}: {stmt.scheme.text()}",
            f"  euler characteristic {info.euler_char},"
            f" {'orientable' if info.orientable else 'non-orientable'},"
            f" {info.vertex_count} vertex(es), b1 = {info.betti1_mod2}",
            f"  normal form: {nf.text()}",
            f"  intersection form on {list(form.basis_labels)}:"
            f" {form.gram.to_lists()}",
        ]
        emitter.emit(record, human)
    return 0


def _attach_enhancements(
    statements: list, inline_specs: Sequence[str]
) -> list[tuple[SurfaceStmt, Enhancement, dict[str, int]]]:
    """Pair each enhancement with its surface and build it on the form."""
    surfaces: dict[str, SurfaceStmt] = {}
    order: list[SurfaceStmt] = []
    pairs: list[tuple[SurfaceStmt, EnhanceStmt]] = []
    for stmt in statements:
        if isinstance(stmt, SurfaceStmt):
            surfaces[stmt.name] = stmt
            order.append(stmt)
        elif isinstance(stmt, EnhanceStmt):
            if stmt.name not in surfaces:
                raise ParseError(
                    f"enhance names unknown surface {stmt.name!r}",
                    stmt.path,
                    stmt.line,
                )
            pairs.append((surfaces[stmt.name], stmt))
    for spec in inline_specs:
        if len(order) != 1:
            raise ParseError(
                "--enhance needs exactly one surface in the input files",
                "<enhance>",
                1,
            )
        values = _parse_enhance_payload(_tokens(spec), "<enhance>", 1)
        pairs.append((order[0], EnhanceStmt(order[0].name, values, "<enhance>", 1)))
    if not pairs:
        raise PreconditionError(
            "no enhancements given; add enhance lines or --enhance"
        )
    out = []
    for surf, enh in pairs:
        form = surface_form(surf.scheme)
        values = dict(enh.values)
        try:
            q = Enhancement(form, values)
        except ParityViolation:
            raise
        except ValueError as exc:
            raise ParseError(str(exc), enh.path, enh.line) from exc
        out.append((surf, q, values))
    return out


def cmd_arf_brown(
    paths: Sequence[str],
    inline_specs: Sequence[str],
    cap_dim: int,
    emitter: Emitter,
) -> int:
    statements = _collect(paths)
    for surf, q, values in _attach_enhancements(statements, inline_specs):
        total = gauss_sum(q, cap=cap_dim)
        root = arf_brown(q, cap=cap_dim)
        arf_value = arf(q) if q.is_even_valued() else None
        record = {
            "record": "arf-brown",
            "surface": surf.name,
            "values": {k: v % 4 for k, v in values.items()},
            "dim": q.dim,
            "exponent": root.exponent,
            "gauss_sum": list(total.coefficients),
            "arf": arf_value,
        }
        shown = " ".join(f"{k}={v % 4}" for k, v in values.items()) or "(empty)"
        human = [
            f"arf-brown {surf.name} with q: {shown}",
            f"  exponent {root.exponent}: value {_render_root(root.exponent)}",
            f"  gauss sum {_render_cyc8(total)}"
            f" (coefficients {list(total.coefficients)})",
        ]
        if arf_value is None:
            human.append("  arf invariant: undefined (odd values present)")
        else:
            human.append(f"  arf invariant {arf_value}")
        emitter.emit(record, human)
    return 0


def _expected_ground(stmt: ComponentStmt) -> tuple[int, str]:
    if stmt.kind == "circle":
        parity = "even" if sum(stmt.bits) % 2 else "odd"
        return 1, parity
    return 2, "mixed"


def cmd_majorana(paths: Sequence[str], cap_n: int, emitter: Emitter) -> int:
    for stmt in _collect(paths):
        if not isinstance(stmt, ComponentStmt):
            continue
        if stmt.kind == "circle":
            setup = ChainSetup.circle(stmt.bits, stmt.orientation)
            circle_class = classify_circle(setup.component).value
        else:
            setup = ChainSetup.interval(stmt.bits, stmt.orientation)
            circle_class = None
        report = ground_states(setup, cap=cap_n)
        want_dim, want_parity = _expected_ground(stmt)
        verdict = (
            "ok"
            if (report.ground_dimension, report.ground_parity)
            == (want_dim, want_parity)
            else "mismatch"
        )
        record = {
            "record": "majorana",
            "name": stmt.name,
            "kind": stmt.kind,
            "bits": list(stmt.bits),
            "orientation": "+" if stmt.orientation == 1 else "-",
            "circle_class": circle_class,
            "min_eigenvalue": _enc_fraction(report.min_eigenvalue),
            "ground_dimension": report.ground_dimension,
            "ground_parity": report.ground_parity,
            "spectrum": [
                [_enc_fraction(value), mult] for value, mult in report.spectrum
            ],
            "expected_dimension": want_dim,
            "expected_parity": want_parity,
            "verdict": verdict,
        }
        bits_text = " ".join(str(b) for b in stmt.bits)
        orient = "+" if stmt.orientation == 1 else "-"
        head = (
            f"majorana {stmt.name} ({stmt.kind}, bits {bits_text},"
            f" orientation {orient})"
        )
        if circle_class is not None:
            head += f": {circle_class}"
        spectrum_text = ", ".join(
            f"{_render_fraction(value)} x{mult}" for value, mult in report.spectrum
        )
        human = [
            head,
            f"  ground: dimension {report.ground_dimension},"
            f" parity {report.ground_parity},"
            f" min eigenvalue {_render_fraction(report.min_eigenvalue)}",
            f"  spectrum: {spectrum_text}",
            f"  expected dimension {want_dim}, parity {want_parity}: {verdict}",
        ]
        emitter.emit(record, human)
    return 0


def cmd_tqft(
    theory_text: str,
    paths: Sequence[str],
    cap_dim: int,
    emitter: Emitter,
) -> int:
    theory = parse_theory(theory_text)
    record = {
        "record": "theory",
        "ab_power": theory.ab_power,
        "euler_weight": _enc_gaussian(theory.euler_weight),
        "stable": is_stable(theory),
    }
    human = [
        f"theory: ab_power {theory.ab_power},"
        f" euler weight {_render_gaussian(theory.euler_weight)}"
        f" ({'stable' if is_stable(theory) else 'unstable'})"
    ]
    emitter.emit(record, human)

    statements = _collect(paths)
    enhanced = []
    if any(isinstance(s, (EnhanceStmt, SurfaceStmt)) for s in statements):
        enhanced = _attach_enhancements(statements, [])
    surface_values = []
    for stmt in statements:
        if isinstance(stmt, PointStmt):
            value = evaluate_point(theory)
            k = len(value.signature)
            emitter.emit(
                {
                    "record": "point",
                    "name": stmt.name,
                    "algebra_generators": k,
                },
                [f"point {stmt.name}: Clifford algebra on {k} generator(s)"],
            )
        elif isinstance(stmt, ComponentStmt):
            if stmt.kind == "interval":
                raise HasBoundary(
                    "tqft evaluates closed manifolds; remove interval"
                    f" {stmt.name!r}"
                )
            setup = ChainSetup.circle(stmt.bits, stmt.orientation)
            cls = classify_circle(setup.component)
            line = evaluate_circle(theory, cls)
            emitter.emit(
                {
                    "record": "circle",
                    "name": stmt.name,
                    "class": cls.value,
                    "parity": line.parity,
                },
                [f"circle {stmt.name}: {cls.value}, {line.parity} line"],
            )
    for surf, q, values in enhanced:
        value = partition_function(theory, [(surf.scheme, q)])
        surface_values.append((surf.scheme, q))
        emitter.emit(
            {
                "record": "partition",
                "name": surf.name,
                "exponent": value.root.exponent,
                "euler_factor": _enc_gaussian(value.euler_factor),
            },
            [
                f"surface {surf.name}: {_render_root(value.root.exponent)},"
                f" euler factor {_render_gaussian(value.euler_factor)}"
            ],
        )
    if surface_values:
        total = partition_function(theory, surface_values)
        emitter.emit(
            {
                "record": "total",
                "surfaces": len(surface_values),
                "exponent": total.root.exponent,
                "euler_factor": _enc_gaussian(total.euler_factor),
            },
            [
                f"total over {len(surface_values)} surface(s):"
                f" {_render_root(total.root.exponent)},"
                f" euler factor {_render_gaussian(total.euler_factor)}"
            ],
        )
    return 0


def cmd_selftest(emitter: Emitter) -> int:
    report = consistency_report()
    for check in report.checks:
        emitter.emit(
            {
                "record": "selftest",
                "name": check.name,
                "passed": check.passed,
                "detail": check.detail,
            },
            [
                f"check {check.name}:"
                f" {'pass' if check.passed else 'FAIL'} ({check.detail})"
            ],
        )
    if emitter.fmt == "human":
        print(
            "all checks passed" if report.all_passed else "some checks FAILED"
        )
    return 0 if report.all_passed else 1


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("human", "structured"),
        default="human",
        help="human text or JSON lines with exact numbers",
    )
    common.add_argument(
        "--cap-n",
        type=_positive_int,
        default=10,
        metavar="N",
        help="largest vertex count for chain spectra (default 10)",
    )
    common.add_argument(
        "--cap-dim",
        type=_positive_int,
        default=20,
        metavar="D",
        help="largest form dimension for Gauss sums (default 20)",
    )
    parser = argparse.ArgumentParser(
        prog="arfbrown",
        description="Exact invariants of surfaces, 1-manifolds, and chains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser(
        "surface", parents=[common], help="classify gluing words"
    )
    p.add_argument("paths", nargs="+", metavar="FILE")
    p = sub.add_parser(
        "arf-brown",
        parents=[common],
        help="Gauss sums and invariants of enhanced surfaces",
    )
    p.add_argument("paths", nargs="+", metavar="FILE")
    p.add_argument(
        "--enhance",
        action="append",
        default=[],
        metavar="SPEC",
        help="inline enhancement like 'a=1 b=3' (file must hold one surface)",
    )
    p = sub.add_parser(
        "majorana", parents=[common], help="chain spectra on 1-manifolds"
    )
    p.add_argument("paths", nargs="+", metavar="FILE")
    p = sub.add_parser(
        "tqft", parents=[common], help="evaluate a theory on closed objects"
    )
    p.add_argument("theory", help="theory spec like 'ab=1 euler=2'")
    p.add_argument("paths", nargs="*", metavar="FILE")
    sub.add_parser(
        "selftest", parents=[common], help="run the cross-module checks"
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    emitter = Emitter(args.format)
    try:
        if args.command == "surface":
            return cmd_surface(args.paths, emitter)
        if args.command == "arf-brown":
            return cmd_arf_brown(args.paths, args.enhance, args.cap_dim, emitter)
        if args.command == "majorana":
            return cmd_majorana(args.paths, args.cap_n, emitter)
        if args.command == "tqft":
            return cmd_tqft(args.theory, args.paths, args.cap_dim, emitter)
        return cmd_selftest(emitter)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (
        ParityViolation,
        NotSpin,
        MultipleVertices,
        HasBoundary,
        DimensionMismatch,
        PreconditionError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
