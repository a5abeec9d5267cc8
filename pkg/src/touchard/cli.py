"""Command-line front end.

Subcommands: ``verify`` (identities, round trips, censuses), ``map``
(apply a bijection to word lines), ``enumerate``, ``count``, ``render``,
and ``sample``.  Words travel in the one-letter-per-character encoding
(U/D/G/R/H), one word per line.

Exit codes: 0 success, 1 verification or validation failure, 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import IO, Iterable

from .bijections import (
    catalan_to_g,
    drop_restriction,
    format_motzkin_decomposition,
    format_touchard_decomposition,
    g_to_catalan,
    motzkin_merge,
    motzkin_split,
    pair_decode,
    pair_encode,
    parse_motzkin_decomposition,
    parse_touchard_decomposition,
    raise_restriction,
    touchard_merge,
    touchard_split,
)
from .counting import catalan, motzkin_count, motzkin_rhs, touchard_rhs
from .render import render_ascii, render_svg, to_drawing
from .words import (
    Letter,
    enumerate_dyck,
    enumerate_g,
    enumerate_g_restricted,
    enumerate_motzkin,
    parse_letters,
    sample_dyck,
    validate_dyck,
    validate_g,
    validate_g_restricted,
    validate_motzkin,
)


@dataclass(frozen=True)
class VerifyConfig:
    """Bounds and output mode for the verification sweep."""

    max_identity_n: int = 200
    max_census_n: int = 9
    max_roundtrip_len: int = 10
    output_format: str = "text"


def cmd_verify(cfg: VerifyConfig, out: IO[str], err: IO[str]) -> int:
    """Run identity checks, exhaustive round trips, and stratified censuses.

    Prints one line per check, ordered by check index; returns 0 only if
    every check passes, otherwise names the first failure on ``err``.
    """
    first_failure: str | None = None

    def emit(ok: bool, text: str, record: dict) -> None:
        nonlocal first_failure
        if cfg.output_format == "ndjson":
            record["ok"] = ok
            out.write(json.dumps(record) + "\n")
        else:
            out.write(text + "\n")
        if not ok and first_failure is None:
            first_failure = text

    for n in range(cfg.max_identity_n + 1):
        for which, report in (("touchard", touchard_rhs(n)), ("motzkin", motzkin_rhs(n))):
            emit(
                report.holds,
                f"identity={which} {report.format_line()}",
                {
                    "check": "identity",
                    "identity": which,
                    "n": n,
                    "lhs": report.lhs,
                    "rhs": report.rhs,
                    "holds": report.holds,
                    "terms": list(report.per_k_terms),
                },
            )

    for n in range(cfg.max_roundtrip_len + 1):
        dyck = list(enumerate_dyck(n + 1))
        restricted = list(enumerate_g_restricted(n + 1))
        grown = list(enumerate_g(n))
        checks = (
            (
                "pair",
                all(pair_decode(pair_encode(w)) == w for w in dyck)
                and all(pair_encode(pair_decode(v)) == v for v in restricted),
                len(dyck) + len(restricted),
            ),
            (
                "restriction",
                all(raise_restriction(drop_restriction(v)) == v for v in restricted)
                and all(drop_restriction(raise_restriction(u)) == u for u in grown),
                len(restricted) + len(grown),
            ),
            (
                "touchard_split",
                all(touchard_merge(touchard_split(u)) == u for u in grown),
                len(grown),
            ),
            (
                "motzkin_split",
                all(motzkin_merge(motzkin_split(u)) == u for u in grown),
                len(grown),
            ),
        )
        for name, ok, words in checks:
            emit(
                ok,
                f"roundtrip={name} n={n} words={words} ok={'true' if ok else 'false'}",
                {"check": "roundtrip", "bijection": name, "n": n, "words": words},
            )

    for n in range(cfg.max_census_n + 1):
        by_updown = [0] * (n // 2 + 1)
        by_core_len = [0] * (n + 1)
        for u in enumerate_g(n):
            by_updown[touchard_split(u).core.semilength] += 1
            by_core_len[len(motzkin_split(u).core)] += 1
        for which, counts, report in (
            ("touchard", by_updown, touchard_rhs(n)),
            ("motzkin", by_core_len, motzkin_rhs(n)),
        ):
            expected = list(report.per_k_terms)
            ok = counts == expected
            emit(
                ok,
                "census={} n={} counts={} terms={} ok={}".format(
                    which,
                    n,
                    ",".join(map(str, counts)),
                    ",".join(map(str, expected)),
                    "true" if ok else "false",
                ),
                {"check": "census", "identity": which, "n": n, "counts": counts, "terms": expected},
            )

    if first_failure is not None:
        err.write(f"verify: first failing check: {first_failure}\n")
        return 1
    return 0


_MAP_FUNCTIONS = {
    "encode": lambda line: str(pair_encode(validate_dyck(parse_letters(line)))),
    "decode": lambda line: str(pair_decode(validate_g_restricted(parse_letters(line)))),
    "drop": lambda line: str(drop_restriction(validate_g_restricted(parse_letters(line)))),
    "raise": lambda line: str(raise_restriction(validate_g(parse_letters(line)))),
    "c2g": lambda line: str(catalan_to_g(validate_dyck(parse_letters(line)))),
    "g2c": lambda line: str(g_to_catalan(validate_g(parse_letters(line)))),
    "tsplit": lambda line: format_touchard_decomposition(
        touchard_split(validate_g(parse_letters(line)))
    ),
    "tmerge": lambda line: str(touchard_merge(parse_touchard_decomposition(line))),
    "msplit": lambda line: format_motzkin_decomposition(
        motzkin_split(validate_g(parse_letters(line)))
    ),
    "mmerge": lambda line: str(motzkin_merge(parse_motzkin_decomposition(line))),
}

MAP_DIRECTIONS = tuple(_MAP_FUNCTIONS)


def cmd_map(direction: str, lines: Iterable[str], out: IO[str], err: IO[str]) -> int:
    """Apply one bijection per input line; failed lines go to ``err``."""
    apply = _MAP_FUNCTIONS[direction]
    status = 0
    for number, line in enumerate(lines, start=1):
        try:
            out.write(apply(line.strip()) + "\n")
        except ValueError as exc:
            err.write(f"line {number}: {exc}\n")
            status = 1
    return status


_ENUMERATORS = {
    "dyck": enumerate_dyck,
    "g": enumerate_g,
    "grestricted": enumerate_g_restricted,
    "motzkin": enumerate_motzkin,
}


def cmd_enumerate(kind: str, length: int, count_only: bool, out: IO[str]) -> int:
    """List every word of the family (for dyck, ``length`` is the semilength)."""
    stream = _ENUMERATORS[kind](length)
    if count_only:
        out.write(f"{sum(1 for _ in stream)}\n")
    else:
        for word in stream:
            out.write(f"{word}\n")
    return 0


def cmd_count(which: str, n: int, out: IO[str]) -> int:
    """Print one exact number or one identity-report line."""
    if which == "catalan":
        out.write(f"{catalan(n)}\n")
    elif which == "motzkin":
        out.write(f"{motzkin_count(n)}\n")
    elif which == "touchard-rhs":
        out.write(touchard_rhs(n).format_line() + "\n")
    else:
        out.write(motzkin_rhs(n).format_line() + "\n")
    return 0


def _parse_any_word(line: str):
    letters = parse_letters(line)
    if Letter.FLAT in letters:
        return validate_motzkin(letters)
    return validate_g(letters)


def cmd_render(fmt: str, line: str, unit: int, out: IO[str]) -> int:
    """Draw one word as ASCII art or as an SVG document."""
    drawing = to_drawing(_parse_any_word(line))
    if fmt == "ascii":
        out.write(render_ascii(drawing) + "\n")
    else:
        out.write(render_svg(drawing, unit) + "\n")
    return 0


def cmd_sample(kind: str, length: int, seed: int, out: IO[str]) -> int:
    """Emit one uniform word (for dyck, ``length`` is the semilength).

    G-words are drawn as ``catalan_to_g`` of a uniform Dyck word; the
    map is a bijection, so the result is uniform too.
    """
    if kind == "dyck":
        out.write(f"{sample_dyck(length, seed)}\n")
    else:
        out.write(f"{catalan_to_g(sample_dyck(length + 1, seed))}\n")
    return 0


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="touchard",
        description="Dyck and bicolored Motzkin words, their bijections, and the identities they prove.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check identities, round trips, and censuses")
    p.add_argument("--max-identity-n", type=_nonneg, default=200)
    p.add_argument("--max-census-n", type=_nonneg, default=9)
    p.add_argument("--max-roundtrip-len", type=_nonneg, default=10)
    p.add_argument("--format", choices=("text", "ndjson"), default="text")

    p = sub.add_parser("map", help="apply a bijection to each input line")
    p.add_argument("direction", choices=MAP_DIRECTIONS)
    p.add_argument("--word", help="single input line (default: read stdin)")

    p = sub.add_parser("enumerate", help="list all words of a family")
    p.add_argument("kind", choices=tuple(_ENUMERATORS))
    p.add_argument("--length", type=_nonneg, required=True,
                   help="word length (semilength for dyck)")
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("count", help="exact counts and identity reports")
    p.add_argument("which", choices=("catalan", "motzkin", "touchard-rhs", "motzkin-rhs"))
    p.add_argument("n", type=_nonneg)

    p = sub.add_parser("render", help="draw one word")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--word", help="word to draw (default: first stdin line)")
    p.add_argument("--unit", type=_positive, default=20, help="pixels per step (svg)")

    p = sub.add_parser("sample", help="draw one uniform random word")
    p.add_argument("kind", choices=("dyck", "g"))
    p.add_argument("--length", type=_nonneg, required=True,
                   help="word length (semilength for dyck)")
    p.add_argument("--seed", type=_seed, default=0)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            cfg = VerifyConfig(
                max_identity_n=args.max_identity_n,
                max_census_n=args.max_census_n,
                max_roundtrip_len=args.max_roundtrip_len,
                output_format=args.format,
            )
            return cmd_verify(cfg, sys.stdout, sys.stderr)
        if args.command == "map":
            lines = [args.word] if args.word is not None else sys.stdin
            return cmd_map(args.direction, lines, sys.stdout, sys.stderr)
        if args.command == "enumerate":
            return cmd_enumerate(args.kind, args.length, args.count_only, sys.stdout)
        if args.command == "count":
            return cmd_count(args.which, args.n, sys.stdout)
        if args.command == "render":
            line = args.word if args.word is not None else sys.stdin.readline()
            return cmd_render(args.format, line.strip(), args.unit, sys.stdout)
        return cmd_sample(args.kind, args.length, args.seed, sys.stdout)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
