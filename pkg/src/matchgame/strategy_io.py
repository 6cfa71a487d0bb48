"""Line-oriented text files for strategy tables.

    game m=4
    alice 0000 -> 00
    bob 0-1,2-3 -> 0-1 00

The ``game`` header comes first.  Alice lines must cover every input; the
file describes a total strategy exactly when bob lines cover every matching,
and a partial one otherwise.  Blank lines are ignored, anything else is
rejected with a line/column diagnostic.
"""

from __future__ import annotations

import re

from .errors import FormatError, ValidationError
from .game import BitString, Edge, GameInstance
from .matchings import PerfectMatching, enumerate_matchings, matching_count
from .strategies import DeterministicStrategy, PartialStrategy

__all__ = ["format_strategy", "parse_strategy"]

_TOKEN = re.compile(r"\S+")


def format_strategy(strategy: PartialStrategy) -> str:
    """Render a strategy in canonical line order (header, alice, bob)."""
    lines = [f"game m={strategy.m}"]
    for xv in range(1 << strategy.m):
        x = BitString(xv, strategy.m)
        lines.append(f"alice {x} -> {strategy.alice[x]}")
    for y in enumerate_matchings(GameInstance(strategy.m)):
        entry = strategy.bob.get(y)
        if entry is not None:
            edge, b2 = entry
            lines.append(f"bob {y} -> {edge} {b2}")
    return "\n".join(lines) + "\n"


def _tokens(raw: str) -> list[tuple[str, int]]:
    return [(t.group(), t.start() + 1) for t in _TOKEN.finditer(raw)]


def _expect_count(tokens, count, line_no, raw):
    if len(tokens) > count:
        raise FormatError("unexpected trailing text", line_no, tokens[count][1])
    if len(tokens) < count:
        raise FormatError("truncated line", line_no, len(raw) + 1)


def parse_strategy(text: str) -> PartialStrategy | DeterministicStrategy:
    """Parse a strategy file; malformed input raises a positioned FormatError."""
    inst: GameInstance | None = None
    alice: dict[BitString, BitString] = {}
    bob: dict[PerfectMatching, tuple[Edge, BitString]] = {}
    line_no = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokens(raw)
        if not tokens:
            continue
        word, col = tokens[0]
        if word == "game":
            if inst is not None:
                raise FormatError("duplicate game header", line_no, col)
            _expect_count(tokens, 2, line_no, raw)
            field, fcol = tokens[1]
            match = re.fullmatch(r"m=(\d+)", field)
            if not match:
                raise FormatError("expected m=<even integer>", line_no, fcol)
            try:
                inst = GameInstance(int(match.group(1)))
            except ValidationError as err:
                raise FormatError(str(err), line_no, fcol) from err
            continue
        if inst is None:
            raise FormatError(
                "strategy file must start with 'game m=<m>'", line_no, col
            )
        if word == "alice":
            _expect_count(tokens, 4, line_no, raw)
            xtok, xcol = tokens[1]
            arrow, acol = tokens[2]
            atok, vcol = tokens[3]
            if arrow != "->":
                raise FormatError("expected '->'", line_no, acol)
            try:
                x = BitString.parse(xtok)
            except ValidationError as err:
                raise FormatError(str(err), line_no, xcol) from err
            try:
                a = BitString.parse(atok)
            except ValidationError as err:
                raise FormatError(str(err), line_no, vcol) from err
            if x.length != inst.m:
                raise FormatError(
                    f"alice input has {x.length} bits, expected {inst.m}",
                    line_no,
                    xcol,
                )
            if a.length != inst.n:
                raise FormatError(
                    f"alice output has {a.length} bits, expected {inst.n}",
                    line_no,
                    vcol,
                )
            if x in alice:
                raise FormatError(f"duplicate alice input {x}", line_no, xcol)
            alice[x] = a
        elif word == "bob":
            _expect_count(tokens, 5, line_no, raw)
            ytok, ycol = tokens[1]
            arrow, acol = tokens[2]
            etok, ecol = tokens[3]
            btok, bcol = tokens[4]
            if arrow != "->":
                raise FormatError("expected '->'", line_no, acol)
            try:
                y = PerfectMatching.parse(ytok)
            except ValidationError as err:
                raise FormatError(str(err), line_no, ycol) from err
            if y.m != inst.m:
                raise FormatError(
                    f"matching covers {y.m} vertices, expected {inst.m}",
                    line_no,
                    ycol,
                )
            try:
                edge = Edge.parse(etok)
            except ValidationError as err:
                raise FormatError(str(err), line_no, ecol) from err
            if edge not in y:
                raise FormatError(f"edge {edge} is not in {y}", line_no, ecol)
            try:
                b2 = BitString.parse(btok)
            except ValidationError as err:
                raise FormatError(str(err), line_no, bcol) from err
            if b2.length != inst.n:
                raise FormatError(
                    f"b2 has {b2.length} bits, expected {inst.n}", line_no, bcol
                )
            if y in bob:
                raise FormatError(f"duplicate bob input {y}", line_no, ycol)
            bob[y] = (edge, b2)
        else:
            raise FormatError(f"unknown directive {word!r}", line_no, col)
    if inst is None:
        raise FormatError("empty strategy file: missing 'game' header", 1, 1)
    if len(alice) != 1 << inst.m:
        raise FormatError(
            f"alice lines cover {len(alice)} of {1 << inst.m} inputs",
            line_no + 1,
            1,
        )
    cls = DeterministicStrategy if len(bob) == matching_count(inst.m) else PartialStrategy
    return cls(inst.m, alice, bob)
