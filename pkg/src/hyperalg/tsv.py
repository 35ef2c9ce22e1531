"""Triple TSV wire format: one `row<TAB>col<TAB>value` entry per line.

UTF-8, LF line endings.  Keys made of decimal digits (optional leading
``-``) are integers; anything else is text.  Values parse according to
the target semiring's domain: numbers for the numeric semirings, a
comma-separated string set (or the ``:universe`` token) for the set
semiring.  Export emits entries in canonical (row, col) order, so
import -> export is byte-identity on well-formed files.
"""

from __future__ import annotations

import math
import re
from typing import Iterable

from .array import AssocArray, Key, build
from .errors import FormatError
from .semiring import INF, UNIVERSE, SemiringSpec, Value

UNIVERSE_TOKEN = ":universe"

_INT_RE = re.compile(r"-?[0-9]+\Z")
_FORBIDDEN_IN_KEY = ("\t", "\n", "\r")


def parse_key(token: str) -> Key:
    if _INT_RE.match(token):
        return int(token)
    return token


def format_key(k: Key) -> str:
    if isinstance(k, str):
        if any(ch in k for ch in _FORBIDDEN_IN_KEY):
            raise FormatError(f"key {k!r} contains a tab or newline")
        return k
    return str(k)


def parse_number(token: str) -> Value:
    if _INT_RE.match(token):
        return int(token)
    try:
        x = float(token)
    except ValueError:
        raise FormatError(f"not a number: {token!r}") from None
    if math.isnan(x):
        raise FormatError("NaN is not a representable value")
    return x


def parse_value(token: str, s: SemiringSpec) -> Value:
    if s.domain == "set":
        if token == UNIVERSE_TOKEN:
            return UNIVERSE
        parts = [p for p in token.split(",") if p != ""]
        if not parts:
            raise FormatError(f"empty string set: {token!r}")
        return frozenset(parts)
    return parse_number(token)


def format_value(v: Value) -> str:
    if v is UNIVERSE:
        return UNIVERSE_TOKEN
    if isinstance(v, frozenset):
        elems = sorted(v)
        for e in elems:
            if any(ch in e for ch in ("\t", "\n", "\r", ",")):
                raise FormatError(f"set element {e!r} not representable in TSV")
        return ",".join(elems)
    if isinstance(v, float):
        if v == INF:
            return "inf"
        if v == -INF:
            return "-inf"
        return repr(v)
    return str(v)


def parse_triples(lines: Iterable[str], s: SemiringSpec, *, space_delim: bool = False) -> AssocArray:
    """Read a triple stream into an array; blank lines are ignored."""
    triples = []
    for n, line in enumerate(lines, start=1):
        line = line.rstrip("\n").rstrip("\r")
        if not line.strip():
            continue
        fields = line.split() if space_delim else line.split("\t")
        if len(fields) != 3:
            raise FormatError(f"expected 3 fields, got {len(fields)}: {line!r}", line=n)
        try:
            row = parse_key(fields[0])
            col = parse_key(fields[1])
            val = parse_value(fields[2], s)
        except FormatError as e:
            raise FormatError(f"{e.args[0]}", line=n) from None
        triples.append((row, col, val))
    return build(triples, s)


def format_triples(a: AssocArray) -> str:
    """Canonical (row, col)-sorted triple TSV text; empty array -> empty text."""
    out = []
    for (r, c), v in a.items():
        out.append(f"{format_key(r)}\t{format_key(c)}\t{format_value(v)}\n")
    return "".join(out)


def read_triples_file(path: str, s: SemiringSpec, *, space_delim: bool = False) -> AssocArray:
    try:
        with open(path, encoding="utf-8") as f:
            try:
                return parse_triples(f, s, space_delim=space_delim)
            except FormatError as e:
                raise FormatError(f"{path}: {e.args[0]}") from None
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e.strerror}") from None
