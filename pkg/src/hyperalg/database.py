"""Relational tables as set-valued associative arrays, and select queries.

A table ingests into an array over the union.intersect semiring: row
keys are sequence IDs, column keys are field names, and each nonempty
cell holds the singleton set of its text.  The single-condition select

    select k(1),...,k(n) from T where k(i) = v

is provided in two provably equivalent forms: direct row filtering, and
the pure-algebra pipeline that builds a row mask out of array products
with identity/ones arrays and applies it element-wise.  Condition
matching is nonempty set intersection, so a multi-valued cell {red,blue}
matches v = {red}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .array import ALL, AssocArray, Key, build, identity, ones
from .errors import FormatError
from .semiring import UNIVERSE, Value, make_semiring, set_intersect
from .tsv import format_triples, parse_key

_SET_SEMIRING = make_semiring("union.intersect")


@dataclass(frozen=True)
class TableArray:
    """A relational table held as a set-valued associative array."""

    array: AssocArray

    def col_keys(self) -> list[Key]:
        return self.array.col_keys()

    def row_keys(self) -> list[Key]:
        return self.array.row_keys()


def ingest_tsv(lines: Iterable[str]) -> TableArray:
    """Load a header+rows TSV table into a set-valued array.

    The first line names the fields.  A leading `id` field supplies row
    keys; otherwise rows are keyed by 1-based line number.  Cell text t
    becomes the singleton set {t}; empty cells produce no entry, so
    sparse tables stay sparse.  Ragged rows raise FormatError with the
    offending file line number.
    """
    it = iter(lines)
    try:
        header_line = next(it)
    except StopIteration:
        raise FormatError("empty table: missing header line") from None
    fields = header_line.rstrip("\n").rstrip("\r").split("\t")
    has_id = bool(fields) and fields[0] == "id"
    triples = []
    for seq, line in enumerate(it, start=1):
        cells = line.rstrip("\n").rstrip("\r").split("\t")
        if len(cells) != len(fields):
            raise FormatError(
                f"row has {len(cells)} cells, header has {len(fields)}", line=seq + 1
            )
        if has_id:
            row_key = parse_key(cells[0])
            data = zip(fields[1:], cells[1:])
        else:
            row_key = seq
            data = zip(fields, cells)
        for col, text in data:
            if text != "":
                triples.append((row_key, col, frozenset({text})))
    return TableArray(build(triples, _SET_SEMIRING))


def _matches(cell: Value, v: Value) -> bool:
    # absent cells read back as the empty set and never match
    inter = set_intersect(cell, v)
    return inter is UNIVERSE or bool(inter)


def select_direct(table: TableArray, cols: list[Key], cond_col: Key, v: Value) -> AssocArray:
    """Rows whose `cond_col` cell intersects v, restricted to `cols`."""
    v = _SET_SEMIRING.check(v)
    a = table.array
    rows = [r for r in a.row_keys() if _matches(a.get(r, cond_col), v)]
    return a.index(rows, cols)


def select_semilink(table: TableArray, cols: list[Key], cond_col: Key, v: Value) -> AssocArray:
    """The same select computed purely with array algebra.

    Pipeline: pick the condition column with ⊕.⊗ against an identity,
    keep matching entries with a scalar ∩ v, spread the surviving rows
    over every table column with ⊕.⊗ against a ones array, zero-norm the
    mask to the universe set, and apply it element-wise to the table.
    Extensionally equal to :func:`select_direct` on every input.
    """
    v = _SET_SEMIRING.check(v)
    a = table.array
    s = a.semiring
    picked = a.array_mult(identity([cond_col], s))
    matched = picked.scalar_mult(v)
    spread = matched.array_mult(ones([cond_col], a.col_keys(), s))
    mask = spread.zero_norm(UNIVERSE)
    selected = mask.ewise_mult(a)
    return selected.index(ALL, cols)


def export_tsv(a: AssocArray) -> str:
    """Canonical triple TSV for any array (see :mod:`hyperalg.tsv`)."""
    return format_triples(a)
