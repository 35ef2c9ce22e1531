"""Hypersparse associative arrays and their operation set.

An :class:`AssocArray` maps (row key, column key) pairs to semiring
values.  Keys are signed integers or text, with a single total order
(all integers sort before all text).  Only non-0 entries are stored, so
memory scales with nnz and never with the extent of the key space; any
coordinate not stored reads back as the semiring 0.

Arrays are immutable: every operation returns a new array, and shared
arrays may be used concurrently.  ``array_mult`` reduces over the join
key in ascending key order, so results are deterministic.
"""

from __future__ import annotations

from typing import Iterable, Union

from .errors import DomainError, SemiringMismatch, ShapeError
from .semiring import SemiringSpec, Value

Key = Union[int, str]
Triple = tuple[Key, Key, Value]


class _AllType:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ALL"


#: Wildcard for :meth:`AssocArray.index`, matching every key (the ":" of
#: slice notation).
ALL = _AllType()


def key_rank(k: Key):
    """Sort key realizing the total order: integers first, then text."""
    if isinstance(k, str):
        return (1, k)
    return (0, k)


def check_key(k: Key) -> Key:
    if not isinstance(k, (int, str)):
        raise TypeError(f"keys must be int or str, got {type(k).__name__}: {k!r}")
    return k


def _coord_rank(coord):
    return (key_rank(coord[0]), key_rank(coord[1]))


class AssocArray:
    """Immutable hypersparse map (row key, col key) -> semiring value."""

    __slots__ = ("semiring", "_coords", "_map")

    def __init__(self, semiring: SemiringSpec, mapping: dict):
        """Build from a coordinate->value dict; 0 values are dropped.

        Keys and values are assumed valid; use :func:`build` for
        untrusted triples.
        """
        zero = semiring.zero
        clean = {c: v for c, v in mapping.items() if v != zero}
        self.semiring = semiring
        self._map = clean
        self._coords = tuple(sorted(clean, key=_coord_rank))

    # -- inspection ----------------------------------------------------

    def nnz(self) -> int:
        return len(self._coords)

    def row_keys(self) -> list[Key]:
        return sorted({r for r, _ in self._coords}, key=key_rank)

    def col_keys(self) -> list[Key]:
        return sorted({c for _, c in self._coords}, key=key_rank)

    def get(self, row: Key, col: Key) -> Value:
        """Stored value at (row, col), or the semiring 0 if absent."""
        return self._map.get((row, col), self.semiring.zero)

    def __contains__(self, coord) -> bool:
        return coord in self._map

    def extract(self) -> list[Triple]:
        """All stored entries as (row, col, value) triples in (row, col) order."""
        return [(r, c, self._map[(r, c)]) for r, c in self._coords]

    def items(self):
        """Iterate ((row, col), value) in canonical order."""
        for coord in self._coords:
            yield coord, self._map[coord]

    def storage_cells(self) -> int:
        """Allocated coordinate/value slots; always a small multiple of nnz."""
        return len(self._coords) + len(self._map)

    def __eq__(self, other):
        if not isinstance(other, AssocArray):
            return NotImplemented
        return (
            self.semiring.name == other.semiring.name
            and self._coords == other._coords
            and all(self._map[c] == other._map[c] for c in self._coords)
        )

    __hash__ = None

    def __repr__(self):
        return f"<AssocArray {self.semiring.name} nnz={self.nnz()}>"

    # -- structural operations -----------------------------------------

    def transpose(self) -> "AssocArray":
        return AssocArray(self.semiring, {(c, r): v for (r, c), v in self._map.items()})

    def index(self, rows, cols) -> "AssocArray":
        """Sub-array of stored entries with row in `rows` and col in `cols`.

        Either selector may be the ALL wildcard.  Keys absent from the
        array are permitted and simply match nothing.
        """
        rset = None if rows is ALL else set(rows)
        cset = None if cols is ALL else set(cols)
        out = {
            (r, c): v
            for (r, c), v in self._map.items()
            if (rset is None or r in rset) and (cset is None or c in cset)
        }
        return AssocArray(self.semiring, out)

    def same_pattern(self, other: "AssocArray") -> bool:
        """True iff the two supports coincide exactly (|A|0 = |B|0)."""
        return self._coords == other._coords

    def zero_norm(self, one: Value | None = None) -> "AssocArray":
        """Replace every stored value with `one` (default: the semiring 1)."""
        if one is None:
            one = self.semiring.one
        else:
            one = self.semiring.check(one)
        return AssocArray(self.semiring, dict.fromkeys(self._map, one))

    def retag(self, semiring: SemiringSpec) -> "AssocArray":
        """Reinterpret the same entries under another semiring.

        Every stored value must lie in the new domain and differ from
        the new 0 (storability).
        """
        for coord, v in self._map.items():
            v = semiring.check(v)
            if v == semiring.zero:
                raise DomainError(
                    f"value {v!r} at {coord} is the 0 of {semiring.name}; not storable"
                )
        return AssocArray(semiring, dict(self._map))

    # -- element-wise and array algebra ----------------------------------

    def _check_same_semiring(self, other: "AssocArray"):
        if self.semiring.name != other.semiring.name:
            raise SemiringMismatch(
                f"cannot combine {self.semiring.name} with {other.semiring.name}"
            )

    def ewise_add(self, other: "AssocArray") -> "AssocArray":
        """C(k1,k2) = A(k1,k2) ⊕ B(k1,k2); support is the union of supports."""
        self._check_same_semiring(other)
        s = self.semiring
        out = dict(self._map)
        for coord, bv in other._map.items():
            out[coord] = s._add(out[coord], bv) if coord in out else bv
        return AssocArray(s, out)

    def ewise_mult(self, other: "AssocArray") -> "AssocArray":
        """C(k1,k2) = A(k1,k2) ⊗ B(k1,k2); absent entries annihilate."""
        self._check_same_semiring(other)
        s = self.semiring
        small, big = (self, other) if len(self._map) <= len(other._map) else (other, self)
        out = {}
        for coord, v in small._map.items():
            if coord in big._map:
                a = self._map[coord]
                b = other._map[coord]
                out[coord] = s._mult(a, b)
        return AssocArray(s, out)

    def scalar_mult(self, v: Value) -> "AssocArray":
        """Each stored value x becomes x ⊗ v; 0 results are elided."""
        s = self.semiring
        v = s.check(v)
        if v == s.zero:
            return AssocArray(s, {})
        return AssocArray(s, {c: s._mult(x, v) for c, x in self._map.items()})

    def array_mult(self, other: "AssocArray") -> "AssocArray":
        """C(k1,k2) = ⊕_k A(k1,k) ⊗ B(k,k2), joined over shared keys.

        No dimensional conformance is required; the join runs over
        col_keys(A) ∩ row_keys(B).  The ⊕ reduction for each output
        cell proceeds in ascending join-key order.
        """
        self._check_same_semiring(other)
        s = self.semiring
        add_, mult_ = s._add, s._mult
        # group B by row, columns already in ascending order
        b_rows: dict[Key, list] = {}
        for (r, c) in other._coords:
            b_rows.setdefault(r, []).append((c, other._map[(r, c)]))
        out: dict[tuple, Value] = {}
        for (r, k) in self._coords:  # ascending (row, join key)
            hits = b_rows.get(k)
            if hits is None:
                continue
            a = self._map[(r, k)]
            for c, b in hits:
                coord = (r, c)
                term = mult_(a, b)
                out[coord] = add_(out[coord], term) if coord in out else term
        return AssocArray(s, out)

    # operator sugar matching the algebra
    __add__ = ewise_add
    __mul__ = ewise_mult
    __matmul__ = array_mult


# -- constructors -------------------------------------------------------


def build(triples: Iterable[Triple], s: SemiringSpec) -> AssocArray:
    """Assemble an array from (row, col, value) triples.

    Duplicate coordinates are combined with the semiring ⊕; values equal
    to the semiring 0 (before or after combining) are never stored.
    """
    acc: dict[tuple, Value] = {}
    for row, col, val in triples:
        coord = (check_key(row), check_key(col))
        val = s.check(val)
        acc[coord] = s._add(acc[coord], val) if coord in acc else val
    return AssocArray(s, acc)


def empty(s: SemiringSpec) -> AssocArray:
    """The 0 array."""
    return AssocArray(s, {})


def _check_unique(keys, what: str) -> list:
    keys = [check_key(k) for k in keys]
    if len(set(keys)) != len(keys):
        raise ShapeError(f"{what} keys must be unique: {keys!r}")
    return keys


def permutation(k1: Iterable[Key], k2: Iterable[Key], s: SemiringSpec) -> AssocArray:
    """Array with 1 at (k1[i], k2[i]); both key vectors unique, same length."""
    k1 = _check_unique(k1, "row")
    k2 = _check_unique(k2, "column")
    if len(k1) != len(k2):
        raise ShapeError(f"key vectors differ in length: {len(k1)} vs {len(k2)}")
    return AssocArray(s, {(r, c): s.one for r, c in zip(k1, k2)})


def identity(k: Iterable[Key], s: SemiringSpec) -> AssocArray:
    """Diagonal array with 1 at (k, k)."""
    k = list(k)
    return permutation(k, k, s)


def ones(k1: Iterable[Key], k2: Iterable[Key], s: SemiringSpec) -> AssocArray:
    """Full array of 1 over the explicit grid k1 x k2."""
    k1 = _check_unique(k1, "row")
    k2 = _check_unique(k2, "column")
    return AssocArray(s, {(r, c): s.one for r in k1 for c in k2})
