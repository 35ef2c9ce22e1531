"""The coupled-operation structure over associative arrays.

A semilink bundles the three array operations with their identities:
(arrays, ⊕, ⊗, ⊕.⊗, 0, 1, I), where 1 is the all-ones array and I the
diagonal ones array over some key set.  The two element-wise operations
and array multiplication interact in limited but useful ways:

* 1 ⊗ I = I ⊗ 1 = I  and  1 ⊕.⊗ I = I ⊕.⊗ 1 = 1;
* multiplying an array whose sparsity pattern is a permutation by that
  pattern (element-wise) leaves it unchanged;
* ⊕.⊗ against a ones array projects onto rows or columns;
* ⊕.⊗ distributes over ⊗ when the left operands share one permutation
  pattern, and a hybrid associativity holds in trivial cases;
* products annihilate to 0 when the operands' key sets do not overlap.

The ``check_*`` functions evaluate one law on concrete arrays and
return a :class:`SemilinkReport` instead of asserting, so they serve
both as the property-test engine and as a CLI diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .array import AssocArray, identity, key_rank, ones
from .semiring import SemiringSpec

#: Reserved column (or row) key naming the collapsed dimension of a projection.
ALL_KEY = ":all"


@dataclass(frozen=True)
class SemilinkReport:
    """Outcome of one law check; `witness` holds the offending arrays iff it failed."""

    name: str
    holds: bool
    witness: Optional[tuple[AssocArray, ...]] = None

    def __post_init__(self):
        assert self.holds == (self.witness is None)


def _report(name, holds, *arrays) -> SemilinkReport:
    return SemilinkReport(name, holds, None if holds else tuple(arrays))


def project_rows(a: AssocArray) -> AssocArray:
    """⊕-reduce each row into a single `:all` column.

    C(k1, :all) = ⊕ over k2 of A(k1, k2), folding in ascending column
    order; 0 results are elided.  Equals A ⊕.⊗ ones(col_keys(A), [:all]).
    """
    s = a.semiring
    acc = {}
    for (r, _c), v in a.items():  # canonical order: per-row fold ascends by column
        acc[r] = s._add(acc[r], v) if r in acc else v
    return AssocArray(s, {(r, ALL_KEY): v for r, v in acc.items()})


def project_cols(a: AssocArray) -> AssocArray:
    """⊕-reduce each column into a single `:all` row (mirror of project_rows)."""
    s = a.semiring
    acc = {}
    by_col = sorted(a.items(), key=lambda kv: (key_rank(kv[0][1]), key_rank(kv[0][0])))
    for (_r, c), v in by_col:  # per-column fold ascends by row
        acc[c] = s._add(acc[c], v) if c in acc else v
    return AssocArray(s, {(ALL_KEY, c): v for c, v in acc.items()})


def is_permutation_pattern(a: AssocArray) -> bool:
    """True iff every stored row key and column key appears in exactly one entry."""
    n = a.nnz()
    return len(a.row_keys()) == n and len(a.col_keys()) == n


def check_identity_interplay(s: SemiringSpec, k: list) -> SemilinkReport:
    """Verify 1 ⊗ I = I ⊗ 1 = I and 1 ⊕.⊗ I = I ⊕.⊗ 1 = 1 over keys k."""
    one = ones(k, k, s)
    eye = identity(k, s)
    holds = (
        one.ewise_mult(eye) == eye
        and eye.ewise_mult(one) == eye
        and one.array_mult(eye) == one
        and eye.array_mult(one) == one
    )
    return _report("identity_interplay", holds, one, eye)


def check_permutation_identity(a: AssocArray) -> SemilinkReport:
    """For permutation-pattern A, verify A ⊗ P = P ⊗ A = A with P = |A|0."""
    p = a.zero_norm()
    holds = a.ewise_mult(p) == a and p.ewise_mult(a) == a
    return _report("permutation_identity", holds, a, p)


def check_perm_distributivity(
    a1: AssocArray, a2: AssocArray, b: AssocArray, c: AssocArray
) -> SemilinkReport:
    """Verify (A1 ⊗ A2) ⊕.⊗ (B ⊗ C) = (A1 ⊕.⊗ B) ⊗ (A2 ⊕.⊗ C).

    Holds when A1 and A2 share a single permutation sparsity pattern
    (and A1 ⊗ A2 preserves it).
    """
    lhs = a1.ewise_mult(a2).array_mult(b.ewise_mult(c))
    rhs = a1.array_mult(b).ewise_mult(a2.array_mult(c))
    return _report("perm_distributivity", lhs == rhs, a1, a2, b, c)


def check_hybrid_associativity(
    a: AssocArray, b: AssocArray, c: AssocArray
) -> SemilinkReport:
    """Verify A ⊗ (B ⊕.⊗ C) = (A ⊗ B) ⊕.⊗ C.

    Only guaranteed in the trivial cases: A a ones array covering the
    support of both B and B ⊕.⊗ C, or C an identity covering col_keys(B).
    """
    lhs = a.ewise_mult(b.array_mult(c))
    rhs = a.ewise_mult(b).array_mult(c)
    return _report("hybrid_associativity", lhs == rhs, a, b, c)


def check_annihilation(a: AssocArray, b: AssocArray, c: AssocArray) -> SemilinkReport:
    """Assert the key-overlap annihilation laws that apply to (A, B, C).

    A ⊗ (B ⊕.⊗ C) must be 0 when row(A) ∩ row(B), col(A) ∩ col(C), or
    col(B) ∩ row(C) is empty; (A ⊗ B) ⊕.⊗ C must be 0 when any of
    row(A) ∩ row(B), col(A) ∩ col(B), col(A) ∩ row(C), or
    col(B) ∩ row(C) is empty.  Conditions that do not apply are skipped,
    so the report holds vacuously for overlapping inputs.
    """
    row_a, col_a = set(a.row_keys()), set(a.col_keys())
    row_b, col_b = set(b.row_keys()), set(b.col_keys())
    row_c, col_c = set(c.row_keys()), set(c.col_keys())

    left_conditions = [
        not (row_a & row_b),
        not (col_a & col_c),
        not (col_b & row_c),
    ]
    right_conditions = [
        not (row_a & row_b),
        not (col_a & col_b),
        not (col_a & row_c),
        not (col_b & row_c),
    ]

    holds = True
    if any(left_conditions):
        holds = holds and a.ewise_mult(b.array_mult(c)).nnz() == 0
    if any(right_conditions):
        holds = holds and a.ewise_mult(b).array_mult(c).nnz() == 0
    return _report("annihilation", holds, a, b, c)
