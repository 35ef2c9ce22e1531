"""Graph analytics on associative arrays.

Graphs live in adjacency arrays (nonzero A(i, j) means an edge i -> j).
Streaming event data with multi-edges and hyperedges is better captured
by a pair of incidence arrays keyed edge x vertex; projecting them with
an array multiply recovers the adjacency array.  Breadth-first search is
iterated multiplication of a frontier row vector against the adjacency
array, and element-wise add/multiply realize graph union/intersection.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .array import ALL, AssocArray, Key, build
from .errors import SemiringMismatch

#: Reserved column key used when emitting BFS depths as triples.
LEVEL_KEY = ":level"

#: Row key of the BFS frontier row vectors.
FRONTIER_KEY = ":frontier"


@dataclass(frozen=True)
class IncidencePair:
    """Edge-to-vertex incidence arrays: e_out(k, v) marks edge k leaving v,
    e_in(k, v) marks edge k entering v."""

    e_out: AssocArray
    e_in: AssocArray

    def __post_init__(self):
        if self.e_out.semiring.name != self.e_in.semiring.name:
            raise SemiringMismatch(
                "incidence arrays use different semirings: "
                f"{self.e_out.semiring.name} vs {self.e_in.semiring.name}"
            )


@dataclass(frozen=True)
class BfsResult:
    """First-visit depth per reached vertex, plus the frontier at each depth."""

    levels: dict[Key, int]
    frontiers: list[AssocArray] = field(default_factory=list)


def adjacency(inc: IncidencePair) -> AssocArray:
    """Project incidence arrays to the adjacency array A = e_outᵀ ⊕.⊗ e_in.

    Over plus.times with unit incidence values, A(i, j) counts edges
    from i to j: parallel edges accumulate and a hyperedge contributes
    the full outer product of its sources and sinks.
    """
    return inc.e_out.transpose().array_mult(inc.e_in)


def bfs(a: AssocArray, seeds: list[Key], max_depth: int | None = None) -> BfsResult:
    """Breadth-first search from `seeds` along stored edges of `a`.

    The frontier starts as a one-valued row vector over the seeds; each
    step multiplies it into the adjacency array, renormalizes values to
    1, and drops already-visited vertices, so the traversal terminates
    and values never saturate regardless of semiring.  Seeds absent from
    the graph simply produce a depth-0-only result.
    """
    if not seeds:
        raise ValueError("seeds must be nonempty")
    if len(set(seeds)) != len(seeds):
        raise ValueError("seeds must be unique")
    s = a.semiring
    frontier = build([(FRONTIER_KEY, v, s.one) for v in seeds], s)
    levels: dict[Key, int] = {v: 0 for v in seeds}
    frontiers = [frontier]
    depth = 0
    while frontier.nnz() and (max_depth is None or depth < max_depth):
        reached = frontier.array_mult(a).zero_norm()
        fresh = [v for v in reached.col_keys() if v not in levels]
        frontier = reached.index(ALL, fresh)
        if not frontier.nnz():
            break
        depth += 1
        for v in frontier.col_keys():
            levels[v] = depth
        frontiers.append(frontier)
    return BfsResult(levels, frontiers)


def graph_union(a: AssocArray, b: AssocArray) -> AssocArray:
    """Edge-set union: element-wise ⊕ of adjacency arrays."""
    return a.ewise_add(b)


def graph_intersection(a: AssocArray, b: AssocArray) -> AssocArray:
    """Edge-set intersection: element-wise ⊗ of adjacency arrays."""
    return a.ewise_mult(b)
