"""Sparse ReLU network inference in two equivalent formulations.

A layer is a sparse weight array W (neuron x neuron, nonzero W(i, j)
means a connection i -> j) and a one-row bias array b.  Inputs are row
batches Y, advanced by Y' = relu(Y W + B) where B replicates the bias
row over the active rows of Y.  The same step is also expressible as a
linear pass over two semirings: Y W over plus.times, then element-wise
+ against B and a max with 0 over max.plus.  Both paths perform the
identical scalar operations, so their outputs match exactly, entry for
entry.

The bias combines element-wise, i.e. only on the support of Y W
intersected with the replicated bias; entries the product does not
produce are never invented by the bias.
"""

from __future__ import annotations

from dataclasses import dataclass

from .array import AssocArray, build
from .errors import FormatError
from .semiring import make_semiring
from .tsv import read_triples_file

#: Reserved row key of bias rows.
BIAS_KEY = ":bias"

_S1 = make_semiring("plus.times")
_S2 = make_semiring("max.plus")


@dataclass(frozen=True)
class Layer:
    """One network layer: weight array and a `:bias`-rowed bias array."""

    weights: AssocArray
    bias: AssocArray


@dataclass(frozen=True)
class Network:
    layers: list[Layer]

    def __post_init__(self):
        if not self.layers:
            raise FormatError("a network needs at least one layer")

    @property
    def depth(self) -> int:
        return len(self.layers)


def relu(y: AssocArray) -> AssocArray:
    """Drop entries <= 0, keep positive entries unchanged.

    max(v, 0) = 0 is the unstored state, so exact zeros vanish along
    with the negatives.
    """
    return AssocArray(y.semiring, {c: v for c, v in y.items() if v > 0})


def bias_broadcast(b: AssocArray, y: AssocArray) -> AssocArray:
    """Replicate the bias row over every row of y that has stored entries.

    B(r, j) = b(:bias, j) for each active row r; the outer product of
    the row indicator of y with the bias row.
    """
    indicator = build([(r, BIAS_KEY, b.semiring.one) for r in y.row_keys()], b.semiring)
    return indicator.array_mult(b)


def step_standard(y: AssocArray, layer: Layer) -> AssocArray:
    """One inference step as ordinary arithmetic: relu(Y W + B)."""
    p = y.array_mult(layer.weights)
    bb = bias_broadcast(layer.bias, y)
    combined = {}
    for coord, v in p.items():
        if coord in bb:
            combined[coord] = v + bb.get(*coord)
    return relu(AssocArray(p.semiring, combined))


def step_semiring(y: AssocArray, layer: Layer) -> AssocArray:
    """The same step as a linear pass over the plus.times/max.plus pair.

    P = Y W over (+, x); then over (max, +): P ⊗ B adds the bias
    element-wise and ⊕ 0 takes the max with scalar 0, whose exact-0
    results are elided.  Matches :func:`step_standard` bit for bit.
    """
    p = y.array_mult(layer.weights)
    bb = bias_broadcast(layer.bias, y)
    biased = p.retag(_S2).ewise_mult(bb.retag(_S2))
    out = {}
    for coord, v in biased.items():
        v = _S2.add(v, 0)
        if v != 0:
            out[coord] = v
    return AssocArray(_S1, out)


_STEPS = {"standard": step_standard, "semiring": step_semiring}


def infer(net: Network, y0: AssocArray, mode: str = "standard") -> AssocArray:
    """Fold the chosen step across all layers; returns the final scores."""
    try:
        step = _STEPS[mode]
    except KeyError:
        raise ValueError(f"mode must be 'standard' or 'semiring', got {mode!r}") from None
    y = y0
    for layer in net.layers:
        y = step(y, layer)
    return y


def load_network(
    layer_files: list[str], bias_files: list[str], *, space_delim: bool = False
) -> Network:
    """Read per-layer weight and bias triple files, in matching order.

    Bias rows are rekeyed to `:bias` regardless of the row key used in
    the file.
    """
    if len(layer_files) != len(bias_files):
        raise FormatError(
            f"{len(layer_files)} weight files but {len(bias_files)} bias files"
        )
    layers = []
    for wf, bf in zip(layer_files, bias_files):
        w = read_triples_file(wf, _S1, space_delim=space_delim)
        braw = read_triples_file(bf, _S1, space_delim=space_delim)
        b = build([(BIAS_KEY, c, v) for _r, c, v in braw.extract()], _S1)
        layers.append(Layer(w, b))
    return Network(layers)
