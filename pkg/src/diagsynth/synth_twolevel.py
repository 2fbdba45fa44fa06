"""Two-level baseline: X-conjugated fully-controlled one-qubit diagonals.

The reference construction from classical two-level logic: for each pattern
p of the top n-1 lines, a block applies diag(exp(i*theta_{2p}),
exp(i*theta_{2p+1})) to the last line, gated on the top lines matching p.
The gating is a fully-controlled diagonal conjugated by X gates on the lines
where p has a 0 (an all-ones control fires exactly on the X-adjusted
pattern). All blocks commute, so any enumeration works; walking the X-layer
masks in Gray order merges every interior pair of layers into a single X
gate, leaving exactly 2**(n-1) X gates beside the 2**(n-1) blocks.

This is a benchmark baseline: blocks stay CDIAG primitives, and since they
carry absolute phases the output reproduces the input exactly, with no
global-phase residue.
"""

from __future__ import annotations

from .circuits import CDIAG, Circuit, Gate, SynthesisReport, X, count_gates, peephole_cancel
from .diagonal import DiagonalUnitary
from .errors import DimensionError
from .subsets import gray_subsets, subset_lines


def synth_twolevel(
    u: DiagonalUnitary, order: str = "gray"
) -> tuple[Circuit, SynthesisReport]:
    """Compile a diagonal into 2**(n-1) CDIAG blocks with X conjugation.

    ``order`` picks the enumeration of the X-conjugation masks: "gray"
    (default) starts at the empty mask and yields the merged single-X
    layout; "binary" counts masks in numeric order, which is correct but
    leaves wider X layers. Identity blocks are dropped afterwards, so the
    identity input produces an empty circuit.
    """
    if u.n < 2:
        raise DimensionError("two-level synthesis needs n >= 2")
    m = u.n - 1
    full = (1 << m) - 1
    if order == "gray":
        sequence = gray_subsets(m)
    elif order == "binary":
        sequence = list(range(1 << m))
    else:
        raise ValueError(f"unknown order {order!r}")

    controls = tuple(range(1, u.n))
    gates: list[Gate] = []
    previous = 0
    for x_mask in sequence:
        for line in subset_lines(previous ^ x_mask, m):
            gates.append(X(line))
        pattern = full ^ x_mask  # top-line pattern the conjugated block fires on
        gates.append(
            CDIAG(
                controls,
                u.n,
                float(u.thetas[2 * pattern]),
                float(u.thetas[2 * pattern + 1]),
            )
        )
        previous = x_mask
    for line in subset_lines(previous, m):
        gates.append(X(line))

    circuit = peephole_cancel(Circuit(u.n, tuple(gates), 0.0))
    return circuit, count_gates(circuit)
