"""Synthesis from fully-conditioned rotation blocks kept as MCRZ primitives.

Same recursive scheme as the parity-based synthesizer, with two differences:
the generator blocks rotate the last line only when every control line is 1
(so a block touches the conditioned states of its subset instead of the flip
states), and the dictionary-ordered block system is applied without the
-1/2 factor, since a conditioned block leaves non-selected states fixed.
Blocks stay multi-controlled rotation primitives in the output; expanding
them into elementary gates is out of scope here, so totals are reported in
blocks: 2**n - 1 of them (rotations included) on generic input.
"""

from __future__ import annotations

import numpy as np

from .angles import DEFAULT_TOL
from .circuits import MCRZ, RZ, Circuit, Gate, SynthesisReport, count_gates, peephole_cancel
from .diagonal import DiagonalUnitary, tensor_split
from .errors import SynthesisError
from .obstruction import is_tensor, obstruction
from .subsets import subset_lines
from .systems import controlled_block_matrix, solve_block_angles


def controlled_rotation_gates(controls, alpha: float, n: int) -> list[Gate]:
    """One fully-conditioned rotation block on line n; the empty subset is
    the bare rotation."""
    controls = tuple(sorted(controls))
    if any(not 1 <= c <= n - 1 for c in controls):
        raise ValueError(f"controls {controls} must lie in 1..{n - 1}")
    if len(set(controls)) != len(controls):
        raise ValueError(f"duplicate control in {controls}")
    if not controls:
        return [RZ(n, alpha)]
    return [MCRZ(controls, n, alpha)]


def controlled_block_angles(n: int, mask: int, alpha: float) -> np.ndarray:
    """Induced diagonal of a fully-conditioned rotation block, as angles.

    Basis states whose masked top lines are all 1 pick up -alpha/2 or
    +alpha/2 by the last bit; every other state is untouched.
    """
    j = np.arange(1 << n)
    top, last = j >> 1, j & 1
    selected = (top & mask) == mask
    return np.where(selected, np.where(last, 0.5 * alpha, -0.5 * alpha), 0.0)


def synth_controlled(
    u: DiagonalUnitary,
    tol: float = DEFAULT_TOL,
    keep_trivial_rotations: bool = False,
) -> tuple[Circuit, SynthesisReport]:
    """Compile a diagonal into multi-controlled z-rotation blocks.

    Identical pipeline to the parity-based synthesizer: per level, solve the
    dictionary-ordered block system for angles cancelling the obstruction
    (no extra scaling here), verify the remainder splits, emit the
    empty-subset rotation plus one MCRZ per nonempty subset, recurse.
    """
    gates: list[Gate] = []
    phase = 0.0
    level = u
    while True:
        k = level.n
        if k == 1:
            t0, t1 = level.thetas
            gates.append(RZ(1, float(t1 - t0)))
            phase += 0.5 * float(t0 + t1)
            break
        psi = obstruction(level)
        system = controlled_block_matrix(k)
        alphas = solve_block_angles(system, psi)
        remainder = level.thetas
        for mask, alpha in zip(system.column_subsets, alphas):
            remainder = remainder + controlled_block_angles(k, mask, -alpha)
        tilde = DiagonalUnitary(k, remainder)
        if not is_tensor(tilde, tol):
            raise SynthesisError(
                "block angles failed to cancel the obstruction; "
                "solver or ordering convention is inconsistent"
            )
        split = tensor_split(tilde, tol)
        phase += split.phi
        gates.append(RZ(k, split.rotation_angle))
        for mask, alpha in zip(system.column_subsets, alphas):
            gates.extend(
                controlled_rotation_gates(subset_lines(mask, k - 1), float(alpha), k)
            )
        level = split.v
    circuit = peephole_cancel(
        Circuit(u.n, tuple(gates), phase),
        drop_zero_rotations=not keep_trivial_rotations,
    )
    return circuit, count_gates(circuit)
