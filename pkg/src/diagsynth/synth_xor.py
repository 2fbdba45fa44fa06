"""Parity-controlled rotation synthesis: 2**(n+1) - 3 elementary gates.

A parity-controlled rotation block on control subset S rotates the last
line by alpha when the XOR of the S-bits is 0 and by -alpha when it is 1.
Realized as a CNOT fan from each control onto the target around one Rz, the
block costs 2|S| + 1 gates, and the obstruction it contributes is linear in
alpha with an integer coefficient vector.

One level of synthesis solves the Gray-ordered block system for the angles
that zero the input's obstruction, composes those blocks to confirm the
remainder is a tensor, emits the inverse blocks plus the split-off last-line
rotation, and recurses on the quotient diagonal. Emitting subsets in Gray
order makes every CNOT between consecutive rotations cancel except one, and
the closing fan of the last subset ({1}) contributes the single trailing
CNOT, leaving 2**(n-1) rotations and 2**(n-1) CNOTs per level:

    2**n + 2**(n-1) + ... + 4 gates, plus one final one-qubit rotation,

for 2**(n+1) - 3 in total on generic input.
"""

from __future__ import annotations

import numpy as np

from .angles import DEFAULT_TOL
from .circuits import CNOT, RZ, Circuit, Gate, SynthesisReport, count_gates, peephole_cancel
from .diagonal import DiagonalUnitary, tensor_split
from .errors import SynthesisError
from .obstruction import is_tensor, obstruction
from .subsets import subset_lines
from .systems import solve_block_angles, xor_block_matrix


def xor_rotation_gates(
    controls, alpha: float, n: int, style: str = "fan"
) -> list[Gate]:
    """Gate list for one parity-controlled rotation block on line n.

    ``fan`` surrounds the rotation with CNOTs that all target line n (the
    form whose fans cancel under Gray ordering); ``chain`` accumulates the
    parity along a CNOT ladder through the controls instead. Both cost
    2*len(controls) + 1 gates; the empty subset is the bare rotation.
    """
    controls = sorted(controls)
    if any(not 1 <= c <= n - 1 for c in controls):
        raise ValueError(f"controls {controls} must lie in 1..{n - 1}")
    if len(set(controls)) != len(controls):
        raise ValueError(f"duplicate control in {controls}")
    if not controls:
        return [RZ(n, alpha)]
    if style == "fan":
        fan = [CNOT(c, n) for c in controls]
        return fan + [RZ(n, alpha)] + fan[::-1]
    if style == "chain":
        hops = list(controls[1:]) + [n]
        ladder = [CNOT(c, t) for c, t in zip(controls, hops)]
        return ladder + [RZ(n, alpha)] + ladder[::-1]
    raise ValueError(f"unknown style {style!r}")


def xor_block_angles(n: int, mask: int, alpha: float) -> np.ndarray:
    """Induced diagonal of a parity-controlled rotation block, as angles.

    Basis state b_1..b_n picks up -alpha/2 when b_n XOR (parity over the
    masked lines) is 0 and +alpha/2 otherwise; mask 0 is the plain rotation
    on line n.
    """
    j = np.arange(1 << n)
    top, last = j >> 1, j & 1
    parity = np.zeros(1 << n, dtype=np.int64)
    bit = 0
    while mask >> bit:
        if mask >> bit & 1:
            parity ^= top >> bit & 1
        bit += 1
    return np.where(last ^ parity, 0.5 * alpha, -0.5 * alpha)


def synth_xor(
    u: DiagonalUnitary,
    tol: float = DEFAULT_TOL,
    style: str = "fan",
    keep_trivial_rotations: bool = False,
) -> tuple[Circuit, SynthesisReport]:
    """Compile a diagonal into CNOTs and z-rotations on n lines.

    Per level (current size k >= 2): solve the Gray-ordered block system for
    the angles whose blocks cancel the obstruction, split the now-tensor
    remainder, emit the empty-subset rotation first and then every nonempty
    block in Gray order, and recurse on the (k-1)-qubit quotient; a single
    rotation finishes the one-qubit base case. Unmeasurable phase accumulates
    in the circuit record rather than in gates.

    With ``keep_trivial_rotations`` the cancellation pass keeps zero-angle
    rotations, freezing the full generic layout (exactly 2**(n+1) - 3 gates)
    even on degenerate input; by default they are dropped, so tensor-product
    inputs collapse to their own n-rotation circuit.
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
        system = xor_block_matrix(k)
        alphas = -0.5 * solve_block_angles(system, psi)
        remainder = level.thetas
        for mask, alpha in zip(system.column_subsets, alphas):
            remainder = remainder + xor_block_angles(k, mask, -alpha)
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
                xor_rotation_gates(subset_lines(mask, k - 1), float(alpha), k, style)
            )
        level = split.v
    circuit = peephole_cancel(
        Circuit(u.n, tuple(gates), phase),
        drop_zero_rotations=not keep_trivial_rotations,
    )
    return circuit, count_gates(circuit)
