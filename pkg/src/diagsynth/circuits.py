"""Circuit intermediate representation: typed gates, cancellation, counting.

Gates are value objects on lines numbered 1..n, top to bottom. The gate set
is deliberately tiny: every kind maps basis states to basis states with a
phase, which keeps verification exact. The y-axis rotation is intentionally
absent; no algorithm here emits one.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, replace
from typing import Union

from .angles import TWO_PI, ZERO_ANGLE_EPS
from .errors import DimensionError


@dataclass(frozen=True)
class X:
    line: int


@dataclass(frozen=True)
class CNOT:
    control: int
    target: int


@dataclass(frozen=True)
class RZ:
    """Rz(alpha) = diag(exp(-i*alpha/2), exp(+i*alpha/2)) on one line."""

    line: int
    alpha: float


@dataclass(frozen=True)
class MCRZ:
    """Rz(alpha) on the target, applied only when every control line is 1."""

    controls: tuple[int, ...]
    target: int
    alpha: float


@dataclass(frozen=True)
class CDIAG:
    """diag(exp(i*theta0), exp(i*theta1)) on the target when every control
    line is 1. Carries absolute phases, unlike the rotations."""

    controls: tuple[int, ...]
    target: int
    theta0: float
    theta1: float


Gate = Union[X, CNOT, RZ, MCRZ, CDIAG]

_KINDS = {X: "x", CNOT: "cnot", RZ: "rz", MCRZ: "mcrz", CDIAG: "cdiag"}


def gate_kind(gate: Gate) -> str:
    return _KINDS[type(gate)]


def _check_line(line: int, n: int) -> None:
    if not 1 <= line <= n:
        raise DimensionError(f"line {line} outside 1..{n}")


def _validate_gate(gate: Gate, n: int) -> None:
    if isinstance(gate, X):
        _check_line(gate.line, n)
    elif isinstance(gate, CNOT):
        _check_line(gate.control, n)
        _check_line(gate.target, n)
        if gate.control == gate.target:
            raise DimensionError("CNOT control equals target")
    elif isinstance(gate, RZ):
        _check_line(gate.line, n)
    elif isinstance(gate, (MCRZ, CDIAG)):
        for c in gate.controls:
            _check_line(c, n)
        _check_line(gate.target, n)
        if gate.target in gate.controls:
            raise DimensionError("target listed among controls")
    else:
        raise TypeError(f"unknown gate {gate!r}")


@dataclass(frozen=True, eq=False)
class Circuit:
    """Ordered gate list (leftmost acts first) plus an accumulated global
    phase that the gate library cannot express."""

    n: int
    gates: tuple[Gate, ...]
    global_phase: float = 0.0

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"line count must be >= 1, got {self.n}")
        object.__setattr__(self, "gates", tuple(self.gates))
        for gate in self.gates:
            _validate_gate(gate, self.n)


@dataclass(frozen=True)
class SynthesisReport:
    """Gate tallies for a circuit. Rotations and CNOTs are elementary;
    MCRZ/CDIAG count as blocks awaiting further decomposition elsewhere."""

    counts: dict[str, int]
    elementary: int
    blocks: int
    global_phase: float
    residual: float | None = None


def count_gates(circuit: Circuit, residual: float | None = None) -> SynthesisReport:
    counts = {kind: 0 for kind in ("x", "cnot", "rz", "mcrz", "cdiag")}
    for gate in circuit.gates:
        counts[gate_kind(gate)] += 1
    return SynthesisReport(
        counts=counts,
        elementary=counts["x"] + counts["cnot"] + counts["rz"],
        blocks=counts["mcrz"] + counts["cdiag"],
        global_phase=circuit.global_phase,
        residual=residual,
    )


# ---------------------------------------------------------------------------
# peephole cancellation
# ---------------------------------------------------------------------------


def _is_trivial(gate: Gate) -> bool:
    # angle 0 mod 2*pi; math.remainder is the cheap scalar reduction
    if isinstance(gate, (RZ, MCRZ)):
        return abs(math.remainder(gate.alpha, TWO_PI)) <= ZERO_ANGLE_EPS
    if isinstance(gate, CDIAG):
        return (
            abs(math.remainder(gate.theta0, TWO_PI)) <= ZERO_ANGLE_EPS
            and abs(math.remainder(gate.theta1, TWO_PI)) <= ZERO_ANGLE_EPS
        )
    return False


def _reduce_run(run: list[Gate], key) -> list[Gate]:
    # Gates inside a run commute pairwise, so equal keys cancel in pairs:
    # keep one gate (at its first position) per key with odd multiplicity.
    if len(run) == 1:
        return run
    parity = Counter(key(g) for g in run)
    emitted = set()
    out = []
    for g in run:
        k = key(g)
        if parity[k] & 1 and k not in emitted:
            out.append(g)
            emitted.add(k)
    return out


def _cancel_pass(gates: list[Gate]) -> list[Gate]:
    out: list[Gate] = []
    i = 0
    while i < len(gates):
        g = gates[i]
        if isinstance(g, CNOT):
            # maximal run of CNOTs sharing this target; they all commute
            run = [g]
            i += 1
            while i < len(gates) and isinstance(gates[i], CNOT) and gates[i].target == g.target:
                run.append(gates[i])
                i += 1
            out.extend(_reduce_run(run, key=lambda c: c.control))
        elif isinstance(g, X):
            run = [g]
            i += 1
            while i < len(gates) and isinstance(gates[i], X):
                run.append(gates[i])
                i += 1
            out.extend(_reduce_run(run, key=lambda x: x.line))
        else:
            out.append(g)
            i += 1
    return out


def peephole_cancel(circuit: Circuit, drop_zero_rotations: bool = True) -> Circuit:
    """Cancel redundant gates until a fixed point.

    Three local rules: adjacent self-inverse pairs (CNOT/CNOT on the same
    control and target, X/X on the same line) vanish; CNOTs sharing a target
    commute, so cancelling pairs inside such a run need not be adjacent; and,
    unless disabled, rotations with angle 0 mod 2*pi (both angles, for CDIAG)
    are deleted, which typically exposes further CNOT pairs. Preserves the
    induced diagonal exactly.
    """
    gates = list(circuit.gates)
    while True:
        before = gates
        if drop_zero_rotations:
            gates = [g for g in gates if not _is_trivial(g)]
        gates = _cancel_pass(gates)
        if len(gates) == len(before):
            break
    return replace(circuit, gates=tuple(gates))
