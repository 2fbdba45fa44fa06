"""Diagonal computations stored as phase angles.

An n-qubit diagonal unitary multiplies basis state |j> by exp(i*theta_j).
We keep the angles, not the complex entries: the whole calculus here is
additive in the exponents, and "equal up to global phase" becomes a
subtraction. Index j is read as the bit string b_1 b_2 ... b_n with b_1 the
most significant bit; line 1 is the top wire.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .angles import DEFAULT_TOL, wrap_angle
from .errors import DimensionError, NotATensorError


@dataclass(frozen=True, eq=False)
class DiagonalUnitary:
    """Immutable n-qubit diagonal, as a vector of 2**n phase angles (radians)."""

    n: int
    thetas: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"qubit count must be >= 1, got {self.n}")
        t = np.array(self.thetas, dtype=float)
        if t.shape != (1 << self.n,):
            raise DimensionError(
                f"expected {1 << self.n} angles for n={self.n}, got shape {t.shape}"
            )
        if not np.all(np.isfinite(t)):
            raise ValueError("phase angles must be finite")
        t.setflags(write=False)
        object.__setattr__(self, "thetas", t)

    @property
    def dim(self) -> int:
        return 1 << self.n

    @classmethod
    def identity(cls, n: int) -> "DiagonalUnitary":
        return cls(n, np.zeros(1 << n))


def from_thetas(n: int, thetas) -> DiagonalUnitary:
    """Build a diagonal from its phase angles; no normalization is applied."""
    return DiagonalUnitary(n, thetas)


def compose(u1: DiagonalUnitary, u2: DiagonalUnitary) -> DiagonalUnitary:
    """Operator product of two diagonals: componentwise angle addition."""
    if u1.n != u2.n:
        raise DimensionError(f"qubit counts differ: {u1.n} vs {u2.n}")
    return DiagonalUnitary(u1.n, u1.thetas + u2.thetas)


def phase_aligned_residual(thetas1: np.ndarray, thetas2: np.ndarray) -> float:
    """Max wrapped deviation between two angle vectors after removing one
    common shift.

    The shift witness is fixed as the wrapped index-0 difference, which makes
    the result deterministic and cheap; any diagonal pair that agrees up to a
    global phase has residual ~0 under this witness.
    """
    diff = np.asarray(thetas1, dtype=float) - np.asarray(thetas2, dtype=float)
    witness = wrap_angle(diff[0])
    return float(np.abs(wrap_angle(diff - witness)).max())


def equal_up_to_global_phase(
    u1: DiagonalUnitary, u2: DiagonalUnitary, tol: float = DEFAULT_TOL
) -> bool:
    """True iff u1 = exp(i*phi) * u2 for some phi, within tol per entry."""
    if u1.n != u2.n:
        raise DimensionError(f"qubit counts differ: {u1.n} vs {u2.n}")
    return phase_aligned_residual(u1.thetas, u2.thetas) <= tol


@dataclass(frozen=True)
class TensorSplit:
    """Factorization u = v (x) w, with w further normalized as a rotation.

    ``w0, w1`` are the raw one-qubit angles. Writing the one-qubit factor as
    exp(i*phi) * Rz(alpha) gives ``rotation_angle`` = w1 - w0 and
    ``phi`` = (w0 + w1) / 2.
    """

    v: DiagonalUnitary
    w0: float
    w1: float
    phi: float

    @property
    def rotation_angle(self) -> float:
        return self.w1 - self.w0


def tensor_split(u: DiagonalUnitary, tol: float = DEFAULT_TOL) -> TensorSplit:
    """Split u into an (n-1)-qubit diagonal and a last-line one-qubit factor.

    The one-qubit factor takes the first two angles verbatim; the quotient
    diagonal is normalized so its first angle is zero, i.e.
    v_j = theta_{2j} - theta_0. Requires the pairwise-ratio chain to hold
    within tol (mod 2*pi), otherwise NotATensorError.
    """
    if u.n < 2:
        raise DimensionError("tensor_split needs at least 2 qubits")
    # chain condition: theta_{2j} - theta_{2j+1} constant mod 2*pi
    from .obstruction import is_tensor

    if not is_tensor(u, tol):
        raise NotATensorError(
            "pairwise phase ratios are not constant; no last-line tensor factor"
        )
    t = u.thetas
    w0, w1 = float(t[0]), float(t[1])
    v = DiagonalUnitary(u.n - 1, t[0::2] - t[0])
    return TensorSplit(v=v, w0=w0, w1=w1, phi=0.5 * (w0 + w1))
