"""Angle arithmetic helpers shared across the package."""

from __future__ import annotations

import numpy as np

TWO_PI = 2.0 * np.pi

# Default comparison tolerance in radians. Rounding over the supported sizes
# (n <= 14) stays far below this.
DEFAULT_TOL = 1e-9

# Threshold below which a rotation angle counts as zero during cancellation.
# Deliberately tighter than DEFAULT_TOL so user-level tolerances never delete
# meaningful small rotations.
ZERO_ANGLE_EPS = 1e-12


def wrap_angle(theta):
    """Reduce an angle (or array of angles) to the principal branch (-pi, pi]."""
    w = np.remainder(theta, TWO_PI)
    return np.where(w > np.pi, w - TWO_PI, w)
