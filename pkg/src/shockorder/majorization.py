"""Majorization preorders and cone membership for positive parameter vectors.

Naming follows Marshall and Olkin: ``x <=^w y`` (weak supermajorization)
compares sums of the *smallest* entries, ``x <=_w y`` (weak submajorization)
compares sums of the *largest* entries. Each predicate is written
``relation(y, x)`` and answers "is ``x`` below ``y``".
"""

from __future__ import annotations

import enum

import numpy as np

from .errors import DomainError

SUM_RTOL = 1e-9


class Cone(str, enum.Enum):
    D_PLUS = "D+"
    I_PLUS = "I+"
    BOTH = "both"
    NEITHER = "neither"

    def within(self, target: "Cone") -> bool:
        """Membership test against ``D_PLUS`` or ``I_PLUS``."""
        return self is target or self is Cone.BOTH


def param_vector(values, name="vector"):
    """Validate a strictly positive, non-empty parameter vector."""
    v = np.atleast_1d(np.asarray(values, dtype=float))
    if v.ndim != 1 or v.size == 0:
        raise DomainError(f"{name} must be a non-empty 1-d vector")
    if not np.all(np.isfinite(v)) or np.any(v <= 0):
        raise DomainError(f"{name} entries must be finite and > 0")
    return v


def _pair(y, x):
    y = param_vector(y, "y")
    x = param_vector(x, "x")
    if y.shape != x.shape:
        raise DomainError(f"length mismatch: {y.size} vs {x.size}")
    tol = SUM_RTOL * max(1.0, float(np.sum(y)), float(np.sum(x)))
    return y, x, tol


def _top_sums(v):
    return np.cumsum(np.sort(v)[::-1])


def _bottom_sums(v):
    return np.cumsum(np.sort(v))


def majorizes_m(y, x) -> bool:
    """True iff ``x`` is majorized by ``y``."""
    y, x, tol = _pair(y, x)
    if abs(np.sum(x) - np.sum(y)) > tol:
        return False
    return bool(np.all(_top_sums(x) <= _top_sums(y) + tol))


def weak_supermajorizes(y, x) -> bool:
    """True iff ``x <=^w y``: every sum of the k smallest entries of x is at
    least the matching sum for y."""
    y, x, tol = _pair(y, x)
    return bool(np.all(_bottom_sums(x) >= _bottom_sums(y) - tol))


def weak_submajorizes(y, x) -> bool:
    """True iff ``x <=_w y``: top-k sums of x never exceed those of y."""
    y, x, tol = _pair(y, x)
    return bool(np.all(_top_sums(x) <= _top_sums(y) + tol))


def cone(v) -> Cone:
    v = param_vector(v)
    d = np.diff(v)
    down = bool(np.all(d <= 0))
    up = bool(np.all(d >= 0))
    if down and up:
        return Cone.BOTH
    if down:
        return Cone.D_PLUS
    if up:
        return Cone.I_PLUS
    return Cone.NEITHER
