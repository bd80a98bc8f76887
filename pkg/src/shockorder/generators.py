"""Archimedean generator families.

Each family provides the generator ``phi`` on ``[0, inf)``, its pseudo-inverse
``psi`` on ``(0, 1]`` and both first derivatives, all vectorised over numpy
arrays. Closed forms are evaluated through ``log1p``/``expm1`` rearrangements
so that values near ``u = 1`` and far in the tail keep full precision.

Clayton uses the decreasing form ``(1 + theta x) ** (-1 / theta)``; with a
positive exponent the function increases and defines no copula.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

#: Smallest argument accepted by ``psi``. Evaluation at ``u = 0`` is rejected.
U_MIN = 1e-300

# exp(-x) underflows past this point; used to short-circuit the tail branches
_LOG_UNDERFLOW = 745.0


class Family(str, enum.Enum):
    CLAYTON = "clayton"
    GUMBEL = "gumbel"
    AMH = "amh"
    GUMBEL_BARNETT = "gumbel_barnett"
    GUMBEL_HOUGAARD = "gumbel_hougaard"


_VALIDITY = {
    Family.CLAYTON: ("theta > 0", lambda t: t > 0),
    Family.GUMBEL: ("theta >= 1", lambda t: t >= 1),
    Family.AMH: ("0 <= theta < 1", lambda t: 0 <= t < 1),
    Family.GUMBEL_BARNETT: ("0 < theta <= 1", lambda t: 0 < t <= 1),
    Family.GUMBEL_HOUGAARD: ("theta >= 1", lambda t: t >= 1),
}


@dataclass(frozen=True)
class ArchimedeanGenerator:
    """A generator family bound to one parameter value."""

    family: Family
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "theta", float(self.theta))
        rule, ok = _VALIDITY[self.family]
        if not np.isfinite(self.theta) or not ok(self.theta):
            raise DomainError(f"{self.family.value}: parameter must satisfy {rule}, got {self.theta!r}")

    def __str__(self):
        return f"{self.family.value}({self.theta:g})"

    @property
    def is_independence(self) -> bool:
        return (self.family is Family.AMH and self.theta == 0.0) or (
            self.family is Family.GUMBEL and self.theta == 1.0
        )

    def phi(self, x):
        return phi(self, x)

    def psi(self, u):
        return psi(self, u)

    def phi_prime(self, x):
        return phi_prime(self, x)

    def psi_prime(self, u):
        return psi_prime(self, u)


def _scalar_or_array(out, like):
    return out.item() if np.ndim(like) == 0 else out


def _check_x(x):
    x = np.asarray(x, dtype=float)
    if np.any(np.isnan(x)) or np.any(x < 0):
        raise DomainError("generator argument must be >= 0")
    return x


def _check_u(u, u_min):
    u = np.asarray(u, dtype=float)
    if np.any(np.isnan(u)) or np.any(u < u_min) or np.any(u > 1):
        raise DomainError(f"pseudo-inverse argument must lie in [{u_min:g}, 1]")
    return u


def log_phi(gen: ArchimedeanGenerator, x):
    """``log phi(x)``; finite well past the point where ``phi`` underflows."""
    x = _check_x(x)
    t = gen.theta
    with np.errstate(over="ignore"):
        if gen.family is Family.CLAYTON:
            out = -np.log1p(t * x) / t
        elif gen.family is Family.GUMBEL:
            out = -(x ** (1.0 / t))
        elif gen.family is Family.AMH:
            out = np.log1p(-t) - x - np.log1p(-t * np.exp(-x))
        elif gen.family is Family.GUMBEL_BARNETT:
            out = -np.expm1(x) / t
        else:
            out = -np.expm1(t * np.log1p(x))
    return _scalar_or_array(np.asarray(out, dtype=float), x)


def phi(gen: ArchimedeanGenerator, x):
    """Generator value; non-increasing from ``phi(0) = 1`` towards 0."""
    lp = np.asarray(log_phi(gen, x))
    out = np.where(lp < -_LOG_UNDERFLOW, 0.0, np.exp(np.maximum(lp, -_LOG_UNDERFLOW)))
    return _scalar_or_array(out, lp)


def psi_from_log(gen: ArchimedeanGenerator, log_u):
    """Pseudo-inverse expressed through ``log u`` (``log_u <= 0``)."""
    lu = np.asarray(log_u, dtype=float)
    if np.any(np.isnan(lu)) or np.any(lu > 0):
        raise DomainError("log-argument of the pseudo-inverse must be <= 0")
    t = gen.theta
    with np.errstate(over="ignore"):
        if gen.family is Family.CLAYTON:
            out = np.expm1(-t * lu) / t
        elif gen.family is Family.GUMBEL:
            out = (-lu) ** t
        elif gen.family is Family.AMH:
            out = np.log1p(-t * (-np.expm1(lu))) - lu
        elif gen.family is Family.GUMBEL_BARNETT:
            out = np.log1p(-t * lu)
        else:
            out = np.expm1(np.log1p(-lu) / t)
    return _scalar_or_array(np.asarray(out, dtype=float), lu)


def psi(gen: ArchimedeanGenerator, u, u_min: float = U_MIN):
    """Pseudo-inverse of ``phi`` on ``[u_min, 1]``; ``psi(1) = 0``."""
    u = _check_u(u, u_min)
    return psi_from_log(gen, np.log(u))


def psi_one_minus(gen: ArchimedeanGenerator, t, u_min: float = U_MIN):
    """``psi(1 - t)`` without forming ``1 - t`` (exact for tiny ``t``)."""
    t = np.asarray(t, dtype=float)
    if np.any(np.isnan(t)) or np.any(t < 0) or np.any(t > 1 - u_min):
        raise DomainError(f"complement argument must lie in [0, {1 - u_min:g}]")
    with np.errstate(divide="ignore"):
        log_u = np.log1p(-t)  # -inf at t = 1, giving psi(0) = inf
    return psi_from_log(gen, log_u)


def phi_prime(gen: ArchimedeanGenerator, x):
    """First derivative of ``phi``.

    Gumbel with ``theta > 1`` has an unbounded slope at ``x = 0`` and raises
    there; every other family is differentiable on the closed half-line.
    """
    x = _check_x(x)
    t = gen.theta
    if gen.family is Family.GUMBEL and t > 1 and np.any(x == 0):
        raise DomainError("gumbel phi' is unbounded at x = 0 for theta > 1")
    lp = np.asarray(log_phi(gen, x))
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        if gen.family is Family.CLAYTON:
            out = -np.exp(-(1.0 / t + 1.0) * np.log1p(t * x))
        elif gen.family is Family.GUMBEL:
            out = -(1.0 / t) * x ** (1.0 / t - 1.0) * np.exp(lp)
        elif gen.family is Family.AMH:
            e = np.exp(-x)
            out = -(1 - t) * e / (1 - t * e) ** 2
        elif gen.family is Family.GUMBEL_BARNETT:
            # phi' = -(e^x / theta) phi, combined in log space
            out = -np.exp(x + lp - np.log(t))
        else:
            out = -t * np.exp((t - 1) * np.log1p(x) + lp)
    return _scalar_or_array(np.asarray(out, dtype=float), x)


def psi_prime(gen: ArchimedeanGenerator, u, u_min: float = U_MIN):
    """First derivative of ``psi``; non-positive on ``[u_min, 1]``."""
    u = _check_u(u, u_min)
    t = gen.theta
    lu = np.log(u)
    with np.errstate(over="ignore"):
        if gen.family is Family.CLAYTON:
            out = -np.exp(-(t + 1) * lu)
        elif gen.family is Family.GUMBEL:
            out = -t * (-lu) ** (t - 1) / u
        elif gen.family is Family.AMH:
            out = -(1 - t) / (u * (1 - t + t * u))
        elif gen.family is Family.GUMBEL_BARNETT:
            out = -t / (u * (1 - t * lu))
        else:
            out = -(1.0 / t) * (1 - lu) ** (1.0 / t - 1) / u
    return _scalar_or_array(np.asarray(out, dtype=float), u)


def composite(gen1: ArchimedeanGenerator, gen2: ArchimedeanGenerator, x):
    """``psi2(phi1(x))``, evaluated in log space.

    Routing through ``log phi1`` keeps the map exact where ``phi1(x)`` itself
    would underflow (Gumbel-Barnett and Gumbel-Hougaard decay
    doubly-exponentially), so ``composite(g, g, x) == x`` to round-off.
    """
    return psi_from_log(gen2, log_phi(gen1, x))
