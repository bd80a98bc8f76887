"""One-parameter component survival laws.

The ordering parameter ``theta`` is always the scale-like argument; the
Weibull and log-logistic exponents are fixed per family. Weibull uses the
rate form ``exp(-theta * x**shape)`` rather than ``exp(-(x / scale)**shape)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError


class SurvivalKind(str, enum.Enum):
    EXPONENTIAL_MEAN = "exponential_mean"
    WEIBULL_SCALE_RATE = "weibull_scale_rate"
    LOG_LOGISTIC_SCALE = "log_logistic_scale"


class Monotone(str, enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"


class LogCurvature(str, enum.Enum):
    LOG_CONCAVE = "log_concave"
    LOG_CONVEX = "log_convex"


@dataclass(frozen=True)
class CurvatureTag:
    """Behaviour of ``theta -> sf(x; theta)`` at every fixed ``x``."""

    monotone: Monotone
    log_curvature: LogCurvature

    def __post_init__(self):
        object.__setattr__(self, "monotone", Monotone(self.monotone))
        object.__setattr__(self, "log_curvature", LogCurvature(self.log_curvature))
        pair = (self.monotone, self.log_curvature)
        if pair not in (
            (Monotone.INCREASING, LogCurvature.LOG_CONCAVE),
            (Monotone.DECREASING, LogCurvature.LOG_CONVEX),
        ):
            raise DomainError(f"unsupported curvature pairing {pair}")

    def __str__(self):
        return f"{self.monotone.value}+{self.log_curvature.value}"


INCREASING_LOG_CONCAVE = CurvatureTag(Monotone.INCREASING, LogCurvature.LOG_CONCAVE)
DECREASING_LOG_CONVEX = CurvatureTag(Monotone.DECREASING, LogCurvature.LOG_CONVEX)


@dataclass(frozen=True)
class SurvivalFamily:
    kind: SurvivalKind
    fixed_shape: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", SurvivalKind(self.kind))
        if self.kind is SurvivalKind.EXPONENTIAL_MEAN:
            if self.fixed_shape is not None:
                raise DomainError("exponential family takes no shape")
            return
        if self.fixed_shape is None:
            raise DomainError(f"{self.kind.value} needs a fixed shape")
        shape = float(self.fixed_shape)
        if not np.isfinite(shape) or shape <= 0:
            raise DomainError(f"shape must be > 0, got {self.fixed_shape!r}")
        object.__setattr__(self, "fixed_shape", shape)

    def __str__(self):
        if self.fixed_shape is None:
            return self.kind.value
        return f"{self.kind.value}(shape={self.fixed_shape:g})"

    @classmethod
    def exponential(cls):
        return cls(SurvivalKind.EXPONENTIAL_MEAN)

    @classmethod
    def weibull(cls, shape):
        return cls(SurvivalKind.WEIBULL_SCALE_RATE, shape)

    @classmethod
    def log_logistic(cls, shape):
        return cls(SurvivalKind.LOG_LOGISTIC_SCALE, shape)


def _args(x, theta):
    x = np.asarray(x, dtype=float)
    theta = np.asarray(theta, dtype=float)
    if np.any(np.isnan(x)) or np.any(x < 0):
        raise DomainError("lifetime argument must be >= 0")
    if np.any(np.isnan(theta)) or np.any(theta <= 0):
        raise DomainError("parameter must be > 0")
    return x, theta


def _out(value, x, theta):
    return value.item() if np.ndim(x) == 0 and np.ndim(theta) == 0 else value


def log_sf(fam: SurvivalFamily, x, theta):
    x, theta = _args(x, theta)
    if fam.kind is SurvivalKind.EXPONENTIAL_MEAN:
        out = -x / theta
    elif fam.kind is SurvivalKind.WEIBULL_SCALE_RATE:
        out = -theta * x**fam.fixed_shape
    else:
        out = -np.log1p((x / theta) ** fam.fixed_shape)
    return _out(np.asarray(out, dtype=float), x, theta)


def sf(fam: SurvivalFamily, x, theta):
    """Survival probability ``P(X > x)`` for parameter ``theta``."""
    return _out(np.exp(np.asarray(log_sf(fam, x, theta))), x, theta)


def dlog_sf_dtheta(fam: SurvivalFamily, x, theta):
    """Analytic ``d/dtheta log sf(x; theta)``."""
    x, theta = _args(x, theta)
    if fam.kind is SurvivalKind.EXPONENTIAL_MEAN:
        out = x / theta**2
    elif fam.kind is SurvivalKind.WEIBULL_SCALE_RATE:
        out = -(x**fam.fixed_shape) * np.ones_like(theta)
    else:
        b = fam.fixed_shape
        # beta x^b / (theta (theta^b + x^b)), written with r = (x/theta)^b
        r = (x / theta) ** b
        out = b * r / (theta * (1 + r))
    return _out(np.asarray(out, dtype=float), x, theta)


def inverse_sf(fam: SurvivalFamily, u, theta):
    """Lifetime ``x`` with ``sf(x; theta) = u`` for ``u`` in ``(0, 1]``."""
    u = np.asarray(u, dtype=float)
    theta = np.asarray(theta, dtype=float)
    if np.any(np.isnan(u)) or np.any(u <= 0) or np.any(u > 1):
        raise DomainError("survival level must lie in (0, 1]")
    if np.any(theta <= 0):
        raise DomainError("parameter must be > 0")
    if fam.kind is SurvivalKind.EXPONENTIAL_MEAN:
        out = -theta * np.log(u)
    elif fam.kind is SurvivalKind.WEIBULL_SCALE_RATE:
        out = (-np.log(u) / theta) ** (1.0 / fam.fixed_shape)
    else:
        out = theta * ((1.0 - u) / u) ** (1.0 / fam.fixed_shape)
    return _out(np.asarray(out, dtype=float), u, theta)


def quantile(fam: SurvivalFamily, q, theta):
    """Lifetime below which a fraction ``q`` of the mass lies."""
    return inverse_sf(fam, 1.0 - np.asarray(q, dtype=float), theta)


def curvature_tag(fam: SurvivalFamily) -> CurvatureTag:
    if fam.kind is SurvivalKind.WEIBULL_SCALE_RATE:
        return DECREASING_LOG_CONVEX
    return INCREASING_LOG_CONCAVE
