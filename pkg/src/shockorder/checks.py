"""Numeric verifiers for the hypotheses of the ordering theorems.

Every checker returns a :class:`CheckReport`. ``worst_violation`` is the
largest shortfall against the required inequality after subtracting the
tolerance, so a check holds exactly when ``worst_violation <= 0``.
Tolerances combine a configurable epsilon with a round-off allowance sized
from the magnitudes entering each comparison.

These are falsification tools on finite grids, not proofs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Any, Optional, Sequence

import numpy as np

from . import generators as g
from . import lifetimes as lt
from .system import SystemSpec, compared_function

ADDITIVITY_EPS = 1e-9
FD_EPS = 1e-7
FD_STEP = 1e-5
# second differences use a wider relative step; 1e-5 leaves them dominated by round-off
FD2_STEP = 1e-3

_MACH = np.finfo(float).eps


class Additivity(str, enum.Enum):
    SUPER = "super"
    SUB = "sub"


class Curvature(str, enum.Enum):
    CONVEX = "convex"
    CONCAVE = "concave"


class Transform(str, enum.Enum):
    T_PSI_PRIME_ONE_MINUS_T = "t*psi'(1-t)"
    T_PSI_PRIME_T = "t*psi'(t)"


class Direction(str, enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"


class SchurTarget(str, enum.Enum):
    SCHUR_CONVEX = "schur_convex"
    SCHUR_CONCAVE = "schur_concave"


@dataclass(frozen=True)
class CheckReport:
    name: str
    holds: bool
    worst_violation: float
    witness: Any = None
    detail: str = ""

    def as_dict(self):
        w = self.witness
        if isinstance(w, np.ndarray):
            w = w.tolist()
        elif isinstance(w, tuple):
            w = [v.tolist() if isinstance(v, np.ndarray) else v for v in w]
        return {
            "name": self.name,
            "holds": self.holds,
            "worst_violation": self.worst_violation,
            "witness": w,
            "detail": self.detail,
        }


def _report(name, shortfall, witnesses, detail=""):
    """Fold per-point shortfalls (already net of tolerance) into a report."""
    shortfall = np.asarray(shortfall, dtype=float).ravel()
    if shortfall.size == 0:
        return CheckReport(name, True, 0.0, None, detail)
    shortfall = np.where(np.isnan(shortfall), np.inf, shortfall)
    k = int(np.argmax(shortfall))
    worst = float(shortfall[k])
    return CheckReport(name, worst <= 0, worst, witnesses(k), detail)


def default_additivity_grid():
    return np.geomspace(1e-4, 30.0, 64)


def check_additivity(gen1, gen2, grid=None, mode=Additivity.SUPER, eps=ADDITIVITY_EPS):
    """Test super- or sub-additivity of ``psi2 o phi1`` on all grid pairs."""
    mode = Additivity(mode)
    x = np.sort(np.asarray(default_additivity_grid() if grid is None else grid, dtype=float))
    i, j = np.triu_indices(x.size)
    a, b = x[i], x[j]
    fa = np.asarray(g.composite(gen1, gen2, a))
    fb = np.asarray(g.composite(gen1, gen2, b))
    fab = np.asarray(g.composite(gen1, gen2, a + b))
    slack = fab - fa - fb
    tol = eps + 8 * _MACH * (np.abs(fab) + np.abs(fa) + np.abs(fb))
    shortfall = (-slack if mode is Additivity.SUPER else slack) - tol
    return _report(
        f"psi2∘phi1 {mode.value}-additive",
        shortfall,
        lambda k: (float(a[k]), float(b[k])),
        f"{gen1} -> {gen2}",
    )


def check_convexity_route(gen1, gen2, grid=None, curvature=Curvature.CONVEX, eps=FD_EPS):
    """Convexity (concavity) of ``psi2 o phi1`` with a zero intercept.

    Convex with ``f(0) = 0`` implies super-additive; concave with ``f(0) = 0``
    implies sub-additive. Curvature is judged from consecutive slopes on the
    (possibly non-uniform) grid.
    """
    curvature = Curvature(curvature)
    x = np.unique(np.asarray(default_additivity_grid() if grid is None else grid, dtype=float))
    f = np.asarray(g.composite(gen1, gen2, x))
    h = np.diff(x)
    s = np.diff(f) / h
    ds = np.diff(s)
    mag = np.abs(f[:-2]) + np.abs(f[1:-1]) + np.abs(f[2:])
    noise = 8 * _MACH * mag / np.minimum(h[:-1], h[1:])
    tol = eps * np.maximum(1.0, np.maximum(np.abs(s[:-1]), np.abs(s[1:]))) + noise
    shortfall = (-ds if curvature is Curvature.CONVEX else ds) - tol
    f0 = float(g.composite(gen1, gen2, 0.0))
    shortfall = np.append(shortfall, abs(f0) - eps)
    mid = np.append(x[1:-1], 0.0)
    return _report(
        f"psi2∘phi1 {curvature.value} with f(0)=0",
        shortfall,
        lambda k: float(mid[k]),
        f"{gen1} -> {gen2}; class tested: {curvature.value}",
    )


def default_t_grid():
    return np.linspace(0.001, 0.999, 999)


def t_psi_transform(gen, transform, t, magnitude=False):
    t = np.asarray(t, dtype=float)
    if Transform(transform) is Transform.T_PSI_PRIME_ONE_MINUS_T:
        v = t * np.asarray(g.psi_prime(gen, 1.0 - t))
    else:
        v = t * np.asarray(g.psi_prime(gen, t))
    return np.abs(v) if magnitude else v


def check_t_psi_transform(gen, transform, direction, t_grid=None, eps=FD_EPS, magnitude=False):
    """Monotonicity of ``t psi'(1-t)`` or ``t psi'(t)`` on ``(0, 1)``.

    With ``magnitude=True`` the absolute value ``t |psi'(.)|`` is tested
    instead of the signed (non-positive) transform.
    """
    transform = Transform(transform)
    direction = Direction(direction)
    t = np.sort(np.asarray(default_t_grid() if t_grid is None else t_grid, dtype=float))
    if np.any(t <= 0) or np.any(t >= 1):
        raise ValueError("t grid must lie strictly inside (0, 1)")
    v = t_psi_transform(gen, transform, t, magnitude)
    d = np.diff(v)
    tol = eps * np.maximum(1.0, np.maximum(np.abs(v[:-1]), np.abs(v[1:])))
    shortfall = (-d if direction is Direction.INCREASING else d) - tol
    label = transform.value.replace("psi'", "|psi'|") if magnitude else transform.value
    return _report(
        f"{label} {direction.value}",
        shortfall,
        lambda k: float(t[k]),
        str(gen),
    )


def default_x_grid():
    return np.geomspace(0.05, 20.0, 25)


def default_theta_grid():
    return np.geomspace(0.2, 20.0, 25)


def check_sf_curvature(fam, x_grid=None, theta_grid=None, expect=None, eps=FD_EPS):
    """Monotonicity of ``theta -> sf`` and curvature of ``theta -> log sf``.

    ``expect`` defaults to the family's analytic tag.
    """
    expect = lt.curvature_tag(fam) if expect is None else expect
    xs = np.asarray(default_x_grid() if x_grid is None else x_grid, dtype=float)
    ths = np.asarray(default_theta_grid() if theta_grid is None else theta_grid, dtype=float)
    X, T = np.meshgrid(xs, ths, indexing="ij")

    h1 = np.minimum(FD_STEP * np.maximum(1.0, T), T / 2)
    up = np.asarray(lt.sf(fam, X, T + h1))
    dn = np.asarray(lt.sf(fam, X, T - h1))
    d1 = up - dn
    tol1 = eps * h1 + 4 * _MACH * (up + dn)
    if expect.monotone is lt.Monotone.INCREASING:
        mono = -d1 - tol1
    else:
        mono = d1 - tol1

    h2 = np.minimum(FD2_STEP * T, T / 2)
    lp = np.asarray(lt.log_sf(fam, X, T + h2))
    l0 = np.asarray(lt.log_sf(fam, X, T))
    lm = np.asarray(lt.log_sf(fam, X, T - h2))
    curv = (lp - 2 * l0 + lm) / h2**2
    tol2 = eps + 8 * _MACH * (np.abs(lp) + 2 * np.abs(l0) + np.abs(lm)) / h2**2
    if expect.log_curvature is lt.LogCurvature.LOG_CONCAVE:
        bend = curv - tol2
    else:
        bend = -curv - tol2

    shortfall = np.maximum(mono, bend)
    return _report(
        f"sf {expect} in theta",
        shortfall,
        lambda k: (float(X.ravel()[k]), float(T.ravel()[k])),
        str(fam),
    )


def sample_dplus(lo, hi, n, count, rng):
    """``count`` random vectors in D+ built from sorted uniform draws."""
    return -np.sort(-rng.uniform(lo, hi, (count, n)), axis=1)


def check_schur_condition(
    spec_template: SystemSpec,
    target=SchurTarget.SCHUR_CONVEX,
    beta_grid: Optional[Sequence] = None,
    x_probe=(0.5, 2.0, 10.0),
    eps=FD_EPS,
    samples=32,
    seed=0,
):
    """Sign of ``(b_i - b_j)(dL/db_i - dL/db_j)`` for the system function
    ``L(b)``: the CDF of a parallel system or the survival of a series one,
    with the template's generator, family and shocks.

    Without ``beta_grid``, ``samples`` vectors are drawn in D+ over a range
    bracketing the template parameters. Partial derivatives are central
    finite differences.
    """
    target = SchurTarget(target)
    n = spec_template.n
    if beta_grid is None:
        lo = float(np.min(spec_template.params)) / 2
        hi = float(np.max(spec_template.params)) * 2
        betas = sample_dplus(lo, hi, n, samples, np.random.default_rng(seed))
    else:
        betas = np.atleast_2d(np.asarray(beta_grid, dtype=float))
    xs = np.atleast_1d(np.asarray(x_probe, dtype=float))
    iu, ju = np.triu_indices(n, 1)

    rows, where = [], []
    for b in betas:
        h = FD_STEP * np.maximum(1.0, np.abs(b))
        grad = np.empty((xs.size, n))
        for k in range(n):
            bp, bm = b.copy(), b.copy()
            bp[k] += h[k]
            bm[k] -= h[k]
            lp = compared_function(replace(spec_template, params=bp), xs)
            lm = compared_function(replace(spec_template, params=bm), xs)
            grad[:, k] = (np.asarray(lp) - np.asarray(lm)) / (2 * h[k])
        gap = b[iu] - b[ju]
        expr = gap * (grad[:, iu] - grad[:, ju])
        tol = eps * np.maximum(1.0, np.abs(gap)) + np.abs(gap) * 4 * _MACH / h.min()
        rows.append((-expr if target is SchurTarget.SCHUR_CONVEX else expr) - tol)
        where.extend((tuple(float(v) for v in b), float(x), (int(i), int(j))) for x in xs for i, j in zip(iu, ju))
    shortfall = np.concatenate([r.ravel() for r in rows]) if rows else np.array([])
    return _report(
        f"L {target.value}",
        shortfall,
        lambda k: where[k],
        f"{spec_template.generator}, {spec_template.family}, {spec_template.structure.value}",
    )
