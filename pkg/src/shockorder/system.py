"""Lifetime distributions of shocked series and parallel systems.

Component ``j`` survives its shock with probability ``p_j``; the shocked
lifetime ``X_j I_j`` has survival ``p_j sf(x; theta_j)`` and an atom of size
``1 - p_j`` at zero. The shocked vector carries an Archimedean copula:

* parallel (maximum): ``F(x) = phi(sum_j psi(1 - p_j sf_j(x)))``, the copula
  applied to the component CDFs;
* series (minimum): ``S(x) = phi(sum_j psi(p_j sf_j(x)))``, the same
  generator used as a survival copula.

The two constructions describe different joint laws even for one generator.
Both statistics have an atom at ``x = 0`` whenever some ``p_j < 1``; every
function here returns right limits, so ``parallel_cdf(spec, 0)`` is the atom
size ``P(X_{n:n} = 0)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import generators as g
from . import lifetimes as lt
from .errors import DomainError
from .majorization import param_vector


class Structure(str, enum.Enum):
    SERIES = "series"
    PARALLEL = "parallel"


@dataclass(frozen=True, eq=False)
class SystemSpec:
    generator: g.ArchimedeanGenerator
    family: lt.SurvivalFamily
    params: np.ndarray
    shocks: np.ndarray
    structure: Structure

    def __post_init__(self):
        params = param_vector(self.params, "params")
        shocks = check_shocks(self.shocks)
        if params.shape != shocks.shape:
            raise DomainError(f"params and shocks differ in length ({params.size} vs {shocks.size})")
        params.flags.writeable = False
        shocks.flags.writeable = False
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "shocks", shocks)
        object.__setattr__(self, "structure", Structure(self.structure))

    def __eq__(self, other):
        if not isinstance(other, SystemSpec):
            return NotImplemented
        return (
            self.generator == other.generator
            and self.family == other.family
            and self.structure == other.structure
            and np.array_equal(self.params, other.params)
            and np.array_equal(self.shocks, other.shocks)
        )

    __hash__ = None

    @property
    def n(self) -> int:
        return self.params.size


def check_shocks(shocks, allow_zero=False):
    p = np.atleast_1d(np.asarray(shocks, dtype=float))
    if p.ndim != 1 or p.size == 0:
        raise DomainError("shocks must be a non-empty 1-d vector")
    for i, v in enumerate(p):
        ok = (0 <= v <= 1) if allow_zero else (0 < v <= 1)
        if not ok:
            raise DomainError(f"shocks[{i}] outside {'[0,1]' if allow_zero else '(0,1]'}")
    return p.copy()


def shocked_sf(fam: lt.SurvivalFamily, x, theta, p):
    """``p * sf(x; theta)``; survival of a component that may die in the shock."""
    p_arr = np.asarray(p, dtype=float)
    if np.any(np.isnan(p_arr)) or np.any(p_arr <= 0) or np.any(p_arr > 1):
        raise DomainError("shock survival probability must lie in (0, 1]")
    out = p_arr * np.asarray(lt.sf(fam, x, theta))
    return out.item() if np.ndim(out) == 0 else out


def _shocked_matrix(spec: SystemSpec, x):
    """Shocked survivals with shape ``x.shape + (n,)``."""
    x = np.asarray(x, dtype=float)
    return spec.shocks * np.asarray(lt.sf(spec.family, x[..., None], spec.params))


def _aggregate(gen, psi_terms):
    total = np.sum(psi_terms, axis=-1)
    return np.asarray(g.phi(gen, total))


def parallel_cdf(spec: SystemSpec, x):
    """CDF of the maximum of the shocked component lifetimes."""
    if spec.structure is not Structure.PARALLEL:
        raise DomainError("parallel_cdf needs a parallel system")
    x_arr = np.asarray(x, dtype=float)
    t = _shocked_matrix(spec, x_arr)
    # psi(0) = +inf for every supported family, so a component that is certain
    # to be alive (p_j sf_j(x) = 1) drives the aggregate to phi(inf) = 0.
    with np.errstate(divide="ignore"):
        terms = g.psi_one_minus(spec.generator, np.minimum(t, 1.0))
    out = np.clip(_aggregate(spec.generator, terms), 0.0, 1.0)
    return out.item() if x_arr.ndim == 0 else out


def series_sf(spec: SystemSpec, x):
    """Survival function of the minimum of the shocked component lifetimes."""
    if spec.structure is not Structure.SERIES:
        raise DomainError("series_sf needs a series system")
    x_arr = np.asarray(x, dtype=float)
    t = _shocked_matrix(spec, x_arr)
    # once some shocked survival underflows the system is dead: phi(psi(0)) = 0
    dead = np.any(t < g.U_MIN, axis=-1)
    terms = g.psi(spec.generator, np.maximum(t, g.U_MIN))
    out = np.where(dead, 0.0, np.clip(_aggregate(spec.generator, terms), 0.0, 1.0))
    return out.item() if x_arr.ndim == 0 else out


def system_cdf(spec: SystemSpec, x):
    """CDF of the system lifetime, whichever the structure."""
    if spec.structure is Structure.PARALLEL:
        return parallel_cdf(spec, x)
    out = 1.0 - np.asarray(series_sf(spec, x))
    return out.item() if np.ndim(out) == 0 else out


def compared_function(spec: SystemSpec, x):
    """The function whose difference the ordering results are stated in:
    the CDF for a parallel system, the survival function for a series one."""
    if spec.structure is Structure.PARALLEL:
        return parallel_cdf(spec, x)
    return series_sf(spec, x)
