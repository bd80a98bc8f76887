"""Hypothesis validation and numeric order checks for the eight theorems.

Each theorem is one row of :data:`THEOREMS`: the structure it speaks about,
which of ``alpha``/``beta`` must sit below the other and in which preorder,
the cones for ``(alpha, beta, p)``, the additivity mode of ``psi2 o phi1``,
the generator transform condition and the curvature of the component law.

Reading of the transform condition. For the series theorems the transform
``t psi'(t)`` is used with its sign. For the parallel theorems the rows that
ask for an *increasing* ``t psi'(1-t)`` (met by Clayton and AMH) are tested
on the absolute value ``t |psi'(1-t)|``, while the rows asking for a
*decreasing* one (Gumbel, Gumbel-Barnett) use the signed form. The signed
transform vanishes at ``t = 0`` and is non-positive, so it could only
increase if it were identically zero. Both parallel readings then test the
same property of the generator.

Known defect: under that reading the T3_1 and T4_1 conclusions can fail.
Example: AMH(0) vs AMH(0.01), exponential means ``alpha = (4, 4, 4)``,
``beta = (10, 1, 1)``, ``p = (0.9, 0.9, 0.9)`` satisfies every T3_1
condition, yet ``F_Y - F_X`` drops to about -0.14 near ``x = 13``.
:func:`verify_order_numeric` reports such cases; it does not hide them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from . import checks as ck
from . import generators as g
from . import lifetimes as lt
from . import majorization as mj
from .errors import DomainError
from .system import Structure, SystemSpec, compared_function


class TheoremId(str, enum.Enum):
    T3_1 = "T3_1"
    T3_2 = "T3_2"
    T3_3 = "T3_3"
    T3_4 = "T3_4"
    T4_1 = "T4_1"
    T4_2 = "T4_2"
    T4_3 = "T4_3"
    T4_4 = "T4_4"


class Relation(str, enum.Enum):
    MAJORIZATION = "m"
    WEAK_SUPER = "w"


class Who(str, enum.Enum):
    X = "X"
    Y = "Y"


class Statistic(str, enum.Enum):
    MIN = "min"
    MAX = "max"


@dataclass(frozen=True)
class OrderingConclusion:
    smaller: Who
    statistic: Statistic
    order: str = "usual stochastic order"

    def __str__(self):
        k = "1:n" if self.statistic is Statistic.MIN else "n:n"
        other = Who.X if self.smaller is Who.Y else Who.Y
        return f"{self.smaller.value}_{{{k}}} <=_st {other.value}_{{{k}}}"

    @property
    def expected_sign(self) -> int:
        """Sign of ``compared_function(Y) - compared_function(X)``."""
        # parallel compares CDFs, series compares survivals
        if self.statistic is Statistic.MAX:
            return 1 if self.smaller is Who.Y else -1
        return 1 if self.smaller is Who.X else -1


@dataclass(frozen=True)
class TheoremConditions:
    id: TheoremId
    structure: Structure
    relation: Relation
    lower: str  # "alpha" or "beta": the vector that sits below the other
    cones: Tuple[mj.Cone, mj.Cone, mj.Cone]  # alpha, beta, p
    additivity: ck.Additivity
    transform: ck.Transform
    direction: ck.Direction
    magnitude: bool
    curvature: lt.CurvatureTag
    conclusion: OrderingConclusion

    @property
    def upper(self) -> str:
        return "beta" if self.lower == "alpha" else "alpha"


D, I = mj.Cone.D_PLUS, mj.Cone.I_PLUS
_PAR, _SER = Structure.PARALLEL, Structure.SERIES
_M, _W = Relation.MAJORIZATION, Relation.WEAK_SUPER
_SUP, _SUB = ck.Additivity.SUPER, ck.Additivity.SUB
_ONE_MINUS, _T = ck.Transform.T_PSI_PRIME_ONE_MINUS_T, ck.Transform.T_PSI_PRIME_T
_INC, _DEC = ck.Direction.INCREASING, ck.Direction.DECREASING
_ILC, _DLV = lt.INCREASING_LOG_CONCAVE, lt.DECREASING_LOG_CONVEX

THEOREMS = {
    c.id: c
    for c in [
        TheoremConditions(TheoremId.T3_1, _PAR, _W, "alpha", (D, D, D), _SUP, _ONE_MINUS, _INC, True, _ILC,
                          OrderingConclusion(Who.Y, Statistic.MAX)),
        TheoremConditions(TheoremId.T3_2, _PAR, _M, "beta", (D, D, I), _SUP, _ONE_MINUS, _DEC, False, _DLV,
                          OrderingConclusion(Who.Y, Statistic.MAX)),
        TheoremConditions(TheoremId.T3_3, _SER, _M, "beta", (D, D, D), _SUP, _T, _INC, False, _ILC,
                          OrderingConclusion(Who.X, Statistic.MIN)),
        TheoremConditions(TheoremId.T3_4, _SER, _W, "alpha", (D, D, I), _SUP, _T, _DEC, False, _DLV,
                          OrderingConclusion(Who.X, Statistic.MIN)),
        TheoremConditions(TheoremId.T4_1, _PAR, _W, "beta", (D, D, D), _SUB, _ONE_MINUS, _INC, True, _ILC,
                          OrderingConclusion(Who.X, Statistic.MAX)),
        TheoremConditions(TheoremId.T4_2, _PAR, _M, "alpha", (D, D, I), _SUB, _ONE_MINUS, _DEC, False, _DLV,
                          OrderingConclusion(Who.X, Statistic.MAX)),
        TheoremConditions(TheoremId.T4_3, _SER, _M, "alpha", (D, D, D), _SUB, _T, _INC, False, _ILC,
                          OrderingConclusion(Who.Y, Statistic.MIN)),
        TheoremConditions(TheoremId.T4_4, _SER, _W, "beta", (D, D, I), _SUB, _T, _DEC, False, _DLV,
                          OrderingConclusion(Who.Y, Statistic.MIN)),
    ]
}

#: T3_k and T4_k exchange roles when (gen_x, alpha) and (gen_y, beta) swap
DUAL = {
    TheoremId.T3_1: TheoremId.T4_1, TheoremId.T3_2: TheoremId.T4_2,
    TheoremId.T3_3: TheoremId.T4_3, TheoremId.T3_4: TheoremId.T4_4,
}
DUAL.update({v: k for k, v in list(DUAL.items())})


@dataclass(frozen=True, eq=False)
class Scenario:
    """Two systems X and Y that share family, shocks and structure."""

    gen_x: g.ArchimedeanGenerator
    gen_y: g.ArchimedeanGenerator
    family: lt.SurvivalFamily
    alpha: np.ndarray
    beta: np.ndarray
    shocks: np.ndarray
    structure: Structure

    def __post_init__(self):
        # SystemSpec validates lengths, positivity and the shock range
        sx = SystemSpec(self.gen_x, self.family, self.alpha, self.shocks, self.structure)
        sy = SystemSpec(self.gen_y, self.family, self.beta, self.shocks, self.structure)
        if sx.n != sy.n:
            raise DomainError(f"alpha and beta differ in length ({sx.n} vs {sy.n})")
        object.__setattr__(self, "alpha", sx.params)
        object.__setattr__(self, "beta", sy.params)
        object.__setattr__(self, "shocks", sx.shocks)
        object.__setattr__(self, "structure", sx.structure)

    def __eq__(self, other):
        if not isinstance(other, Scenario):
            return NotImplemented
        return (
            self.gen_x == other.gen_x and self.gen_y == other.gen_y
            and self.family == other.family and self.structure == other.structure
            and np.array_equal(self.alpha, other.alpha)
            and np.array_equal(self.beta, other.beta)
            and np.array_equal(self.shocks, other.shocks)
        )

    __hash__ = None

    @property
    def system_x(self) -> SystemSpec:
        return SystemSpec(self.gen_x, self.family, self.alpha, self.shocks, self.structure)

    @property
    def system_y(self) -> SystemSpec:
        return SystemSpec(self.gen_y, self.family, self.beta, self.shocks, self.structure)

    def swapped(self) -> "Scenario":
        return Scenario(self.gen_y, self.gen_x, self.family, self.beta, self.alpha,
                        self.shocks, self.structure)


@dataclass(frozen=True)
class Tolerances:
    additivity: float = ck.ADDITIVITY_EPS
    finite_difference: float = ck.FD_EPS


@dataclass(frozen=True)
class HypothesisReport:
    theorem: TheoremId
    condition_results: List[ck.CheckReport]
    all_hold: bool
    conclusion: Optional[OrderingConclusion] = None

    def failed(self):
        return [r for r in self.condition_results if not r.holds]

    def as_dict(self):
        return {
            "theorem": self.theorem.value,
            "all_hold": self.all_hold,
            "conclusion": str(self.conclusion) if self.conclusion else None,
            "conditions": [r.as_dict() for r in self.condition_results],
        }


_SYMBOL = {Relation.MAJORIZATION: "<=^m", Relation.WEAK_SUPER: "<=^w"}


def relation_report(rel: Relation, lower_name, lower, upper_name, upper) -> ck.CheckReport:
    """Partial-sum evidence for ``lower <= upper`` in the given preorder."""
    lo, up = mj.param_vector(lower), mj.param_vector(upper)
    tol = mj.SUM_RTOL * max(1.0, lo.sum(), up.sum())
    if rel is Relation.MAJORIZATION:
        holds = mj.majorizes_m(up, lo)
        gaps = np.cumsum(np.sort(lo)[::-1]) - np.cumsum(np.sort(up)[::-1])
        gaps = np.append(gaps, -gaps[-1])  # equal totals, both directions
    else:
        holds = mj.weak_supermajorizes(up, lo)
        gaps = np.cumsum(np.sort(up)) - np.cumsum(np.sort(lo))
    k = int(np.argmax(gaps))
    worst = float(gaps[k] - tol)
    witness = min(k, lo.size - 1) + 1
    return ck.CheckReport(
        f"{lower_name} {_SYMBOL[rel]} {upper_name}", holds, worst if not holds else min(worst, 0.0),
        f"partial sum k={witness}", f"{lower_name}={lo.tolist()}, {upper_name}={up.tolist()}",
    )


def cone_report(name, v, target: mj.Cone) -> ck.CheckReport:
    v = mj.param_vector(v)
    c = mj.cone(v)
    d = np.diff(v)
    # largest step against the required direction
    bad = d if target is mj.Cone.D_PLUS else -d
    worst = float(bad.max()) if bad.size else 0.0
    holds = c.within(target)
    return ck.CheckReport(
        f"{name} in {target.value}", holds, worst if not holds else min(worst, 0.0),
        int(np.argmax(bad)) if bad.size else None, f"{name}={v.tolist()} is {c.value}",
    )


def _transform_report(scn: Scenario, cond: TheoremConditions, tol: Tolerances) -> ck.CheckReport:
    reports = [
        ck.check_t_psi_transform(gen, cond.transform, cond.direction,
                                 eps=tol.finite_difference, magnitude=cond.magnitude)
        for gen in (scn.gen_x, scn.gen_y)
    ]
    best = min(reports, key=lambda r: r.worst_violation)
    which = "psi1" if best is reports[0] else "psi2"
    return ck.CheckReport(
        f"{reports[0].name} for psi1 or psi2", best.holds, best.worst_violation, best.witness,
        f"{which} decides ({best.detail}); psi1 holds={reports[0].holds}, psi2 holds={reports[1].holds}",
    )


def validate(scn: Scenario, thm, tol: Tolerances = Tolerances(), additivity_grid=None) -> HypothesisReport:
    cond = THEOREMS[TheoremId(thm)]
    if scn.structure is not cond.structure:
        raise DomainError(f"{cond.id.value} concerns {cond.structure.value} systems, "
                          f"scenario is {scn.structure.value}")
    vec = {"alpha": scn.alpha, "beta": scn.beta}
    results = [
        relation_report(cond.relation, cond.lower, vec[cond.lower], cond.upper, vec[cond.upper]),
        cone_report("alpha", scn.alpha, cond.cones[0]),
        cone_report("beta", scn.beta, cond.cones[1]),
        cone_report("p", scn.shocks, cond.cones[2]),
        ck.check_additivity(scn.gen_x, scn.gen_y, additivity_grid, cond.additivity, tol.additivity),
        _transform_report(scn, cond, tol),
        ck.check_sf_curvature(scn.family, expect=cond.curvature, eps=tol.finite_difference),
    ]
    ok = all(r.holds for r in results)
    return HypothesisReport(cond.id, results, ok, cond.conclusion if ok else None)


def compatible(structure) -> List[TheoremId]:
    structure = Structure(structure)
    return [t for t, c in THEOREMS.items() if c.structure is structure]


def conclude(scn: Scenario, tol: Tolerances = Tolerances()) -> List[HypothesisReport]:
    return [validate(scn, t, tol) for t in compatible(scn.structure)]


def default_grid(scn: Scenario, points=512, lo_q=1e-3, hi_q=0.999):
    """Log-spaced grid from the smallest 0.1% quantile to the largest 99.9%
    quantile over every component of both systems."""
    params = np.concatenate([scn.alpha, scn.beta])
    lo = float(np.min(lt.quantile(scn.family, lo_q, params)))
    hi = float(np.max(lt.quantile(scn.family, hi_q, params)))
    return np.geomspace(lo, hi, points)


@dataclass(frozen=True)
class OrderCheck:
    holds: bool
    max_signed_violation: float
    argmax_x: float
    theorem: Optional[TheoremId] = None
    x: np.ndarray = field(default=None, repr=False)
    diff: np.ndarray = field(default=None, repr=False)


def difference_curve(scn: Scenario, x):
    """``(f_X, f_Y, f_Y - f_X)`` with ``f`` the CDF (parallel) or survival
    function (series)."""
    fx = np.asarray(compared_function(scn.system_x, x))
    fy = np.asarray(compared_function(scn.system_y, x))
    return fx, fy, fy - fx


def verify_order_numeric(scn: Scenario, x_grid=None, tol=1e-8, thm=None) -> OrderCheck:
    """Check on a grid the sign of the difference curve predicted by ``thm``.

    Without ``thm`` the first theorem whose hypotheses hold is used.
    """
    if thm is None:
        held = [r.theorem for r in conclude(scn) if r.all_hold]
        if not held:
            raise ValueError("no theorem's hypotheses hold; pass thm explicitly")
        thm = held[0]
    cond = THEOREMS[TheoremId(thm)]
    if cond.structure is not scn.structure:
        raise DomainError(f"{cond.id.value} concerns {cond.structure.value} systems")
    x = default_grid(scn) if x_grid is None else np.asarray(x_grid, dtype=float)
    _, _, d = difference_curve(scn, x)
    violation = -cond.conclusion.expected_sign * d
    k = int(np.argmax(violation))
    worst = float(violation[k])
    return OrderCheck(worst <= tol, worst, float(x[k]), cond.id, x, d)
