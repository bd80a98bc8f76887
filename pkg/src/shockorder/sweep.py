"""Randomised scenarios that satisfy a theorem's hypotheses by construction.

Generator pairs are drawn from parameter regimes where the additivity of
``psi2 o phi1`` is known in closed form (for example Gumbel ``2 < theta1 < theta2`` for T3_3).
Vectors are built in the required cone and preorder:

* ``lower <=^m upper``: ``lower = M @ upper`` with ``M`` a random convex
  combination of permutation matrices (doubly stochastic);
* ``lower <=^w upper``: the same, plus non-negative increments.

Each draw is re-validated with :func:`theorems.validate`; draws that the
numeric checks reject at the regime boundary are discarded and redrawn.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

import numpy as np

from . import lifetimes as lt
from . import theorems as th
from .generators import ArchimedeanGenerator, Family


def _clayton(rng, lo=0.1, hi=10.0):
    return rng.uniform(lo, hi)


def _ordered(rng, draw, increasing):
    """Two parameters from ``draw`` with the first below the second (or above)."""
    while True:
        a, b = sorted((draw(rng), draw(rng)))
        if a < b:
            return (a, b) if increasing else (b, a)


def _gumbel(lo):
    return lambda rng: rng.uniform(lo, 10.0)


def _amh(rng):
    return rng.uniform(0.0, 0.95)


def _gb(rng):
    return rng.uniform(0.05, 1.0)


def _gh(rng):
    return rng.uniform(1.0, 10.0)


# (family, draw, first-below-second) for each theorem
REGIMES = {
    th.TheoremId.T3_1: [(Family.CLAYTON, _clayton, True), (Family.AMH, _amh, True)],
    th.TheoremId.T3_2: [(Family.GUMBEL, _gumbel(1.0), True), (Family.GUMBEL_BARNETT, _gb, False)],
    th.TheoremId.T3_3: [(Family.GUMBEL, _gumbel(2.0), True), (Family.CLAYTON, _clayton, True)],
    th.TheoremId.T3_4: [(Family.GUMBEL_HOUGAARD, _gh, False)],
    th.TheoremId.T4_1: [(Family.CLAYTON, _clayton, False), (Family.AMH, _amh, False)],
    th.TheoremId.T4_2: [(Family.GUMBEL, _gumbel(1.0), False), (Family.GUMBEL_BARNETT, _gb, True)],
    th.TheoremId.T4_3: [(Family.GUMBEL, _gumbel(2.0), False), (Family.CLAYTON, _clayton, False)],
    th.TheoremId.T4_4: [(Family.GUMBEL_HOUGAARD, _gh, True)],
}


def random_doubly_stochastic(n, rng, terms=3):
    w = rng.dirichlet(np.ones(terms))
    m = w[0] * np.eye(n)
    for k in range(1, terms):
        m += w[k] * np.eye(n)[rng.permutation(n)]
    return m


def below(upper, relation, rng):
    """A vector lying below ``upper`` in the given preorder."""
    z = random_doubly_stochastic(upper.size, rng) @ upper
    if relation is th.Relation.WEAK_SUPER:
        z = z + rng.exponential(0.3 * upper.mean(), upper.size) * (rng.uniform(size=upper.size) < 0.7)
    return -np.sort(-z)


def random_family(tag, rng):
    shape = float(np.round(rng.uniform(0.5, 4.0), 3))
    if tag == lt.DECREASING_LOG_CONVEX:
        return lt.SurvivalFamily.weibull(shape)
    if rng.uniform() < 0.5:
        return lt.SurvivalFamily.exponential()
    return lt.SurvivalFamily.log_logistic(shape)


def random_scenario(thm, rng, n=None) -> th.Scenario:
    cond = th.THEOREMS[th.TheoremId(thm)]
    regimes = REGIMES[cond.id]
    fam_g, draw, increasing = regimes[rng.integers(len(regimes))]
    t1, t2 = _ordered(rng, draw, increasing)
    n = int(rng.integers(2, 6)) if n is None else n
    family = random_family(cond.curvature, rng)
    scale = (0.2, 5.0) if family.kind is lt.SurvivalKind.WEIBULL_SCALE_RATE else (0.5, 10.0)
    upper = -np.sort(-rng.uniform(*scale, n))
    lower = below(upper, cond.relation, rng)
    vec = {cond.upper: upper, cond.lower: lower}
    p = rng.uniform(0.05, 1.0, n)
    p = np.sort(p) if cond.cones[2] is th.mj.Cone.I_PLUS else -np.sort(-p)
    return th.Scenario(
        ArchimedeanGenerator(fam_g, t1), ArchimedeanGenerator(fam_g, t2),
        family, vec["alpha"], vec["beta"], p, cond.structure,
    )


def valid_scenario(thm, rng, max_tries=50) -> th.Scenario:
    for _ in range(max_tries):
        scn = random_scenario(thm, rng)
        if th.validate(scn, thm).all_hold:
            return scn
    raise RuntimeError(f"could not draw a scenario satisfying {thm}")


@dataclass(frozen=True)
class SweepResult:
    theorem: th.TheoremId
    checked: int
    counterexamples: List[tuple]  # (scenario, OrderCheck)
    worst: float

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def soundness_sweep(thm, count=200, seed=0, points=512, tol=1e-8) -> SweepResult:
    """Draw ``count`` hypothesis-satisfying scenarios and check the predicted
    sign of the difference curve on each default grid."""
    thm = th.TheoremId(thm)
    rng = np.random.default_rng([seed, list(th.TheoremId).index(thm)])
    bad, worst = [], -np.inf
    for _ in range(count):
        scn = valid_scenario(thm, rng)
        res = th.verify_order_numeric(scn, th.default_grid(scn, points), tol, thm)
        worst = max(worst, res.max_signed_violation)
        if not res.holds:
            bad.append((scn, res))
    return SweepResult(thm, count, bad, float(worst))
