"""Built-in scenarios for the four reference difference curves.

fig1  parallel, AMH 0.2 vs 0.75, exponential means (10,3,1) vs (3,2,1),
      p = (0.8,0.3,0.2); satisfies T3_1.
fig2  parallel, Gumbel-Barnett 0.6 vs 0.3, Weibull shape 2, rates (8,5,1)
      vs (7,4,3), p = (0.1,0.4,0.9); satisfies T3_2.
fig3  series, Gumbel 3 vs 15, log-logistic shape 2, scales (7,4,1) vs
      (7,3,2), p = (0.6,0.4,0.1); satisfies T3_3.
fig4  series, Gumbel-Hougaard 9 vs 2, Weibull shape 3, rates (8,6,2) vs
      (9,4,2), p = (0.1,0.2,0.7); satisfies T3_4.

For the two series scenarios the curve is the survival difference of the
series minimum, which is the statistic the matching theorems order, rather
than a difference of maximum CDFs.
"""

from __future__ import annotations

from .generators import ArchimedeanGenerator as Gen
from .lifetimes import SurvivalFamily
from .system import Structure
from .theorems import Scenario, TheoremId

FIGURES = {
    "fig1": Scenario(Gen("amh", 0.2), Gen("amh", 0.75), SurvivalFamily.exponential(),
                     [10, 3, 1], [3, 2, 1], [0.8, 0.3, 0.2], Structure.PARALLEL),
    "fig2": Scenario(Gen("gumbel_barnett", 0.6), Gen("gumbel_barnett", 0.3), SurvivalFamily.weibull(2),
                     [8, 5, 1], [7, 4, 3], [0.1, 0.4, 0.9], Structure.PARALLEL),
    "fig3": Scenario(Gen("gumbel", 3), Gen("gumbel", 15), SurvivalFamily.log_logistic(2),
                     [7, 4, 1], [7, 3, 2], [0.6, 0.4, 0.1], Structure.SERIES),
    "fig4": Scenario(Gen("gumbel_hougaard", 9), Gen("gumbel_hougaard", 2), SurvivalFamily.weibull(3),
                     [8, 6, 2], [9, 4, 2], [0.1, 0.2, 0.7], Structure.SERIES),
}

EXPECTED_THEOREM = {
    "fig1": TheoremId.T3_1,
    "fig2": TheoremId.T3_2,
    "fig3": TheoremId.T3_3,
    "fig4": TheoremId.T3_4,
}
