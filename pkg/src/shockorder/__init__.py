"""Shocked series and parallel systems with Archimedean-dependent components.

Analytic lifetime distributions, numeric checks of the hypotheses of eight
usual-stochastic-order theorems, and a frailty Monte Carlo oracle.
"""

from .errors import ConfigError, DomainError, UnsupportedFamily
from .generators import ArchimedeanGenerator, Family
from .lifetimes import SurvivalFamily, SurvivalKind
from .system import Structure, SystemSpec, compared_function, parallel_cdf, series_sf, system_cdf
from .theorems import Scenario, TheoremId, conclude, validate, verify_order_numeric

__all__ = [
    "ArchimedeanGenerator", "ConfigError", "DomainError", "Family", "Scenario", "Structure",
    "SurvivalFamily", "SurvivalKind", "SystemSpec", "TheoremId", "UnsupportedFamily",
    "compared_function", "conclude", "parallel_cdf", "series_sf", "system_cdf", "validate",
    "verify_order_numeric",
]

__version__ = "0.1.0"
