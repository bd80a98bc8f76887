import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shockorder import lifetimes as lt
from shockorder import montecarlo as mc
from shockorder.errors import DomainError
from shockorder.generators import ArchimedeanGenerator as Gen
from shockorder.lifetimes import SurvivalFamily as SF
from shockorder.system import (Structure, SystemSpec, parallel_cdf, series_sf, shocked_sf,
                               system_cdf)

from conftest import generators, survival_families

EXP = SF.exponential()
INDEP = Gen("amh", 0.0)
X = np.concatenate([[0.0], np.geomspace(1e-3, 200, 300)])


def fig1_x(gen=Gen("amh", 0.2)):
    return SystemSpec(gen, EXP, [10, 3, 1], [0.8, 0.3, 0.2], Structure.PARALLEL)


def fig3_x(gen=Gen("gumbel", 3)):
    return SystemSpec(gen, SF.log_logistic(2), [7, 4, 1], [0.6, 0.4, 0.1], Structure.SERIES)


def test_shocked_sf():
    assert shocked_sf(EXP, 2.0, 3.0, 1.0) == lt.sf(EXP, 2.0, 3.0)
    assert shocked_sf(EXP, 0.0, 10.0, 0.8) == 0.8
    assert shocked_sf(EXP, 3.0, 3.0, 0.3) == pytest.approx(0.3 * math.exp(-1), rel=1e-15)
    for bad in (0.0, 1.2):
        with pytest.raises(DomainError):
            shocked_sf(EXP, 1.0, 1.0, bad)


def test_spec_validation():
    with pytest.raises(DomainError, match=r"shocks\[1\] outside \(0,1\]"):
        SystemSpec(INDEP, EXP, [1, 2], [0.5, 1.5], "series")
    with pytest.raises(DomainError):
        SystemSpec(INDEP, EXP, [1, 2], [0.5], "series")
    with pytest.raises(DomainError):
        SystemSpec(INDEP, EXP, [1, -2], [0.5, 0.5], "series")


def test_structure_mismatch():
    with pytest.raises(DomainError):
        series_sf(fig1_x(), 1.0)
    with pytest.raises(DomainError):
        parallel_cdf(fig3_x(), 1.0)


@settings(max_examples=50, deadline=None)
@given(generators(), survival_families(), st.floats(0.1, 20))
def test_single_component_collapses(gen, fam, theta):
    x = np.geomspace(1e-3, 50, 40)
    par = SystemSpec(gen, fam, [theta], [1.0], Structure.PARALLEL)
    ser = SystemSpec(gen, fam, [theta], [1.0], Structure.SERIES)
    s = np.asarray(lt.sf(fam, x, theta))
    np.testing.assert_allclose(parallel_cdf(par, x), 1 - s, atol=1e-9)
    np.testing.assert_allclose(series_sf(ser, x), s, atol=1e-9)


@settings(max_examples=50, deadline=None)
@given(survival_families(), st.lists(st.floats(0.1, 20), min_size=1, max_size=5),
       st.data())
def test_independence_product_law(fam, params, data):
    p = data.draw(st.lists(st.floats(0.01, 1.0), min_size=len(params), max_size=len(params)))
    s = np.asarray(lt.sf(fam, X[:, None], np.array(params))) * np.array(p)
    par = SystemSpec(INDEP, fam, params, p, Structure.PARALLEL)
    ser = SystemSpec(INDEP, fam, params, p, Structure.SERIES)
    np.testing.assert_allclose(parallel_cdf(par, X), np.prod(1 - s, axis=1), rtol=0, atol=1e-12)
    np.testing.assert_allclose(series_sf(ser, X), np.prod(s, axis=1), rtol=0, atol=1e-12)


def test_independence_no_shocks_exact():
    fam, params = SF.weibull(2), [3.0, 1.0, 0.5]
    s = np.asarray(lt.sf(fam, X[:, None], np.array(params)))
    par = SystemSpec(INDEP, fam, params, [1, 1, 1], Structure.PARALLEL)
    ser = SystemSpec(INDEP, fam, params, [1, 1, 1], Structure.SERIES)
    np.testing.assert_allclose(parallel_cdf(par, X), np.prod(1 - s, axis=1), rtol=0, atol=1e-12)
    np.testing.assert_allclose(series_sf(ser, X), np.prod(s, axis=1), rtol=0, atol=1e-12)


@settings(max_examples=100, deadline=None)
@given(generators(), survival_families(), st.data())
def test_monotone_and_bounded(gen, fam, data):
    n = data.draw(st.integers(1, 5))
    params = data.draw(st.lists(st.floats(0.1, 20), min_size=n, max_size=n))
    p = data.draw(st.lists(st.floats(0.01, 1.0), min_size=n, max_size=n))
    F = np.asarray(parallel_cdf(SystemSpec(gen, fam, params, p, "parallel"), X))
    S = np.asarray(series_sf(SystemSpec(gen, fam, params, p, "series"), X))
    for v in (F, S):
        assert np.all((v >= 0) & (v <= 1))
    assert np.all(np.diff(F) >= -1e-10)
    assert np.all(np.diff(S) <= 1e-10)


def test_parallel_at_zero_is_atom():
    spec = fig1_x()
    gen = spec.generator
    want = gen.phi(sum(gen.psi(1 - p) for p in spec.shocks))
    assert parallel_cdf(spec, 0.0) == pytest.approx(want, rel=1e-14)


def test_parallel_at_zero_with_unshocked_component():
    spec = SystemSpec(Gen("clayton", 2), EXP, [1, 2], [1.0, 0.5], "parallel")
    assert parallel_cdf(spec, 0.0) == 0.0


def test_series_tail_vanishes():
    assert series_sf(fig3_x(), 1e8) < 1e-10
    assert series_sf(SystemSpec(Gen("gumbel_barnett", 0.5), SF.weibull(2), [1, 2], [1, 1], "series"), 1e3) == 0.0


def test_system_cdf_series_is_complement():
    spec = fig3_x()
    np.testing.assert_allclose(system_cdf(spec, X), 1 - np.asarray(series_sf(spec, X)))


# Monte Carlo oracle for the analytic formulas

def test_fig1_x_parallel_matches_mc():
    spec = fig1_x()
    s = mc.sample_system_lifetime(spec, mc.SeededStream(7, 0), 100_000)
    xs = np.array([0.5, 1, 2, 5, 10, 20, 40])
    np.testing.assert_allclose(mc.empirical_cdf(s, xs), parallel_cdf(spec, xs), atol=0.01)


def test_fig3_x_series_matches_mc():
    spec = fig3_x()
    s = mc.sample_system_lifetime(spec, mc.SeededStream(7, 1), 100_000)
    xs = np.array([0.1, 0.5, 1, 2, 4, 8])
    np.testing.assert_allclose(1 - mc.empirical_cdf(s, xs), series_sf(spec, xs), atol=0.01)
