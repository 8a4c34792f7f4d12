import math

import numpy as np
import pytest
from scipy.integrate import simpson

from softedge.estimators import fit_power_law
from softedge.oracle import oracle_cdf, oracle_pdf, small_n_oracle


def test_n2_beta2_gap_closed_form():
    # P(l1, l2) reduces to gap density sqrt(2/pi) r^2 exp(-r^2/2)
    pdf = oracle_pdf(2.0, 2, "gap")
    r = np.linspace(0.1, 5.0, 40)
    expected = math.sqrt(2.0 / math.pi) * r**2 * np.exp(-(r**2) / 2.0)
    assert np.max(np.abs(pdf(r) - expected)) < 1e-12


def test_n2_normalization():
    c = small_n_oracle(2.0, 2, "gap")
    assert abs(simpson(c.y, x=c.x) - 1.0) < 1e-6


def test_n2_dos_equals_gap():
    grid = np.linspace(0.0, 6.0, 101)
    dos = small_n_oracle(2.0, 2, "dos", grid=grid)
    gap = small_n_oracle(2.0, 2, "gap", grid=grid)
    assert np.array_equal(dos.y, gap.y)


@pytest.mark.parametrize("beta", [1.0, 2.0, 4.0])
def test_small_r_exponent(beta):
    grid = np.geomspace(1e-3, 1e-2, 25)
    c = small_n_oracle(beta, 2, "gap", grid=grid)
    curve = c.__class__(c.x, c.y, 0.001 * c.y)  # uniform relative errors
    slope, _, _ = fit_power_law(curve, 1e-3, 1e-2)
    assert slope == pytest.approx(beta, abs=0.01)


def test_n3_normalizations():
    for obs in ("gap", "dos"):
        grid = np.linspace(0.0, 11.0, 401)
        c = small_n_oracle(1.0, 3, obs, grid=grid)
        assert abs(simpson(c.y, x=c.x) - 1.0) < 2e-4


def test_n3_lambda_max_normalization():
    c = small_n_oracle(2.0, 3, "lambda_max")
    assert abs(simpson(c.y, x=c.x) - 1.0) < 1e-6


def test_unsupported_n():
    with pytest.raises(ValueError):
        small_n_oracle(2.0, 4, "gap")


def test_unknown_observable():
    with pytest.raises(ValueError):
        small_n_oracle(2.0, 2, "bogus")


def test_cdf_helper():
    c = small_n_oracle(2.0, 2, "gap")
    cdf = oracle_cdf(c)
    assert cdf(0.0) == 0.0
    assert cdf(c.x[-1]) == pytest.approx(1.0, abs=1e-6)
    assert cdf(1.0) < cdf(2.0)


def test_mc_matches_oracle_quick():
    # coarse version of the acceptance check: KS at 1e5 samples
    from tests.helpers import collect_top_two, ks_statistic

    l1, l2 = collect_top_two(2.0, 2, 100_000, seed=101)
    gaps = l1 - l2
    cdf = oracle_cdf(small_n_oracle(2.0, 2, "gap"))
    assert ks_statistic(gaps, cdf) < 0.01
