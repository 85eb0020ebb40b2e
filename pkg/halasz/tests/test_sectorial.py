import math

import numpy as np
import pytest
from exceptions import InvalidArgument
from multfun import FULL_SECTOR, Sector, mobius, one, random_multiplicative
from scipy.integrate import quad
from sectorial import (
    fourier_coeffs,
    remainder,
    remainder_array,
    remainder_shape,
    sector_decomposition_residual,
    sectorial_halasz_report,
    summed_remainder,
)

QUARTER = Sector.from_fractions("0", "1/4")


def test_coefficients_of_half_sector():
    trunc = fourier_coeffs(QUARTER, 4)
    assert trunc[1] == pytest.approx(-1j / math.pi)
    assert trunc[2] == 0
    assert trunc[3] == pytest.approx(-1j / (3 * math.pi))
    assert trunc.density == 0.5


def test_coefficients_are_conjugate_symmetric():
    trunc = fourier_coeffs(Sector.from_fractions("1/10", "3/7"), 8)
    for m in range(1, 9):
        assert trunc[-m] == pytest.approx(np.conj(trunc[m]))


def test_coefficient_index_bounds():
    trunc = fourier_coeffs(QUARTER, 4)
    with pytest.raises(InvalidArgument):
        trunc[0]
    with pytest.raises(InvalidArgument):
        trunc[5]
    with pytest.raises(InvalidArgument):
        fourier_coeffs(QUARTER, 0)


def test_full_sector_has_no_modes():
    trunc = fourier_coeffs(FULL_SECTOR, 6)
    assert np.allclose(trunc.coeffs, 0)


SECTORS = [QUARTER, Sector.from_fractions("1/10", "3/7"), Sector.from_fractions("1/3", "1/2")]


@pytest.mark.parametrize("sector", SECTORS, ids=str)
def test_coefficients_match_quadrature(sector):
    # b_m = (2/pi) * integral over J of exp(-4 i m theta)
    trunc = fourier_coeffs(sector, 64)
    for m in range(1, 65):
        real, _ = quad(lambda _: 1.0, sector.theta1, sector.theta2, weight="cos", wvar=4 * m, epsabs=1e-13)
        imag, _ = quad(lambda _: 1.0, sector.theta1, sector.theta2, weight="sin", wvar=4 * m, epsabs=1e-13)
        assert abs(trunc[m] - 2 / math.pi * (real - 1j * imag)) < 1e-9


@pytest.mark.parametrize("sector", SECTORS, ids=str)
def test_coefficients_satisfy_bessel(sector):
    T = 64
    delta = sector.density
    energy = math.fsum(np.abs(fourier_coeffs(sector, T).coeffs) ** 2)
    # |b_m| <= 1/(pi |m|), so the modes beyond T carry at most 2/(pi^2 T)
    assert delta * (1 - delta) - 2 / (math.pi**2 * T) <= energy <= delta * (1 - delta)


def test_remainder_is_undefined_at_endpoints():
    trunc = fourier_coeffs(QUARTER, 8)
    with pytest.raises(InvalidArgument):
        remainder(trunc, 0.0)
    with pytest.raises(InvalidArgument):
        remainder(trunc, math.pi / 4)
    with pytest.raises(InvalidArgument):
        remainder(trunc, math.pi)


def test_remainder_vanishes_inside():
    trunc = fourier_coeffs(QUARTER, 1000)
    assert abs(remainder(trunc, math.pi / 8)) < 0.01
    assert abs(remainder(trunc, 3 * math.pi / 8)) < 0.01


def test_remainder_shrinks_with_truncation():
    thetas = np.linspace(0.01, math.pi / 2 - 0.01, 997)
    thetas = thetas[np.abs(thetas - math.pi / 4) > 1e-6]
    coarse = np.mean(np.abs(remainder_array(fourier_coeffs(QUARTER, 4), thetas)))
    fine = np.mean(np.abs(remainder_array(fourier_coeffs(QUARTER, 64), thetas)))
    assert fine < coarse


def test_remainder_shape():
    trunc = fourier_coeffs(QUARTER, 10)
    assert remainder_shape(trunc, 1e-6) == 1.0
    assert remainder_shape(trunc, math.pi / 8) == pytest.approx(2 * 8 / (10 * math.pi))


def test_summed_remainder(table):
    report = summed_remainder(fourier_coeffs(QUARTER, 16), 0, 10_000, table)
    assert report.tag == "summed_remainder"
    assert 0 < report.ratio < 5
    with pytest.raises(InvalidArgument):
        summed_remainder(fourier_coeffs(QUARTER, 16), 10, 10)


def test_decomposition_on_full_sector_is_exact(table):
    report = sector_decomposition_residual(random_multiplicative(3), FULL_SECTOR, 8, 0, 5000, table)
    assert report.measured == 0


def test_decomposition_residual(table):
    report = sector_decomposition_residual(mobius(), QUARTER, 16, 0, 10_000, table)
    assert report.tag == "sector_decomposition"
    assert report.ratio < 5
    assert abs(report.details["residual"]) == report.measured


def test_decomposition_from_compressed_sums(table):
    f = random_multiplicative(12, circle=True)
    sector = Sector.from_fractions("1/12", "1/3")
    direct = sector_decomposition_residual(f, sector, 8, 1000, 8000, table)
    compressed = sector_decomposition_residual(f, sector, 8, 1000, 8000, table, compressed=True)
    assert compressed.details["S_fJ"] == pytest.approx(direct.details["S_fJ"], abs=1e-8)
    assert compressed.measured == pytest.approx(direct.measured, abs=1e-8)


def test_decomposition_of_one_tracks_density(table):
    report = sector_decomposition_residual(one(), QUARTER, 16, 0, 20_000, table)
    assert report.details["S_fJ"].real == pytest.approx(report.details["delta_S_f"].real, rel=0.01)


def test_sectorial_halasz_report(table):
    report = sectorial_halasz_report(mobius(), QUARTER, 2000, 2, table=table)
    assert report.tag == "sectorial_halasz"
    assert report.bound > 0
    assert report.measured >= 0
