import math

import numpy as np
import pytest
from exceptions import InvalidArgument, ResourceLimit
from gaussian import CanonicalGenerator, conjugate_ideal, count_ideals, enumerate_ideals
from multfun import (
    FULL_SECTOR,
    AngularCharacter,
    NormPower,
    Sector,
    builtin,
    check_lambda_bound,
    convolve,
    d_kappa,
    divisor_function,
    divisor_sum_identity,
    gh_decompose,
    h_tail,
    interval_sum,
    lambda_f,
    liouville,
    mobius,
    norm_compress,
    one,
    partial_sum,
    random_multiplicative,
    sector_interval_sum,
    sector_sum,
    smooth_rough_split,
)

TWO = CanonicalGenerator(2, 0)
FIVE = CanonicalGenerator(5, 0)
ONE_PLUS_I = CanonicalGenerator(1, 1)
THREE = CanonicalGenerator(3, 0)


def test_unit_ideal():
    for f in (one(), mobius(), liouville(), divisor_function(2), random_multiplicative(7)):
        assert f(CanonicalGenerator(1, 0)) == 1


def test_mobius():
    mu = mobius()
    assert mu(ONE_PLUS_I) == -1
    assert mu(THREE) == -1
    assert mu(TWO) == 0
    assert mu(FIVE) == 1


def test_liouville():
    lam = liouville()
    assert lam(ONE_PLUS_I) == -1
    assert lam(TWO) == 1
    assert lam(CanonicalGenerator(2, 2)) == -1


def test_divisor_function():
    assert d_kappa(2, FIVE) == 4
    assert d_kappa(2, TWO) == 3
    assert d_kappa(3, TWO) == 6
    with pytest.raises(InvalidArgument):
        divisor_function(0.5)


def test_builtins():
    assert builtin("mu").label == "mu"
    assert builtin("random", seed=3).label == builtin("random", seed=3).label
    with pytest.raises(InvalidArgument):
        builtin("zeta")


def test_random_function_is_reproducible(table):
    f, g = random_multiplicative(42), random_multiplicative(42)
    assert np.array_equal(f.values(table), g.values(table))
    assert not np.array_equal(f.values(table), random_multiplicative(43).values(table))
    assert set(np.unique(f.values(table)[: table.upto(1000)].real).tolist()) <= {-1.0, 1.0}


def test_random_circle_function_is_unimodular(table):
    values = random_multiplicative(5, circle=True).values(table)
    assert np.allclose(np.abs(values), 1.0)


def test_values_match_pointwise_evaluation(table):
    f = random_multiplicative(11, completely_multiplicative=False)
    values = f.values(table)
    for index in [1, 2, 50, 777, 4096]:
        assert values[index] == pytest.approx(f(table.generator(index)))


@pytest.mark.parametrize("m", [1, -2, 5])
def test_angular_character_is_multiplicative(table, m):
    lam = AngularCharacter(m)
    assert np.allclose(table.multiplicative_values(lam.local), lam.values(table))


def test_angular_character_at_25():
    # (4+3i) and (3+4i) both have norm 25; (5) = (2+i)(2-i)
    lam = AngularCharacter(1)
    assert lam(CanonicalGenerator(4, 3)) == pytest.approx(np.exp(4j * math.atan2(3, 4)))
    assert lam(FIVE) == pytest.approx(1)


def test_angular_character_is_inverted_by_conjugation():
    for m in (1, -3, 7):
        lam = AngularCharacter(m)
        for g in enumerate_ideals(500):
            assert lam(g) * lam(conjugate_ideal(g)) == pytest.approx(1)


def test_norm_power_is_multiplicative(table):
    chi = NormPower(2.5)
    assert np.allclose(table.multiplicative_values(chi.local), chi.values(table))


def test_product_function(table):
    f = mobius() * AngularCharacter(2) * NormPower(-1.0)
    assert len(f.factors) == 3
    assert np.allclose(
        f.values(table), mobius().values(table) * AngularCharacter(2).values(table) * NormPower(-1.0).values(table)
    )
    assert f(FIVE) == pytest.approx(mobius()(FIVE) * NormPower(-1.0)(FIVE))


def test_mobius_inverts_one():
    deviation, _ = divisor_sum_identity(mobius(), one(), 400)
    assert deviation < 1e-9
    identity = convolve(mobius(), one())
    assert identity(CanonicalGenerator(1, 0)) == 1
    assert identity(FIVE) == pytest.approx(0)


def test_one_convolved_with_one_is_d2(table):
    count = table.upto(2000)
    assert np.allclose(convolve(one(), one()).values(table)[:count], divisor_function(2).values(table)[:count])


def test_divisor_sum_identity_random():
    f, g = random_multiplicative(1, circle=True), random_multiplicative(2, completely_multiplicative=False)
    deviation, _ = divisor_sum_identity(f, g, 300)
    assert deviation < 1e-9


def test_lambda_of_one_is_von_mangoldt(sieve):
    prime = sieve[3]
    assert lambda_f(one(), prime, 4) == pytest.approx([prime.log_norm] * 4)


def test_lambda_of_d2_doubles(sieve):
    prime = sieve[1]
    assert lambda_f(divisor_function(2), prime, 3) == pytest.approx([2 * prime.log_norm] * 3)


def test_lambda_of_mobius(sieve):
    prime = sieve[0]
    assert lambda_f(mobius(), prime, 3) == pytest.approx([-prime.log_norm] * 3)


def test_check_lambda_bound():
    assert check_lambda_bound(mobius(), 1, 1000)
    assert check_lambda_bound(random_multiplicative(9, circle=True), 1, 1000)
    failure = check_lambda_bound(divisor_function(2), 1, 1000)
    assert not failure
    assert failure.k == 1
    assert failure.prime.norm == 2
    assert check_lambda_bound(divisor_function(2), 2, 1000)


@pytest.mark.parametrize(
    "f, kappa",
    [
        (one(), 1),
        (mobius(), 1),
        (liouville(), 1),
        (random_multiplicative(4, circle=True), 1),
        (divisor_function(1.5), 1.5),
        (divisor_function(2), 2),
        (divisor_function(3), 3),
    ],
    ids=lambda value: value.label if hasattr(value, "label") else f"kappa={value:g}",
)
def test_lambda_bound_implies_divisor_bound(table, f, kappa):
    assert check_lambda_bound(f, kappa, 10_000)
    count = table.upto(10_000)
    magnitude = np.abs(f.values(table)[:count])
    assert np.all(magnitude <= divisor_function(kappa).values(table)[:count].real + 1e-9)


def test_convolution_is_commutative_and_associative(table):
    count = table.upto(5000)
    for seed in (1, 2, 3):
        f = random_multiplicative(seed, circle=True, completely_multiplicative=False)
        g = random_multiplicative(seed + 10, completely_multiplicative=False)
        h = random_multiplicative(seed + 20, circle=True)
        assert np.allclose(convolve(f, g).values(table)[:count], convolve(g, f).values(table)[:count], atol=1e-9)
        left = convolve(convolve(f, g), h).values(table)[:count]
        right = convolve(f, convolve(g, h)).values(table)[:count]
        assert np.allclose(left, right, atol=1e-9)


def test_gh_decomposition(table):
    f = random_multiplicative(3, completely_multiplicative=False)
    g, h = gh_decompose(f)
    count = table.upto(3000)
    assert g.completely_multiplicative
    assert np.allclose(convolve(g, h).values(table)[:count], f.values(table)[:count])
    assert h(ONE_PLUS_I) == 0


def test_smooth_rough_split(table):
    f = mobius()
    smooth, rough = smooth_rough_split(f, 30)
    count = table.upto(3000)
    assert np.allclose(convolve(smooth, rough).values(table)[:count], f.values(table)[:count])
    assert rough(ONE_PLUS_I) == 0
    assert smooth(CanonicalGenerator(6, 1)) == 0


def test_h_tail():
    _, h = gh_decompose(mobius())
    # h vanishes on primes and equals -1 on squares of primes for mu
    assert h_tail(h, 1, 1000) > 0
    assert h_tail(h, 1000, 2000) <= h_tail(h, 1, 2000)


def test_partial_sum_of_one_counts(table):
    for x in [1, 10, 999, 10_000]:
        assert partial_sum(one(), x, table) == count_ideals(x)


def test_interval_sum(table):
    assert interval_sum(one(), 100, 50, table) == count_ideals(150) - count_ideals(100)
    with pytest.raises(InvalidArgument):
        interval_sum(one(), 100, 0, table)


def test_sector_sums_partition(table):
    first = Sector.from_fractions("0", "1/8")
    second = Sector.from_fractions("1/8", "1/2")
    f = random_multiplicative(4)
    total = sector_sum(f, first, 5000, table) + sector_sum(f, second, 5000, table)
    assert total == pytest.approx(partial_sum(f, 5000, table))
    assert sector_sum(f, FULL_SECTOR, 5000, table) == partial_sum(f, 5000, table)


def test_sector_interval_sum(table):
    sector = Sector.from_fractions("0", "1/4")
    expected = sum(1 for g in enumerate_ideals(1100) if g.norm > 1000 and g.arg < math.pi / 4)
    assert sector_interval_sum(one(), sector, 1000, 100, table) == expected


def test_sector():
    sector = Sector.from_fractions("0", "1/4")
    assert sector.theta2 == math.pi / 4
    assert sector.density == 0.5
    assert FULL_SECTOR.is_full
    assert sector.contains(0.0)
    assert not sector.contains(math.pi / 4)
    with pytest.raises(InvalidArgument):
        Sector(1.0, 0.5)
    with pytest.raises(InvalidArgument):
        Sector.from_fractions("0", "1")
    with pytest.raises(InvalidArgument):
        Sector.from_fractions("zero", "1/4")


def test_norm_compress_counts_representations():
    compressed = norm_compress(one(), 200)
    expected = np.zeros(201)
    for g in enumerate_ideals(200):
        expected[g.norm] += 1
    assert np.array_equal(compressed.values.real, expected)
    assert compressed[25] == 3
    assert compressed.partial_sum(200) == count_ideals(200)


def test_norm_compress_matches_ideal_sums(table):
    f = random_multiplicative(8, circle=True)
    compressed = norm_compress(f, 5000)
    assert compressed.partial_sum(5000) == pytest.approx(partial_sum(f, 5000, table))
    assert compressed.window_sum(1000, 300) == pytest.approx(interval_sum(f, 1000, 300, table))
    sector = Sector.from_fractions("1/8", "3/8")
    assert norm_compress(f, 5000, sector=sector).partial_sum(5000) == pytest.approx(sector_sum(f, sector, 5000, table))


def test_norm_compress_budget():
    with pytest.raises(ResourceLimit):
        norm_compress(one(), 1000, max_ideals=500)
    with pytest.raises(InvalidArgument):
        norm_compress(one(), 0)


def test_norm_compress_is_multiplicative():
    f = random_multiplicative(12, circle=True, completely_multiplicative=False)
    X = 3000
    compressed = norm_compress(f, X)
    for m in range(2, math.isqrt(X) + 1):
        for n in range(m + 1, X // m + 1):
            if math.gcd(m, n) == 1:
                assert compressed[m * n] == pytest.approx(compressed[m] * compressed[n], abs=1e-9)
