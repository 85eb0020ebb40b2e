import math

import numpy as np
import pytest
from exceptions import ContractViolation, InvalidArgument, PrecisionError
from gaussian import session_sieve
from multfun import AngularCharacter, NormPower, divisor_function, mobius, one, random_multiplicative
from pretentious import (
    DistanceQuery,
    EulerProduct,
    check_euler_pretentious_bound,
    distance_profile,
    distance_sq,
    euler_F,
    halasz_M,
    halasz_rhs,
    minimize_over_t,
    pretentious_profile,
)
from pretentious.distance import best_point

# zeta_K(2) = zeta(2) L(2, chi_4) for K = Q(i)
ZETA_K_2 = 1.5067030099229850


def test_distance_of_one_to_itself():
    assert distance_sq(DistanceQuery(one(), 1000), 0.0) == 0.0


def test_distance_of_mobius():
    sieve = session_sieve(1000)
    expected = 2 * math.fsum((1.0 / sieve.norms[: sieve.upto(1000)]).tolist())
    assert distance_sq(DistanceQuery(mobius(), 1000), 0.0) == pytest.approx(expected)


def test_distance_profile_matches_pointwise():
    query = DistanceQuery(random_multiplicative(1, circle=True), 2000, twist_m=2)
    ts = np.linspace(-3, 3, 13)
    assert np.allclose(distance_profile(query, ts), [distance_sq(query, t) for t in ts])


def test_distance_query_validation():
    with pytest.raises(InvalidArgument):
        DistanceQuery(one(), 1)
    with pytest.raises(InvalidArgument):
        DistanceQuery(one(), 100, kappa=0.5)
    with pytest.raises(ContractViolation):
        distance_sq(DistanceQuery(divisor_function(2), 100), 0.0)


def test_default_range():
    query = DistanceQuery(one(), 1000)
    assert query.t_range == (-math.log(1000), math.log(1000))


def test_best_point_prefers_small_t():
    assert best_point(np.array([-2.0, 1.0, 3.0]), np.array([0.5, 0.5, 0.7])) == (1.0, 0.5)


def test_minimizer_finds_archimedean_twist():
    result = minimize_over_t(DistanceQuery(NormPower(1.0), 1000))
    assert result.certified
    assert result.t_star == pytest.approx(1.0, abs=1e-4)
    assert result.value < 1e-6


def test_uncertified_minimizer():
    result = minimize_over_t(DistanceQuery(NormPower(1.0), 1000), certify_limit=100)
    assert not result.certified
    assert result.t_star == pytest.approx(1.0, abs=1e-3)


def test_minimizer_is_thread_independent():
    query = DistanceQuery(random_multiplicative(42), 5000)
    assert minimize_over_t(query, threads=1) == minimize_over_t(query, threads=4)


def test_minimizer_within_lipschitz_slack_of_any_grid():
    query = DistanceQuery(random_multiplicative(7, circle=True), 3000)
    result = minimize_over_t(query)
    ts = np.linspace(*query.t_range, 4001)
    slack = query.lipschitz * result.grid_spacing / 2
    assert result.value <= float(np.min(distance_profile(query, ts))) + slack + 1e-9


def test_pretentious_profile():
    profile = pretentious_profile(random_multiplicative(42), range(-2, 3), 1000)
    assert [m for m, _ in profile] == [-2, -1, 0, 1, 2]
    assert all(result.value >= 0 for _, result in profile)


def test_pretentious_profile_of_mobius_is_even():
    # mu(p) = mu(conj p), so the distance is even in t and +t, -t tie
    profile = dict(pretentious_profile(mobius(), [-3, 3], 1000))
    assert profile[-3].value == pytest.approx(profile[3].value, abs=1e-8)
    assert abs(profile[-3].t_star) == pytest.approx(abs(profile[3].t_star), abs=1e-3)


def test_pretentious_profile_mirrors_for_real_functions():
    # conj(f lambda_m) = f lambda_{-m} for real f
    profile = dict(pretentious_profile(random_multiplicative(17), [-2, 2], 1000))
    assert profile[-2].value == pytest.approx(profile[2].value, abs=1e-8)
    assert profile[-2].t_star == pytest.approx(-profile[2].t_star, abs=1e-4)


def pretentious_distance(f, g, x):
    return math.sqrt(distance_sq(DistanceQuery(f, x, comparator=g), 0.0))


def test_distance_satisfies_the_triangle_inequality():
    x = 5000
    for seed in range(4):
        f, g, h = (random_multiplicative(seed * 3 + k, circle=True) for k in range(3))
        direct = pretentious_distance(f, h, x)
        assert direct <= pretentious_distance(f, g, x) + pretentious_distance(g, h, x) + 1e-12


def test_distance_grows_with_x():
    f = random_multiplicative(5, circle=True)
    for t in (0.0, 1.3):
        values = [distance_sq(DistanceQuery(f, x, twist_m=2), t) for x in (100, 1000, 10_000, 50_000)]
        assert values == sorted(values)


@pytest.mark.slow
def test_profile_localizes_a_twisted_character():
    f = AngularCharacter(-3) * NormPower(2.5)
    profile = dict(pretentious_profile(f, range(-4, 5), 100_000))
    best = profile[3]
    assert best.certified
    assert abs(best.t_star - 2.5) <= 0.05
    assert best.value <= 0.05
    assert min(result.value for m, result in profile.items() if m != 3) > best.value + 0.5


def test_euler_product_of_one():
    value = euler_F(one(), 2.0, 100_000)
    assert value.value == pytest.approx(ZETA_K_2, abs=1e-4)
    assert abs(math.log(value.value.real) - math.log(ZETA_K_2)) <= value.tail_bound


def test_euler_product_of_mobius():
    value = euler_F(mobius(), 2.0, 100_000)
    assert value.value * ZETA_K_2 == pytest.approx(1.0, abs=1e-4)


def test_euler_product_vectorized():
    product = EulerProduct(random_multiplicative(2, completely_multiplicative=False), 1000, 1.5)
    s = np.array([1.5, 1.5 + 2j, 2.0 - 1j])
    values = product(s).value
    for point, value in zip(s, values):
        assert product(point).value == pytest.approx(value)


def test_euler_product_precision_guard():
    with pytest.raises(PrecisionError):
        EulerProduct(one(), 100, 1.0)
    product = EulerProduct(one(), 100, 1.5)
    with pytest.raises(PrecisionError):
        product.log(1.2)


def test_halasz_rhs():
    x = 10_000.0
    assert halasz_rhs("thm1_2", x=x, M=0.0) == pytest.approx(x + x / math.log(x) * math.log(math.log(x)))
    assert halasz_rhs("thm1_4", x=x, M=-1.0, kappa=1) == halasz_rhs("thm1_4", x=x, M=0.0, kappa=1)
    assert halasz_rhs("thm5_5", x=x, M_list=[1.0, 3.0], T=4) > halasz_rhs("thm5_5", x=x, M_list=[3.0, 5.0], T=4)
    assert halasz_rhs("sectorial_decay", x=x, A=1.0, T=8) > 0
    with pytest.raises(InvalidArgument):
        halasz_rhs("thm9_9", x=x)
    with pytest.raises(InvalidArgument):
        halasz_rhs("thm1_2", x=x)


def test_halasz_M_of_one_peaks_at_zero():
    params = halasz_M(one(), 1, 1000)
    assert abs(params.t_star) < 0.01
    assert params.M_plus >= 0
    assert params.c0 == pytest.approx(1 + 1 / math.log(1000))


def test_halasz_M_is_larger_for_mobius():
    assert halasz_M(mobius(), 1, 1000).M > halasz_M(one(), 1, 1000).M


def test_halasz_M_requires_lambda_bound():
    with pytest.raises(ContractViolation):
        halasz_M(divisor_function(2), 1, 100)
    assert halasz_M(divisor_function(2), 2, 100).kappa == 2


def test_euler_pretentious_bound():
    report = check_euler_pretentious_bound(one(), 1, 1000)
    assert report.tag == "euler_pretentious"
    assert 0.1 < report.ratio < 10
