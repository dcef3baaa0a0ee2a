"""Distance brackets, dichotomy, point extraction, complement, eps-nets."""

import random
from fractions import Fraction

import pytest

from locball import (
    Box,
    Dichotomy,
    FiniteSpace,
    FormalBall,
    InComplement,
    Line,
    NoPositiveBallError,
    NotDetected,
    ParameterError,
    PositivityOracle,
    Rat,
    SplittingExhaustedError,
    UnsupportedSpaceError,
    ball_le,
    dichotomy,
    distance,
    epsilon_net,
    interval_oracle,
    is_positive,
    metric_complement,
    point_extract,
    points_oracle,
    pow2,
    union_oracle,
)

from conftest import frac, interval_dist, rand_rat

line = Line()
UNIT = interval_oracle(line, Rat(0), Rat(1))


def test_dichotomy_examples():
    assert dichotomy(UNIT, Rat(2), Rat(1, 2), Rat(3, 4)) is Dichotomy.EMPTY
    assert dichotomy(UNIT, Rat(2), Rat(3, 2), Rat(2)) is Dichotomy.MEETS
    assert dichotomy(UNIT, Rat(1, 2), Rat(1, 4), Rat(1, 2)) is Dichotomy.MEETS


def test_dichotomy_requires_ordered_radii():
    with pytest.raises(ParameterError):
        dichotomy(UNIT, Rat(0), Rat(1), Rat(1))
    with pytest.raises(ParameterError):
        dichotomy(UNIT, Rat(0), Rat(2), Rat(1))


def test_distance_brackets_the_closed_form():
    b = distance(UNIT, Rat(2), tol_exp=20)
    assert b.lo <= 1 <= b.hi
    assert b.width <= pow2(-20)
    assert b.oracle_calls <= 64 + 20


def test_distance_inside_the_set():
    b = distance(UNIT, Rat(1, 2), tol_exp=16)
    assert b.lo == 0
    assert b.hi <= pow2(-16)


def test_distance_points_oracle():
    P = points_oracle(line, [Rat(0), Rat(3)])
    b = distance(P, Rat(1), tol_exp=20)
    assert b.lo <= 1 <= b.hi
    assert b.width <= pow2(-20)


def test_distance_bracket_invariant_is_recheckable():
    b = distance(UNIT, Rat(-7, 3), tol_exp=12)
    assert is_positive(UNIT, FormalBall(Rat(-7, 3), b.hi))
    if b.lo > 0:
        assert not is_positive(UNIT, FormalBall(Rat(-7, 3), b.lo))


def test_distance_raises_past_r_max():
    far = points_oracle(line, [Rat(100)])
    with pytest.raises(NoPositiveBallError):
        distance(far, Rat(0), tol_exp=10, r_max=Rat(8))


def test_distance_parameter_validation():
    with pytest.raises(ParameterError):
        distance(UNIT, Rat(0), tol_exp=0)
    with pytest.raises(ParameterError):
        distance(UNIT, Rat(0), tol_exp=10, r_max=Rat(0))


def test_distance_matches_brute_force_over_samples():
    rng = random.Random(41)
    oracles = [
        (UNIT, lambda x: interval_dist(Fraction(0), Fraction(1), x)),
        (
            union_oracle(line, [(Rat(0), Rat(1)), (Rat(2), Rat(3))]),
            lambda x: min(
                interval_dist(Fraction(0), Fraction(1), x),
                interval_dist(Fraction(2), Fraction(3), x),
            ),
        ),
        (
            points_oracle(line, [Rat(0), Rat(3)]),
            lambda x: min(abs(x), abs(x - 3)),
        ),
    ]
    for _ in range(100):
        P, oracle_d = oracles[rng.randrange(len(oracles))]
        x = rand_rat(rng, -12, 12, 32)
        got = distance(P, x, tol_exp=20)
        want = oracle_d(frac(x))
        assert frac(got.lo) <= want <= frac(got.hi)
        assert abs(frac(got.midpoint) - want) <= Fraction(1, 2**20)


def test_point_extract_interval_example():
    approx = point_extract(UNIT, FormalBall(Rat(1, 2), Rat(2)), tol_exp=10)
    d = interval_dist(Fraction(0), Fraction(1), frac(approx.approx))
    assert d <= Fraction(1, 2**10)
    assert approx.tolerance == pow2(-10)


def test_point_extract_chain_invariants():
    approx = point_extract(UNIT, FormalBall(Rat(1, 2), Rat(2)), tol_exp=10)
    chain = approx.chain
    assert chain[0] == FormalBall(Rat(1, 2), Rat(2))
    assert chain[-1].radius <= pow2(-10)
    assert approx.approx == chain[-1].center
    for prev, nxt in zip(chain, chain[1:]):
        assert ball_le(line, nxt, prev)
        assert 2 * nxt.radius <= prev.radius
    for b in chain:
        assert is_positive(UNIT, b)


def test_point_extract_points_oracle_finds_the_reachable_point():
    P = points_oracle(line, [Rat(0), Rat(3)])
    approx = point_extract(P, FormalBall(Rat(1, 2), Rat(1)), tol_exp=10)
    assert abs(frac(approx.approx)) <= Fraction(1, 2**10)


def test_point_extract_tiny_ball_stays_inside():
    b = FormalBall(Rat(1, 2), Rat(1, 4096))
    approx = point_extract(UNIT, b, tol_exp=10)
    assert approx.chain == (b,)
    assert approx.approx == Rat(1, 2)


def test_point_extract_requires_positive_ball():
    with pytest.raises(ParameterError):
        point_extract(UNIT, FormalBall(Rat(5), Rat(1)), tol_exp=8)


def test_point_extract_convicts_radius_only_oracle():
    P = PositivityOracle(line, "radius-only", lambda b: b.radius >= Rat(3, 4))
    with pytest.raises(SplittingExhaustedError):
        point_extract(P, FormalBall(Rat(0), Rat(1)), tol_exp=10, depth=4)


def test_metric_complement_examples():
    assert metric_complement(UNIT, Rat(2)) == InComplement(Rat(1, 2))
    assert metric_complement(UNIT, Rat(1, 2), max_exp=20) == NotDetected(20)


def test_metric_complement_brouwer_boundary_touch():
    from locball import brouwer_oracle

    P = brouwer_oracle(line, True)
    # d(3/2, [0,1]) = 1/2 exactly, so the very first probe certifies
    assert metric_complement(P, Rat(3, 2)) == InComplement(Rat(1, 2))


def test_metric_complement_delta_is_a_true_separation():
    rng = random.Random(43)
    for _ in range(50):
        x = rand_rat(rng, -8, 8, 16)
        verdict = metric_complement(UNIT, x, max_exp=16)
        d = interval_dist(Fraction(0), Fraction(1), frac(x))
        if isinstance(verdict, InComplement):
            assert frac(verdict.delta) <= d
        else:
            assert d < Fraction(1, 2**16)


def test_dichotomy_coheres_with_distance():
    rng = random.Random(47)
    for _ in range(100):
        x = rand_rat(rng, -8, 8, 16)
        delta = rand_rat(rng, 1, 8, 8) / 2
        eps = delta + rand_rat(rng, 1, 4, 8)
        verdict = dichotomy(UNIT, x, delta, eps)
        b = distance(UNIT, x, tol_exp=20)
        if verdict is Dichotomy.EMPTY:
            assert b.lo >= delta - pow2(-20)
        else:
            assert b.hi <= eps + pow2(-20)


def test_epsilon_net_interval_in_box():
    box = Box(1, Rat(2))
    P = interval_oracle(box, Rat(0), Rat(1))
    net = epsilon_net(P, Rat(1, 10), tol_exp=6)
    assert 5 <= len(net.points) <= 41
    for pt in net.points:
        assert pt.tolerance <= Rat(1, 40)
        d = interval_dist(Fraction(0), Fraction(1), frac(pt.approx[0]))
        assert d <= Fraction(1, 40)
    # coverage of the closed set at radius eps
    for i in range(0, 101):
        y = Fraction(i, 100)
        best = min(abs(frac(pt.approx[0]) - y) for pt in net.points)
        assert best <= Fraction(1, 10)


def test_epsilon_net_finite_clusters(finite3):
    P = points_oracle(finite3, [0, 2])
    net = epsilon_net(P, Rat(1), tol_exp=3)
    assert sorted(pt.approx for pt in net.points) == [0, 2]


def test_epsilon_net_empty_when_never_positive():
    box = Box(1, Rat(2))
    P = PositivityOracle(box, "nothing", lambda b: False)
    net = epsilon_net(P, Rat(1, 2), tol_exp=4)
    assert net.points == ()


def test_epsilon_net_rejects_unbounded_space():
    with pytest.raises(UnsupportedSpaceError):
        epsilon_net(UNIT, Rat(1, 10), tol_exp=6)


def test_epsilon_net_parameter_validation():
    box = Box(1, Rat(2))
    P = interval_oracle(box, Rat(0), Rat(1))
    with pytest.raises(ParameterError):
        epsilon_net(P, Rat(1, 10), tol_exp=3)  # 1/8 > eps/4
    with pytest.raises(ParameterError):
        epsilon_net(P, Rat(0), tol_exp=6)
