"""Metric instances: distances, nets, validation."""

import random

import pytest

from locball import (
    Box,
    FiniteSpace,
    InstanceMismatchError,
    Line,
    ParameterError,
    Rat,
    load_finite_matrix,
)

from conftest import rand_rat


def test_line_distance():
    line = Line()
    assert line.dist(Rat(1, 2), Rat(2)) == Rat(3, 2)
    assert line.dist(Rat(-3), Rat(3)) == 6


def test_box_distance_is_sup_metric():
    box = Box(2, Rat(4))
    assert box.dist((Rat(0), Rat(0)), (Rat(1), Rat(-2))) == 2
    assert box.dist((Rat(1), Rat(1)), (Rat(1), Rat(1))) == 0


def test_finite_distance_is_matrix_lookup():
    m = FiniteSpace(((Rat(0), Rat(5)), (Rat(5), Rat(0))))
    assert m.dist(0, 1) == 5


@pytest.mark.parametrize("bad_point", [Rat(1), (Rat(1),), 7, "x"])
def test_box2_rejects_foreign_points(bad_point):
    box = Box(2, Rat(4))
    with pytest.raises(InstanceMismatchError):
        box.validate_point(bad_point)


def test_line_rejects_tuples_and_finite_rejects_out_of_range():
    with pytest.raises(InstanceMismatchError):
        Line().dist((Rat(0),), Rat(1))
    m = FiniteSpace(((Rat(0), Rat(1)), (Rat(1), Rat(0))))
    with pytest.raises(InstanceMismatchError):
        m.dist(0, 2)


def test_metric_axioms_on_samples():
    rng = random.Random(7)
    spaces = [
        (Line(), lambda: rand_rat(rng, -8, 8)),
        (Box(2, Rat(4)), lambda: (rand_rat(rng, -4, 4), rand_rat(rng, -4, 4))),
    ]
    for space, sample in spaces:
        for _ in range(300):
            p, q, r = sample(), sample(), sample()
            assert space.dist(p, q) == space.dist(q, p)
            assert (space.dist(p, q) == 0) == (p == q)
            assert space.dist(p, r) <= space.dist(p, q) + space.dist(q, r)


def test_finite_matrix_validation():
    with pytest.raises(ParameterError):
        FiniteSpace(((Rat(1),),))  # nonzero diagonal
    with pytest.raises(ParameterError):
        FiniteSpace(((Rat(0), Rat(1)), (Rat(2), Rat(0))))  # asymmetric
    with pytest.raises(ParameterError):
        # 0-2 distance exceeds the 0-1-2 path
        FiniteSpace(
            (
                (Rat(0), Rat(1), Rat(9)),
                (Rat(1), Rat(0), Rat(1)),
                (Rat(9), Rat(1), Rat(0)),
            )
        )


def test_line_local_net_grid():
    line = Line()
    net = line.local_net(Rat(0), Rat(1), Rat(1, 2))
    assert net == [Rat(-1), Rat(-1, 2), Rat(0), Rat(1, 2), Rat(1)]


def test_local_net_single_center_when_mesh_covers_radius():
    box = Box(2, Rat(4))
    assert box.local_net((Rat(0), Rat(0)), Rat(1), Rat(1)) == [(Rat(0), Rat(0))]


def test_finite_local_net_is_exhaustive_within_radius():
    m = FiniteSpace(
        (
            (Rat(0), Rat(1), Rat(3)),
            (Rat(1), Rat(0), Rat(5, 2)),
            (Rat(3), Rat(5, 2), Rat(0)),
        )
    )
    assert m.local_net(0, Rat(2), Rat(1)) == [0, 1]
    assert m.local_net(0, Rat(4), Rat(1)) == [0, 1, 2]


def test_local_net_soundness_sampled():
    rng = random.Random(11)
    line = Line()
    x, R, s = Rat(1, 3), Rat(2), Rat(1, 4)
    net = line.local_net(x, R, s)
    assert len(net) == len(set(net))
    for _ in range(1000):
        offset = rand_rat(rng, -2, 2, 64)
        p = x + offset
        if line.dist(p, x) < R:
            assert any(line.dist(p, z) <= s for z in net)


def test_global_net_box_grid():
    box = Box(1, Rat(1))
    net = box.global_net(Rat(1, 2))
    assert net == [(Rat(-1),), (Rat(-1, 2),), (Rat(0),), (Rat(1, 2),), (Rat(1),)]


def test_global_net_box_covers_carrier_samples():
    rng = random.Random(3)
    box = Box(2, Rat(2))
    s = Rat(1, 3)
    net = box.global_net(s)
    for _ in range(500):
        p = (rand_rat(rng, -2, 2, 32), rand_rat(rng, -2, 2, 32))
        assert any(box.dist(p, z) <= s for z in net)


def test_global_net_line_is_unbounded():
    assert Line().global_net(Rat(1)) is None


def test_global_net_finite_is_full_carrier():
    m = FiniteSpace(((Rat(0), Rat(5)), (Rat(5), Rat(0))))
    assert m.global_net(Rat(1)) == [0, 1]


def test_net_parameter_validation():
    line = Line()
    with pytest.raises(ParameterError):
        line.local_net(Rat(0), Rat(0), Rat(1))
    with pytest.raises(ParameterError):
        line.local_net(Rat(0), Rat(1), Rat(0))


def test_load_finite_matrix(tmp_path):
    path = tmp_path / "m.txt"
    path.write_text("3\n0 1 3\n1 0 5/2\n3 5/2 0\n")
    m = load_finite_matrix(path)
    assert m.size == 3
    assert m.dist(1, 2) == Rat(5, 2)

    bad = tmp_path / "bad.txt"
    bad.write_text("2\n0 1\n1\n")
    with pytest.raises(ParameterError):
        load_finite_matrix(bad)


def test_point_text_round_trip():
    line = Line()
    assert line.parse_point(line.format_point(Rat(-7, 3))) == Rat(-7, 3)
    box = Box(2, Rat(4))
    p = (Rat(1, 2), Rat(-3))
    assert box.parse_point(box.format_point(p)) == p
    m = FiniteSpace(((Rat(0), Rat(1)), (Rat(1), Rat(0))))
    assert m.parse_point("1") == 1
