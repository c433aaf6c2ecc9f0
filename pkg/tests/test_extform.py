import random

import pytest

from indpoly.extform import (ExtendedFormulation, Variable, affine_complement,
                             couple, fix_variable, intersection,
                             lp_feasible_point, lp_optimize, monotonize,
                             product, rename_labels, vrep_lift)
from indpoly.rational import Rational


def hull(points, labels=("x", "y")):
    return vrep_lift(points, labels)


SQUARE = [{"x": 0, "y": 0}, {"x": 1, "y": 0}, {"x": 0, "y": 1},
          {"x": 1, "y": 1}]
TRIANGLE = [{"x": 0, "y": 0}, {"x": 1, "y": 0}, {"x": 0, "y": 1}]


def test_vrep_optimum_is_max_over_points():
    rng = random.Random(5)
    pts = [{"x": rng.randint(0, 1), "y": rng.randint(0, 1),
            "z": rng.randint(0, 1)} for _ in range(6)]
    ef = vrep_lift(pts, ["x", "y", "z"])
    for _ in range(30):
        c = {l: rng.randint(-4, 4) for l in ("x", "y", "z")}
        status, value = lp_optimize(ef, c, "max")
        assert status == "optimal"
        assert value == max(sum(c[l] * p[l] for l in c) for p in pts)


def test_feasible_point_membership():
    ef = hull(TRIANGLE)
    assert lp_feasible_point(ef, {"x": Rational(1, 2), "y": Rational(1, 2)})
    assert not lp_feasible_point(ef, {"x": 1, "y": 1})
    assert lp_feasible_point(ef, {})  # origin


def test_monotonize_counts_and_labels():
    ef = hull([{"x": 1, "y": 1}])
    mono = monotonize(ef)
    assert mono.size()[0] == ef.size()[0] + 2 * 2
    assert set(mono.projected_labels) == {"x", "y"}
    # the down-closure of {(1,1)} is the whole square
    assert lp_feasible_point(mono, {"x": Rational(1, 3), "y": 0})
    assert not lp_feasible_point(ef, {"x": Rational(1, 3), "y": 1})


def test_affine_complement():
    ef = hull([{"x": 1, "y": 0}])  # single vertex
    comp = affine_complement(ef)
    # complement cube of (1,0): x in [0,0], y in [0,1]
    assert lp_feasible_point(comp, {"y": Rational(1, 2)})
    assert not lp_feasible_point(comp, {"x": Rational(1, 2)})


def test_product_and_couple():
    left = hull(SQUARE, ("a", "b"))
    right = hull(SQUARE, ("c", "d"))
    both = product(left, right)
    assert both.size()[0] == left.size()[0] + right.size()[0]
    assert set(both.projected_labels) == {"a", "b", "c", "d"}
    glued = couple(both, [("b", "c")])
    assert set(glued.projected_labels) == {"a", "d"}
    assert glued.size()[0] == both.size()[0]  # coupling adds only equations
    with pytest.raises(ValueError):
        product(left, hull(SQUARE, ("a", "z")))
    with pytest.raises(ValueError):
        couple(both, [("a", "a")])


def test_intersection():
    ef = intersection(hull(SQUARE), hull(TRIANGLE))
    assert ef.size()[0] == hull(SQUARE).size()[0] + hull(TRIANGLE).size()[0]
    status, value = lp_optimize(ef, {"x": 1, "y": 1}, "max")
    assert (status, value) == ("optimal", 1)  # triangle is the tighter one
    with pytest.raises(ValueError):
        intersection(hull(SQUARE), hull(SQUARE, ("x", "z")))


def test_fix_variable_and_rename():
    ef = fix_variable(hull(SQUARE), "x", 1)
    assert set(ef.projected_labels) == {"y"}
    status, value = lp_optimize(ef, {"y": -1}, "max")
    assert (status, value) == ("optimal", 0)
    renamed = rename_labels(hull(SQUARE), {"x": "u"})
    assert set(renamed.projected_labels) == {"u", "y"}
    with pytest.raises(ValueError):
        fix_variable(hull(SQUARE), "x", 2)


def test_validation():
    with pytest.raises(ValueError):
        ExtendedFormulation((Variable("v", "l"), Variable("w", "l")), (), ())
    with pytest.raises(ValueError):
        ExtendedFormulation((Variable("v"),), (({0: 1}, "<", 0),), ())
    with pytest.raises(ValueError):
        ExtendedFormulation((Variable("v"),), (({3: 1}, "<=", 0),), ())


def test_lp_optimize_directions():
    ef = hull(SQUARE)
    assert lp_optimize(ef, {"x": 1}, "min") == ("optimal", 0)
    assert lp_optimize(ef, {"x": 1}, "max") == ("optimal", 1)
    with pytest.raises(ValueError):
        lp_optimize(ef, {"x": 1}, "sideways")
