import pytest

from corpus import triangle
from indpoly.decomp import GraphicLeaf, node_matroid
from indpoly.extform import vrep_lift
from indpoly.gf2 import Gf2Matrix
from indpoly.graphic import graphic_independence_ef
from indpoly.matroid import BinaryMatroid
from indpoly.verify import (IndependenceFamily, VerifyError, certify_equality,
                            greedy_cross_check, rectangle_cover,
                            validity_of_exchange_claim)


@pytest.fixture(scope="module")
def k3():
    ef = graphic_independence_ef(triangle())
    return ef, node_matroid(GraphicLeaf(triangle()))


def test_certify_pass_on_graphic(k3):
    ef, m = k3
    report = certify_equality(ef, m)
    assert report.overall
    c = report.counts
    assert c["rank_checks"] == 2 ** m.size and c["rank_failures"] == 0
    assert c["rank_tight"] == c["rank_checks"]
    assert c["vertex_failures"] == 0 and c["nonneg_failures"] == 0


def test_certify_pass_on_vrep(k3):
    _, m = k3
    points = [{e: 1 for e in s} for s in m.independent_sets(12)]
    assert certify_equality(vrep_lift(points, list(m.elements)), m).overall


def test_certify_fails_on_too_big_polytope(k3):
    _, m = k3
    cube = vrep_lift([{}, {"a": 1, "b": 1, "c": 1}], ["a", "b", "c"])
    cube_down = vrep_lift(
        [{e: 1 for e in s} for s in
         [set(), {"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"}, {"b", "c"},
          {"a", "b", "c"}]], ["a", "b", "c"])
    report = certify_equality(cube_down, m)
    assert not report.overall
    # the full triangle violates its rank inequality
    assert any(s == ("a", "b", "c") and not ok
               for s, _v, _r, ok, _t in report.rank_checks)


def test_certify_fails_on_too_small_polytope(k3):
    _, m = k3
    point = vrep_lift([{}], ["a", "b", "c"])
    report = certify_equality(point, m)
    assert not report.overall
    assert any(not ok for _s, ok in report.vertex_checks)


def test_certify_errors(k3):
    ef, m = k3
    with pytest.raises(VerifyError):
        certify_equality(ef, m, cap=2)
    other = BinaryMatroid.from_matrix(Gf2Matrix.identity(1))
    with pytest.raises(VerifyError):
        certify_equality(ef, other)


def test_report_json_deterministic(k3):
    ef, m = k3
    a = certify_equality(ef, m)
    b = certify_equality(ef, m)
    assert a.to_json() == b.to_json()
    assert '"schema_version":1' in a.to_json()


def test_greedy_cross_check(k3):
    ef, m = k3
    report = greedy_cross_check(ef, m, trials=50, seed=4)
    assert report.ok and report.trials == 50
    # a shrunken polytope must produce mismatches
    tiny = vrep_lift([{}], ["a", "b", "c"])
    assert not greedy_cross_check(tiny, m, trials=50, seed=4).ok


def test_rectangle_cover_free_matroid():
    m = BinaryMatroid.from_columns(Gf2Matrix.identity(3), ["a", "b", "c"])
    rects, report = rectangle_cover(m)
    assert report.ok
    assert report.num_rectangles == 9 <= report.count_bound
    # non-incidence pairs of a free matroid: S not inside I
    indep = m.independent_sets(8)
    want = sum(1 for s in indep for i in indep
               if s and not (set(s) <= set(i)))
    assert report.total == want


def test_rectangle_cover_single_loop():
    loop = BinaryMatroid.from_matrix(Gf2Matrix(0, 1, ()))
    rects, report = rectangle_cover(loop)
    assert report.ok and report.total == 0  # r({e}) = 0 kills Eq.-style pairs


def test_rectangle_cover_k3(k3):
    _, m = k3
    rects, report = rectangle_cover(m)
    assert report.ok and report.num_rectangles <= 9


def test_exchange_claim_on_matroids(k3):
    _, m = k3
    assert validity_of_exchange_claim(m) == (True, None)
    free = BinaryMatroid.from_columns(Gf2Matrix.identity(3), ["a", "b", "c"])
    assert validity_of_exchange_claim(free) == (True, None)


def test_exchange_claim_negative_control():
    fake = IndependenceFamily(
        ["1", "2", "3", "4"],
        [frozenset(), frozenset({"1"}), frozenset({"2"}),
         frozenset({"1", "2"}), frozenset({"3"}), frozenset({"4"}),
         frozenset({"3", "4"})])
    ok, witness = validity_of_exchange_claim(fake)
    assert not ok and witness is not None


def test_independence_family_validation():
    with pytest.raises(VerifyError):
        IndependenceFamily(["1"], [frozenset({"1"})])  # no empty set
    with pytest.raises(VerifyError):
        IndependenceFamily(["1"], [frozenset(), frozenset({"2"})])
    fam = IndependenceFamily.of(
        BinaryMatroid.from_matrix(Gf2Matrix.identity(2)))
    assert fam.rank_of(fam.elements) == 2
