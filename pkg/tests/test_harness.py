import pytest

from lieprops import catalog
from lieprops.fields import GF
from lieprops.harness import (
    FAILED,
    HELD,
    MET,
    NOT_MET,
    VACUOUS,
    regenerates,
    run_suite,
    verify_condition_star,
    verify_frattini_two_generation,
    verify_gein,
    verify_min_non_strongly_solvable_shape,
    verify_simple_triangulable,
    verify_strongly_solvable_two_generation,
    verify_supersolvable_two_generation,
    verify_triangulable_two_generation,
)
from lieprops.props import decide
from lieprops.triang import is_triangulable_on


def test_gein_hypothesis_not_met_on_examples():
    rep = verify_gein(catalog.cross_product(GF(7)))
    assert rep.hypothesis == NOT_MET and "subalgebra" in rep.witness
    assert verify_gein(catalog.heisenberg(GF(3))).hypothesis == NOT_MET
    assert verify_gein(catalog.abelian(2, GF(3))).hypothesis == VACUOUS


def test_witt_is_not_covered_by_simple_triangulable():
    L = catalog.witt(5)
    rep = verify_simple_triangulable(L)
    assert rep.hypothesis == NOT_MET
    S = rep.witness["subalgebra"]
    assert not is_triangulable_on(L, S).verdict


def test_strongly_solvable_two_generation_on_type_a():
    L = catalog.ev_type_a(3, 1)
    rep = verify_strongly_solvable_two_generation(L)
    assert rep.hypothesis == MET and rep.conclusion == HELD
    assert regenerates(L, rep.witness["pair"])


def test_supersolvable_two_generation():
    rep = verify_supersolvable_two_generation(catalog.ev_type_a(3, 1))
    assert rep.hypothesis == NOT_MET
    rep = verify_supersolvable_two_generation(catalog.shape_type2(GF(3)))
    assert rep.hypothesis == MET and rep.conclusion == HELD


def test_triangulable_two_generation_on_sl2():
    rep = verify_triangulable_two_generation(catalog.sl2(GF(5)))
    assert rep.hypothesis == MET and rep.conclusion == HELD
    assert rep.stats["phi_dim"] == 0


@pytest.mark.parametrize(
    "build,shape",
    [
        (lambda: catalog.ev_type_a(3, 1), "I"),
        (lambda: catalog.shape_type1(GF(3)), "I"),
        (lambda: catalog.shape_type2(GF(3)), "II"),
    ],
)
def test_minimal_non_strongly_solvable_shapes(build, shape):
    rep = verify_min_non_strongly_solvable_shape(build())
    assert rep.hypothesis == MET and rep.conclusion == HELD
    assert rep.stats["type"] == shape


def test_condition_star_on_heisenberg_and_sl2():
    H = catalog.heisenberg(GF(3))
    for prop in ("abelian", "nilpotent", "quasi_abelian"):
        rep = verify_condition_star(H, prop)
        assert rep.hypothesis == MET and rep.conclusion == HELD
    rep = verify_condition_star(catalog.sl2(GF(5)), "nilpotent")
    assert rep.hypothesis == NOT_MET


def test_frattini_two_generation_on_small_catalog():
    for e in catalog.entries(fields=(GF(2), GF(3))):
        if e.algebra.dim <= 4:
            assert verify_frattini_two_generation(e.algebra).conclusion == HELD, e.name


def test_suites_never_fail_on_catalog():
    for L in (catalog.heisenberg(GF(3)), catalog.sl2(GF(5)), catalog.ev_type_a(3, 0)):
        for suite in ("star", "gein", "t31", "t33", "t35", "t47"):
            for rep in run_suite(L, suite):
                assert rep.conclusion != FAILED, (suite, rep)


def test_type_b_discrepancy_is_reported_not_asserted():
    e = [e for e in catalog.entries() if e.name == "ev_type_b"][0]
    assert e.expect["strongly_solvable"] == (False, "report")
    # the printed table gives an abelian derived algebra
    assert decide(e.algebra, "strongly_solvable")
