import pytest

from lieprops import catalog
from lieprops.config import ScanConfig
from lieprops.errors import CapExceeded, Unsupported
from lieprops.fields import GF, Q
from lieprops.linalg import Subspace, galois_number
from lieprops.scans import (
    enumerate_subalgebras,
    generates,
    is_two_generated,
    maximal_subalgebras,
    sample_pair,
    twogen_subalgebra_scan,
)


def span(L, *vs):
    return Subspace.span(L.field, L.dim, vs)


def test_abelian_subalgebras_are_all_subspaces():
    L = catalog.abelian(3, GF(2))
    assert len(enumerate_subalgebras(L)) == galois_number(3, 2) == 16
    L2 = catalog.abelian(2, GF(2))
    assert len(enumerate_subalgebras(L2)) == 5
    assert len(maximal_subalgebras(L2)) == 3


def test_heisenberg_maximal_subalgebras_contain_center():
    L = catalog.heisenberg(GF(2))
    maxes = maximal_subalgebras(L)
    assert len(maxes) == 3
    c = span(L, L.basis[2])
    assert all(M.dim == 2 and c.le(M.space) for M in maxes)


def test_sl2_lattice_sizes():
    assert len(enumerate_subalgebras(catalog.sl2(GF(5)))) == 39
    assert len(maximal_subalgebras(catalog.sl2(GF(5)))) == 16
    assert len(enumerate_subalgebras(catalog.sl2(GF(7)))) == 67
    assert len(maximal_subalgebras(catalog.sl2(GF(7)))) == 29


def test_every_proper_subalgebra_lies_in_a_maximal_one(random_corpus):
    for L in random_corpus[:80]:
        subs = enumerate_subalgebras(L)
        maxes = maximal_subalgebras(L, subalgebras=subs)
        for S in subs:
            if S.dim < L.dim:
                assert any(S.space.le(M.space) for M in maxes)
        assert all(M in subs for M in maxes)


def test_two_generation_examples():
    H = catalog.heisenberg(GF(3))
    res = is_two_generated(H)
    assert res.verdict and generates(H, *res.pair)
    assert is_two_generated(catalog.abelian(3, GF(2))).verdict is False
    S = catalog.sl2(GF(5))
    res = is_two_generated(S)
    assert res.verdict and generates(S, *res.pair)
    e, f, h = S.basis
    assert generates(S, e, f)


def test_sampled_mode_is_heuristic():
    cfg = ScanConfig(mode="sampled", samples=50, seed=1)
    res = is_two_generated(catalog.abelian(3, GF(2)), cfg)
    assert res.verdict is None and res.heuristic
    res = is_two_generated(catalog.sl2(Q), cfg)
    assert res.verdict is True
    scan = twogen_subalgebra_scan(catalog.heisenberg(Q), "nilpotent", cfg)
    assert scan.status == "no_witness_sampled" and not scan.all_hold
    with pytest.raises(Unsupported):
        is_two_generated(catalog.sl2(Q))


def test_pair_scans():
    assert twogen_subalgebra_scan(catalog.heisenberg(GF(3)), "nilpotent").all_hold
    assert twogen_subalgebra_scan(catalog.sl2(GF(7)), "triangulable_on_L").all_hold
    res = twogen_subalgebra_scan(catalog.sl2(GF(5)), "nilpotent")
    assert res.status == "witness"
    x, y, S = res.witness
    assert not S.is_full()


def test_caps():
    with pytest.raises(CapExceeded):
        enumerate_subalgebras(catalog.sl2(GF(5)), ScanConfig(max_subspaces=10))
    with pytest.raises(CapExceeded):
        is_two_generated(catalog.sl2(GF(5)), ScanConfig(max_pairs=5))


def test_sample_pairs_are_reproducible():
    L = catalog.sl2(GF(7))
    assert sample_pair(L, 3, 17) == sample_pair(L, 3, 17)
    assert sample_pair(L, 3, 17) != sample_pair(L, 3, 18)


@pytest.mark.parametrize("mode", ["exhaustive", "sampled"])
def test_results_do_not_depend_on_workers(mode):
    L = catalog.ev_type_a(3, 1)
    outs = []
    for w in (1, 3):
        cfg = ScanConfig(mode=mode, samples=300, seed=5, workers=w)
        outs.append((
            is_two_generated(L, cfg),
            twogen_subalgebra_scan(L, "supersolvable", cfg),
            [S.space for S in enumerate_subalgebras(catalog.sl2(GF(5)), cfg)],
        ))
    assert outs[0] == outs[1]
