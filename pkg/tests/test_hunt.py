import pytest

from lieprops import catalog
from lieprops.config import ScanConfig
from lieprops.errors import Unsupported
from lieprops.fields import GF, Q
from lieprops.fileformat import read
from lieprops.hunt import HuntRecord, conjecture_hunt, dump_counterexample, examine, reverify, sample_algebra


def test_small_dimensions_are_vacuous():
    s = conjecture_hunt(GF(3), 1, 2, 300, seed=1, include_catalog=False)
    assert s.valid == s.samples == 300
    assert s.met == 0 and not s.records


def test_sl2_meets_hypothesis_and_is_two_generated():
    rec = examine(catalog.sl2(GF(5)))
    assert rec.hypothesis == "met" and rec.conclusion == "held"
    assert examine(catalog.heisenberg(GF(5))).hypothesis == "not_simple"


def test_witt_is_not_minimal_non_solvable():
    rec = examine(catalog.witt(5))
    assert rec.hypothesis == "not_minimal" and rec.witness is not None


def test_samples_are_reproducible():
    for i in range(50):
        assert sample_algebra(GF(2), 1, 4, 7, i) == sample_algebra(GF(2), 1, 4, 7, i)


def test_worker_count_does_not_change_records():
    a = conjecture_hunt(GF(2), 3, 3, 600, seed=3, cfg=ScanConfig(workers=1))
    b = conjecture_hunt(GF(2), 3, 3, 600, seed=3, cfg=ScanConfig(workers=3))
    key = lambda s: [(r.source, r.index, r.hypothesis, r.conclusion, r.pair) for r in s.records]
    assert key(a) == key(b) and a.valid == b.valid


def test_hunt_needs_finite_field():
    with pytest.raises(Unsupported):
        conjecture_hunt(Q, 1, 3, 10)


def test_planted_record_is_rejected(tmp_path):
    L = catalog.cross_product(GF(2))
    fake = HuntRecord("sample", 0, 99, L, "met", "failed", None)
    assert fake.counterexample
    assert not reverify(fake)
    path = dump_counterexample(fake, tmp_path)
    text = open(path).read()
    assert "# seed=99" in text and read(path) == L


def test_non_generating_pair_is_not_enough():
    # a genuine failure needs the algebra itself to be non-two-generated
    L = catalog.abelian(3, GF(2))
    rec = HuntRecord("sample", 1, 0, L, "met", "failed", ((1, 0, 0), (0, 1, 0)))
    assert not reverify(rec)
