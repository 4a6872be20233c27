"""The ten acceptance criteria.  Each test records one PASS/FAIL line,
printed in the terminal summary and on stdout."""

import time
from contextlib import contextmanager
from itertools import product
from pathlib import Path

from conftest import ACCEPTANCE
from lieprops import catalog
from lieprops.algebra import LieAlgebra, closure_space, validate
from lieprops.cli import main
from lieprops.errors import JacobiViolation
from lieprops.fields import GF
from lieprops.fileformat import write
from lieprops.harness import (
    FAILED,
    HELD,
    MET,
    lemma_suite,
    regenerates,
    verify_condition_star,
    verify_simple_triangulable,
    verify_triangulable_two_generation,
)
from lieprops.hunt import HuntRecord, conjecture_hunt, dump_counterexample, reverify
from lieprops.linalg import intersect_all
from lieprops.props import (
    adjoint,
    check_flag,
    frattini,
    is_nilpotent,
    is_quasi_abelian,
    is_simple,
    is_solvable,
    is_strongly_solvable,
    is_supersolvable,
    quasi_abelian_literal,
    supersolvable_flag,
)
from lieprops.report import parse_records
from lieprops.scans import (
    enumerate_subalgebras,
    is_two_generated,
    maximal_subalgebras,
    twogen_subalgebra_scan,
)
from lieprops.triang import is_triangulable_on

GOLDEN = Path(__file__).parent / "golden"


@contextmanager
def criterion(n, text):
    ACCEPTANCE[n] = (False, text)
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"criterion {n}: FAIL  {text}")
        raise
    secs = time.perf_counter() - t0
    ACCEPTANCE[n] = (True, f"{text} ({secs:.1f}s)")
    print(f"criterion {n}: PASS  {text} ({secs:.1f}s)")


def _mutations(L):
    F, n = L.field, L.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                b = L.brackets
                v = list(b.get((i, j), (F.zero,) * n))
                v[k] = F.norm(v[k] + 1)
                b[(i, j)] = tuple(v)
                yield (i, j, k), b


def test_validation_and_mutation():
    with criterion(1, "catalog validates; single-constant mutations are rejected with a named triple"):
        t0 = time.perf_counter()
        for e in catalog.entries():
            L = e.algebra
            if L.brackets:
                assert validate(L.brackets, L.field, L.names) == L
            rejected = []
            for where, table in _mutations(L):
                try:
                    LieAlgebra(L.field, L.dim, table, L.names)
                except JacobiViolation as exc:
                    assert exc.i < exc.j < exc.k and any(exc.defect)
                    assert not any(L.jacobi_defect(exc.i, exc.j, exc.k))
                    rejected.append(where)
            if L.dim <= 2 or L.is_abelian():
                # no distinct triple (dim <= 2), or every one-bracket table is a Lie algebra
                assert not rejected, e.name
            else:
                assert rejected, f"{e.name} {e.params}: no mutation rejected"
        assert time.perf_counter() - t0 < 5


def test_deciders_against_brute_force(random_corpus):
    with criterion(2, "quasi-abelian, nilpotency and flag deciders match brute force on 200 algebras"):
        t0 = time.perf_counter()
        for L in random_corpus:
            assert is_quasi_abelian(L) == quasi_abelian_literal(L)
            engel = all(adjoint(L, v).is_nilpotent() for v in product(range(L.field.p), repeat=L.dim))
            assert is_nilpotent(L) == engel
            flag = supersolvable_flag(L)
            if flag is not None:
                assert check_flag(L, flag)
        assert time.perf_counter() - t0 < 120


def test_condition_star_over_corpus(random_corpus):
    with criterion(3, "condition (*) for nilpotent, abelian, quasi_abelian over the corpus"):
        met = 0
        for L in random_corpus:
            for prop in ("nilpotent", "abelian", "quasi_abelian"):
                rep = verify_condition_star(L, prop)
                assert rep.conclusion != FAILED, (prop, L)
                met += rep.hypothesis == MET
        assert met > 0


def test_type_a_extension():
    with criterion(4, "type (a) extension p=3, alpha=1: verdicts and two-generation cross-check"):
        t0 = time.perf_counter()
        L = catalog.ev_type_a(3, 1, GF(3))
        assert is_solvable(L) and not is_strongly_solvable(L) and not is_supersolvable(L)
        for prop in ("strongly_solvable", "supersolvable"):
            scan = twogen_subalgebra_scan(L, prop)
            if scan.all_hold:
                tg = is_two_generated(L)
                assert tg.verdict is True and tg.pair is not None
                assert closure_space(L, list(tg.pair)).is_full()
                assert regenerates(L, tg.pair)
        assert time.perf_counter() - t0 < 300


def test_simple_triangulable_on_sl2():
    with criterion(5, "simple-triangulable conclusions on sl2 over GF(5) and GF(7)"):
        t0 = time.perf_counter()
        for p in (5, 7):
            rep = verify_simple_triangulable(catalog.sl2(GF(p)))
            assert rep.hypothesis == MET and rep.conclusion == HELD, p
            names = dict(rep.checks)
            for check in (
                "maximal_abelian_or_nil_maximal",
                "nil_normalizer_maximal",
                "intersections_no_ad_nilpotent",
                "intersections_abelian",
                "two_generated",
            ):
                assert names[check] is True, (p, check)
        assert time.perf_counter() - t0 < 600


def test_minimal_non_triangulable_sl2():
    with criterion(6, "sl2/GF(5): not triangulable, proper subalgebras are; two-generated and L/phi simple"):
        L = catalog.sl2(GF(5))
        assert not is_triangulable_on(L, L.full).verdict
        subs = enumerate_subalgebras(L)
        assert all(is_triangulable_on(L, S.space).verdict for S in subs if S.dim < L.dim)
        maxes = maximal_subalgebras(L, subalgebras=subs)
        assert intersect_all(L.field, L.dim, [M.space for M in maxes]).is_zero()
        assert frattini(L).frattini_ideal.space.is_zero()
        rep = verify_triangulable_two_generation(L)
        assert rep.hypothesis == MET and rep.conclusion == HELD
        assert dict(rep.checks) == {"part2.two_generated": True, "part2.quotient_simple": True}
        assert rep.stats["phi_dim"] == 0 and is_simple(L)


def test_lemma_suite(random_corpus):
    with criterion(7, "lemma suite over the corpus and the finite catalog"):
        algebras = list(random_corpus) + [e.algebra for e in catalog.entries() if e.algebra.field.is_finite]
        for L in algebras:
            for rep in lemma_suite(L):
                assert rep.hypothesis == MET
                assert rep.conclusion == HELD, (rep.theorem, rep.witness, L)


def _cli(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    assert code == 0, err
    return out


def test_frattini_golden_files(capsys):
    with criterion(8, "Frattini golden files reproduced bit-exactly"):
        for name in ("heisenberg_gf3", "abelian3_gf2"):
            out = _cli(capsys, "frattini", GOLDEN / f"{name}.lie", "--no-timing")
            assert out == (GOLDEN / f"{name}.frattini").read_text()
        rec = parse_records((GOLDEN / "heisenberg_gf3.frattini").read_text())[0]
        assert rec["frattini_subalgebra"] == rec["frattini_ideal"] == "0,0,1"
        rec = parse_records((GOLDEN / "abelian3_gf2.frattini").read_text())[0]
        assert rec["frattini_ideal"] == "-"


def test_conjecture_hunt(capsys, tmp_path):
    with criterion(9, "hunt GF(2), dim <= 4, 10^4 samples: no counterexamples; planted record rejected"):
        summary = conjecture_hunt(GF(2), 1, 4, 10_000, seed=42)
        assert summary.samples == 10_000
        assert summary.counterexamples == 0
        met = [r for r in summary.records if r.hypothesis == MET]
        assert len(met) == summary.met > 0
        out = _cli(capsys, "hunt", "--field", "GF(2)", "--dim-max", "4", "--samples", "10000",
                   "--seed", "42", "--no-timing", "--dump-dir", tmp_path / "dump")
        recs = parse_records(out)
        assert sum(r["hypothesis"] == "met" for r in recs if r["record"] == "hunt") == int(recs[-1]["hypothesis_met"])
        assert recs[-1]["counterexamples"] == "0"

        # plant a fake counterexample and push it through check + twogen
        fake = HuntRecord("sample", 0, 42, catalog.cross_product(GF(2)), "met", "failed", None)
        assert not reverify(fake)
        path = dump_counterexample(fake, tmp_path)
        check = parse_records(_cli(capsys, "check", path, "--no-timing"))[0]
        twogen = parse_records(_cli(capsys, "twogen", path, "--no-timing"))[0]
        assert check["simple"] == "true"
        assert twogen["two_generated"] == "true"


def test_determinism(capsys, tmp_path):
    with criterion(10, "byte-identical output across reruns and 1 vs 4 workers"):
        sl2 = tmp_path / "sl2.lie"
        eva = tmp_path / "eva.lie"
        write(catalog.sl2(GF(5)), sl2)
        write(catalog.ev_type_a(3, 1), eva)
        heis = GOLDEN / "heisenberg_gf3.lie"
        commands = [
            ["check", eva],
            ["series", eva],
            ["series", eva, "--kind", "lower-central"],
            ["frattini", heis],
            ["subalgebras", sl2],
            ["subalgebras", sl2, "--maximal"],
            ["triang", sl2, "--subalgebra", "1,0,0;0,0,1"],
            ["nil", sl2, "--subalgebra", "1,0,0;0,0,1"],
            ["twogen", eva],
            ["twogen", eva, "--property", "supersolvable"],
            ["twogen", eva, "--samples", "500", "--seed", "9"],
            ["catalog", "ev_type_a", "--param", "p=3", "--param", "alpha=1"],
            ["hunt", "--field", "GF(2)", "--dim-max", "4", "--samples", "3000", "--seed", "42"],
        ]
        commands += [["theorems", sl2, "--suite", s] for s in ("star", "gein", "t33", "t35", "t44", "t47", "lemmas")]
        commands += [["theorems", eva, "--suite", s] for s in ("t31", "t33", "t35")]
        for cmd in commands:
            runs = [
                _cli(capsys, *cmd, "--no-timing", "--workers", w)
                for w in ("1", "1", "4")
            ]
            assert runs[0] == runs[1] == runs[2], cmd
