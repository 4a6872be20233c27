import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieprops import catalog
from lieprops.algebra import LieAlgebra
from lieprops.errors import (
    FieldMismatch,
    JacobiViolation,
    LieSyntaxError,
    UnknownBasisName,
    UpperTriangleViolation,
)
from lieprops.fields import GF, Q
from lieprops.fileformat import parse, serialize
from lieprops.randalg import random_algebra

HEIS = "lie-sc v1\nfield Q\ndim 3\nbasis a b c\n[a,b] = 1*c\n"


def test_heisenberg_file():
    L = parse(HEIS)
    assert L == catalog.heisenberg(Q)
    assert serialize(L) == HEIS


def test_sl2_over_gf7_canonical_form():
    text = "\n".join([
        "lie-sc v1",
        "# sl(2) with h acting by weights 2 and -2",
        "field GF(7)",
        "dim 3",
        "basis e f h",
        "[e,h] = -2*e   # residues are reduced",
        "[f,h] = 2*f",
        "[e,f] = 1*h",
    ])
    L = parse(text)
    assert L == catalog.sl2(GF(7))
    assert serialize(L) == (
        "lie-sc v1\nfield GF(7)\ndim 3\nbasis e f h\n"
        "[e,f] = 1*h\n[e,h] = 5*e\n[f,h] = 2*f\n"
    )


def test_default_names_and_zero_algebra():
    L = parse("lie-sc v1\nfield GF(3)\ndim 2\n[e0,e1] = 1*e0\n")
    assert L.names == ("e0", "e1")
    Z = LieAlgebra(GF(3), 3)
    text = serialize(Z)
    assert "[" not in text and parse(text) == Z


def test_fractions_over_q():
    L = parse("lie-sc v1\nfield Q\ndim 2\nbasis a x\n[a,x] = 1/2*a\n")
    assert serialize(L).endswith("[a,x] = 1/2*a\n")


def test_multi_term_lines():
    L = catalog.gein_family2(GF(3))
    text = serialize(L)
    assert "[a2,x] = 1*a1 + 1*a2" in text
    assert parse(text) == L


@pytest.mark.parametrize(
    "body,error,line",
    [
        ("field GF(3)\ndim 2\nbasis a b\n[b,a] = 1*a", UpperTriangleViolation, 5),
        ("field GF(3)\ndim 2\nbasis a b\n[a,b] = 1/2*a", FieldMismatch, 5),
        ("field GF(3)\ndim 2\nbasis a b\n[a,b] = 1*z", UnknownBasisName, 5),
        ("field GF(3)\ndim 2\n[e0,e1] = 1*e0\n[e0,e1] = 1*e0", LieSyntaxError, 5),
        ("field GF(3)\ndim 2\n[e0,e1] = e0", LieSyntaxError, 4),
        ("field GF(4)\ndim 2", LieSyntaxError, 2),
        ("dim 2\nfield Q", LieSyntaxError, 2),
        ("field Q\ndim 2\nbasis a", LieSyntaxError, 4),
        ("field Q\ndim 2\nbasis a a", LieSyntaxError, 4),
        ("field Q\ndim 2\nbasis A B\n[a,B] = 1*A", UnknownBasisName, 5),
    ],
)
def test_errors_carry_line_numbers(body, error, line):
    with pytest.raises(error) as exc:
        parse("lie-sc v1\n" + body + "\n")
    assert exc.value.line == line


def test_header_required():
    with pytest.raises(LieSyntaxError):
        parse("lie-sc v2\nfield Q\ndim 1\n")


def test_jacobi_checked():
    with pytest.raises(JacobiViolation):
        parse("lie-sc v1\nfield Q\ndim 3\n[e0,e1] = 1*e0\n[e0,e2] = 1*e2\n")


def test_catalog_round_trip():
    for e in catalog.entries():
        assert parse(serialize(e.algebra)) == e.algebra


@pytest.mark.parametrize("p", [2, 3])
@settings(max_examples=500, deadline=None)
@given(st.integers(0, 10**9))
def test_random_round_trip(p, index):
    L = random_algebra(GF(p), 4, "roundtrip", index)
    text = serialize(L)
    assert parse(text) == L
    assert serialize(parse(text)) == text
