import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieprops import catalog
from lieprops.algebra import (
    LieAlgebra,
    adjoint,
    center,
    centralizer,
    change_basis,
    closure_space,
    ideal_closure,
    is_ideal,
    normalizer,
    quotient,
    validate,
)
from lieprops.errors import AntisymmetryViolation, JacobiViolation
from lieprops.fields import GF, Q
from lieprops.linalg import Subspace


def span(L, *vs):
    return Subspace.span(L.field, L.dim, vs)


def test_heisenberg_table_validates():
    L = validate({(0, 1): (0, 0, 1)}, Q, names="abc")
    a, b, c = L.basis
    assert L.bracket(a, b) == c
    assert L.bracket(b, a) == (0, 0, -1)


def test_jacobi_violation_names_the_triple():
    data = {(0, 1): (1, 0, 0), (0, 2): (0, 0, 1)}
    with pytest.raises(JacobiViolation) as exc:
        validate(data, Q)
    assert (exc.value.i, exc.value.j, exc.value.k) == (0, 1, 2)
    assert exc.value.defect == (0, 0, -1)


def test_antisymmetry_violation():
    with pytest.raises(AntisymmetryViolation):
        validate({(0, 1): (1, 0), (1, 0): (1, 0)}, Q)
    with pytest.raises(AntisymmetryViolation):
        validate([[(1, 0), (0, 0)], [(0, 0), (0, 0)]], Q)


def test_zero_tensor_is_abelian():
    for n in range(1, 5):
        assert validate([[(0,) * n] * n] * n, GF(3)).is_abelian()


def test_sl2_brackets():
    L = catalog.sl2(Q)
    e, f, h = L.basis
    assert L.bracket(e, f) == h
    assert L.bracket(h, e) == tuple(2 * a for a in e)


def test_alternating_on_random_vectors():
    L = catalog.sl2(GF(7))
    rng = random.Random(1)
    for _ in range(100):
        x = tuple(rng.randrange(7) for _ in range(3))
        assert not any(L.bracket(x, x))


def test_adjoint_right_action():
    L = catalog.heisenberg(Q)
    a, b, c = L.basis
    ad_a = adjoint(L, a)
    assert ad_a.apply(b) == (0, 0, -1)
    assert not any(ad_a.apply(c)) and not any(ad_a.apply(a))
    A = catalog.abelian(3, Q)
    assert adjoint(A, (1, 2, 3)).is_zero()
    M = catalog.almost_abelian(3, Q)
    x = M.basis[-1]
    for a in M.basis[:-1]:
        assert adjoint(M, x).apply(a) == a


def test_closures():
    H = catalog.heisenberg(Q)
    a, b, c = H.basis
    assert closure_space(H, [a, b]).is_full()
    A = catalog.abelian(3, Q)
    assert closure_space(A, [(1, 0, 0), (0, 1, 1)]).dim == 2
    S = catalog.sl2(Q)
    assert closure_space(S, S.basis[:2]).is_full()
    assert ideal_closure(H, c).space == span(H, c)
    assert ideal_closure(H, a).space == span(H, a, c)
    assert ideal_closure(S, (1, 2, 3)).space.is_full()


def test_quotients():
    H = catalog.heisenberg(Q)
    Qt, proj = quotient(H, span(H, H.basis[2]))
    assert Qt.dim == 2 and Qt.is_abelian()
    same, _ = quotient(H, H.zero_space)
    assert same.dim == 3 and same.brackets == H.brackets
    zero, _ = quotient(H, H.full)
    assert zero.dim == 0


def test_center_centralizer_normalizer():
    H = catalog.heisenberg(Q)
    assert center(H) == span(H, H.basis[2])
    A = catalog.abelian(3, Q)
    assert centralizer(A, span(A, (1, 0, 0))).is_full()
    S = catalog.sl2(Q)
    e, f, h = S.basis
    assert normalizer(S, span(S, e)) == span(S, e, h)


def test_ideal_checks():
    H = catalog.heisenberg(GF(3))
    a, b, c = H.basis
    assert is_ideal(H, span(H, a, c))
    assert not is_ideal(H, span(H, a))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_change_basis_preserves_jacobi_and_invariants(seed):
    from lieprops.props import derived_series, lower_central_series
    from lieprops.randalg import random_basis_change

    L = catalog.sl2(GF(3)) if seed % 2 else catalog.heisenberg(GF(3))
    M = random_basis_change(L, random.Random(seed))
    assert isinstance(M, LieAlgebra)
    assert derived_series(M).dims == derived_series(L).dims
    assert lower_central_series(M).dims == lower_central_series(L).dims


def test_pickle_roundtrip():
    import pickle

    L = catalog.sl2(GF(5))
    assert pickle.loads(pickle.dumps(L)) == L
