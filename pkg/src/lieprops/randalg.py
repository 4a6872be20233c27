"""Seeded random Lie algebras over small prime fields.

Plain rejection sampling of structure constants almost never passes the
Jacobi test in dimension 4 over GF(3), so the corpus mixes four sources:
semidirect products A ∔ Fx, linear Lie algebras generated by random
matrices, sparse random tables that survive validation, and catalog
algebras written on a random basis.
"""

from __future__ import annotations

import random

from .algebra import LieAlgebra, abelian, change_basis, validate
from .errors import JacobiViolation
from .fields import GF, Field
from .linalg import Matrix, Subspace, rref_rows


def _rand_matrix(F: Field, k: int, rng: random.Random):
    return [tuple(rng.randrange(F.p) for _ in range(k)) for _ in range(k)]


def random_semidirect(F: Field, n: int, rng: random.Random) -> LieAlgebra:
    """A ∔ Fx with A abelian of dimension n-1 and a random action of x."""
    k = n - 1
    M = _rand_matrix(F, k, rng)
    data = {(i, k): tuple(M[i]) + (0,) for i in range(k)}
    return validate(data, F)


def _commutator(A: Matrix, B: Matrix) -> Matrix:
    return A @ B - B @ A


def linear_closure(F: Field, mats, max_dim: int):
    """The Lie algebra of matrices generated by ``mats`` as structure constants,
    or None if its dimension exceeds ``max_dim``."""
    m = mats[0].nrows
    basis = []
    span = Subspace.zero(F, m * m)
    queue = list(mats)
    while queue:
        A = queue.pop(0)
        v = A.flat()
        if span.contains(v):
            continue
        span = span.with_vectors([v])
        if span.dim > max_dim:
            return None
        for B in basis:
            queue.append(_commutator(B, A))
        basis.append(A)
    n = len(basis)
    flats = [b.flat() for b in basis]

    def coords(v):
        # solve v = sum c_i flats_i
        rows = [tuple(f[t] for f in flats) + (v[t],) for t in range(m * m)]
        red, piv = rref_rows(F, rows, n + 1)
        out = [0] * n
        for row, c in zip(red, piv):
            out[c] = row[n]
        return tuple(out)

    data = {}
    for i in range(n):
        for j in range(i + 1, n):
            # the matrix bracket [A, B] = AB - BA
            c = coords(_commutator(basis[i], basis[j]).flat())
            if any(c):
                data[(i, j)] = c
    return validate(data, F)


def random_linear(F: Field, n_max: int, rng: random.Random):
    m = rng.choice((2, 2, 3))
    mats = [Matrix.from_rows(F, _rand_matrix(F, m, rng)) for _ in range(2)]
    if rng.random() < 0.5:
        # upper triangular generators give solvable algebras
        mats = [Matrix.from_rows(F, [[a if j >= i else 0 for j, a in enumerate(r)] for i, r in enumerate(M.rows)]) for M in mats]
    if all(M.is_zero() for M in mats):
        return None
    return linear_closure(F, mats, n_max)


def random_sparse(F: Field, n: int, rng: random.Random, tries: int = 50):
    """Random tables with few nonzero constants, kept only if Jacobi holds."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for _ in range(tries):
        data = {}
        for ij in pairs:
            if rng.random() < 0.5:
                v = [0] * n
                v[rng.randrange(n)] = rng.randrange(1, F.p)
                data[ij] = tuple(v)
        try:
            return validate(data, F)
        except JacobiViolation:
            continue
    return None


def random_basis_change(L: LieAlgebra, rng: random.Random) -> LieAlgebra:
    F, n = L.field, L.dim
    while True:
        P = _rand_matrix(F, n, rng)
        if len(rref_rows(F, P, n)[0]) == n:
            return change_basis(L, P)


def _catalog_pick(F: Field, n_max: int, rng: random.Random):
    from . import catalog

    choices = [
        lambda: catalog.heisenberg(F),
        lambda: catalog.sl2(F),
        lambda: catalog.cross_product(F),
        lambda: catalog.affine2(F),
        lambda: catalog.almost_abelian(rng.randint(2, n_max), F),
        lambda: catalog.gein_family2(F),
    ]
    if F.p > 2:
        choices.append(lambda: catalog.gein_family1(rng.choice([a for a in range(F.p) if a != 1]), F))
    return rng.choice(choices)()


def random_algebra(F: Field, n_max: int, seed, index: int) -> LieAlgebra:
    """The index-th algebra of the stream for ``seed`` (deterministic)."""
    rng = random.Random(f"{seed}/{index}")
    source = index % 4
    for _ in range(100):
        n = rng.randint(1, n_max)
        if source == 0:
            L = random_semidirect(F, max(n, 2), rng)
        elif source == 1:
            L = random_linear(F, n_max, rng)
        elif source == 2:
            L = random_sparse(F, n, rng)
        else:
            L = random_basis_change(_catalog_pick(F, n_max, rng), rng)
        if L is not None and 0 < L.dim <= n_max:
            return L
    return abelian(F, 1)


def corpus(count: int = 200, seed=0, n_max: int = 4, fields=(GF(2), GF(3))) -> list:
    """``count`` algebras alternating over ``fields`` in blocks of four."""
    return [random_algebra(fields[(i // 4) % len(fields)], n_max, seed, i) for i in range(count)]
