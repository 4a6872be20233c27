"""Structure-constant Lie algebras and their closure operations.

Convention: the adjoint map acts on the right, ``y (ad x) = [y, x]``.  The
matrix returned by :func:`adjoint` therefore has column ``j`` equal to
``[e_j, x]`` and sends a column vector ``v`` to ``[v, x]``.
"""

from __future__ import annotations

from functools import cached_property

from .errors import (
    AntisymmetryViolation,
    DimensionMismatch,
    JacobiViolation,
    NotAnIdeal,
    NotASubalgebra,
)
from .fields import Field
from .linalg import (
    Matrix,
    Subspace,
    kernel_rows,
    rref_rows,
    unit_vec,
    zero_vec,
)


class LieAlgebra:
    """A finite-dimensional Lie algebra given by structure constants.

    ``brackets`` maps pairs ``(i, j)`` with ``i < j`` to the coordinate
    vector of ``[e_i, e_j]``; unlisted pairs are zero.  Use :func:`validate`
    to build one from user data; the constructor trusts its input unless
    ``check`` is true.
    """

    __slots__ = ("field", "dim", "names", "_brackets", "_table", "__dict__")

    def __init__(self, field: Field, dim: int, brackets=None, names=None, *, check=True):
        self.field = field
        self.dim = dim
        if names is None:
            names = tuple(f"e{i}" for i in range(dim))
        names = tuple(names)
        if len(names) != dim or len(set(names)) != dim:
            raise ValueError("basis names must be distinct, one per basis vector")
        self.names = names
        clean = {}
        for (i, j), vec in (brackets or {}).items():
            if not (0 <= i < j < dim):
                raise ValueError(f"bracket key ({i},{j}) must satisfy 0 <= i < j < dim")
            if len(vec) != dim:
                raise DimensionMismatch(f"bracket ({i},{j}) has length {len(vec)}")
            vec = field.vec(vec) if check else tuple(vec)
            if any(vec):
                clean[(i, j)] = vec
        self._brackets = clean
        table = [[None] * dim for _ in range(dim)]
        p = field.p
        for (i, j), vec in clean.items():
            pos = [(k, a) for k, a in enumerate(vec) if a]
            neg = [(k, (-a) % p if p else -a) for k, a in pos]
            table[i][j] = pos
            table[j][i] = neg
        self._table = table
        if check:
            defect = _first_jacobi_defect(self)
            if defect is not None:
                raise JacobiViolation(*defect)

    # -- basic access -------------------------------------------------

    @property
    def brackets(self) -> dict:
        return dict(self._brackets)

    def basis_vector(self, i) -> tuple:
        return unit_vec(self.field, self.dim, i)

    @cached_property
    def basis(self) -> tuple:
        return tuple(self.basis_vector(i) for i in range(self.dim))

    @cached_property
    def zero(self) -> tuple:
        return zero_vec(self.field, self.dim)

    @cached_property
    def full(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    @cached_property
    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def vec(self, xs) -> tuple:
        v = self.field.vec(xs)
        if len(v) != self.dim:
            raise DimensionMismatch(f"expected a vector of length {self.dim}")
        return v

    def bracket(self, x, y) -> tuple:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimensionMismatch("bracket arguments have the wrong length")
        acc = [0] * n
        table = self._table
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = table[i]
            for j, yj in enumerate(y):
                if yj:
                    entries = row[j]
                    if entries:
                        c = xi * yj
                        for k, a in entries:
                            acc[k] += c * a
        F = self.field
        if F.p:
            p = F.p
            return tuple(a % p for a in acc)
        return tuple(F(a) for a in acc)

    def basis_bracket(self, i, j) -> tuple:
        if i == j:
            return self.zero
        if i < j:
            return self._brackets.get((i, j), self.zero)
        v = self._brackets.get((j, i))
        if v is None:
            return self.zero
        F = self.field
        return tuple(F.norm(-a) for a in v)

    def is_abelian(self) -> bool:
        return not self._brackets

    def __eq__(self, other):
        return (
            isinstance(other, LieAlgebra)
            and self.field == other.field
            and self.dim == other.dim
            and self.names == other.names
            and self._brackets == other._brackets
        )

    def __hash__(self):
        return hash((self.field, self.dim, self.names, tuple(sorted(self._brackets.items()))))

    def __repr__(self):
        return f"LieAlgebra({self.field}, dim={self.dim}, brackets={len(self._brackets)})"

    def __getstate__(self):
        return (self.field, self.dim, self.names, self._brackets)

    def __setstate__(self, state):
        field, dim, names, brackets = state
        LieAlgebra.__init__(self, field, dim, brackets, names, check=False)

    def jacobi_defect(self, i, j, k) -> tuple:
        return _jacobi(self, i, j, k)


def _jacobi(L, i, j, k):
    e = L.basis
    b = L.bracket
    F = L.field
    t1 = b(e[i], L.basis_bracket(j, k))
    t2 = b(e[j], L.basis_bracket(k, i))
    t3 = b(e[k], L.basis_bracket(i, j))
    return tuple(F.norm(a + c + d) for a, c, d in zip(t1, t2, t3))


def _first_jacobi_defect(L):
    # the Jacobi form is alternating and trilinear: distinct triples suffice
    n = L.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                d = _jacobi(L, i, j, k)
                if any(d):
                    return (i, j, k, d)
    return None


def validate(data, field: Field, names=None) -> LieAlgebra:
    """Build a LieAlgebra from a full (n,n,n) tensor or a pair dictionary.

    A dictionary may use either orientation of a pair; if both are given
    they must be negatives of each other.  Raises AntisymmetryViolation or
    JacobiViolation (with the first failing triple and its defect).
    """
    if isinstance(data, dict):
        dim = None
        pairs = {}
        for (i, j), vec in data.items():
            vec = field.vec(vec)
            dim = len(vec) if dim is None else dim
            if i == j:
                if any(vec):
                    raise AntisymmetryViolation(i, j, f"[e{i},e{i}] must be zero")
                continue
            if i > j:
                i, j = j, i
                vec = tuple(field.norm(-a) for a in vec)
            if (i, j) in pairs and pairs[(i, j)] != vec:
                raise AntisymmetryViolation(i, j)
            pairs[(i, j)] = vec
        if dim is None:
            dim = len(names) if names is not None else 0
        return LieAlgebra(field, dim, pairs, names)
    tensor = list(data)
    n = len(tensor)
    pairs = {}
    for i in range(n):
        if len(tensor[i]) != n:
            raise DimensionMismatch("structure tensor must have shape (n, n, n)")
        for j in range(n):
            vec = field.vec(tensor[i][j])
            if len(vec) != n:
                raise DimensionMismatch("structure tensor must have shape (n, n, n)")
            other = field.vec(tensor[j][i])
            if any(field.norm(a + b) for a, b in zip(vec, other)):
                raise AntisymmetryViolation(i, j)
            if i == j and any(vec):
                raise AntisymmetryViolation(i, j)
            if i < j:
                pairs[(i, j)] = vec
    return LieAlgebra(field, n, pairs, names)


def abelian(field: Field, n: int, names=None) -> LieAlgebra:
    return LieAlgebra(field, n, {}, names)


def bracket(L: LieAlgebra, x, y) -> tuple:
    return L.bracket(x, y)


def adjoint(L: LieAlgebra, x) -> Matrix:
    """Matrix of ``v -> [v, x]``; column j is ``[e_j, x]``."""
    cols = [L.bracket(e, x) for e in L.basis]
    n = L.dim
    rows = tuple(tuple(cols[j][k] for j in range(n)) for k in range(n))
    return Matrix(L.field, rows, n)


def ad_rows(L: LieAlgebra, x):
    """Row form of the adjoint matrix, for stacking into linear systems."""
    return adjoint(L, x).rows


# ---------------------------------------------------------------------------
# subspaces as subalgebras

def as_space(L: LieAlgebra, S) -> Subspace:
    """Accept a Subalgebra handle, a Subspace, or a list of vectors."""
    if isinstance(S, Subalgebra):
        S = S.space
    if isinstance(S, Subspace):
        if S.ambient_dim != L.dim or S.field != L.field:
            raise DimensionMismatch("subspace does not live in this algebra")
        return S
    return Subspace.span(L.field, L.dim, [L.vec(v) for v in S])


def is_subalgebra(L: LieAlgebra, S) -> bool:
    V = as_space(L, S)
    B = V.basis
    for a in range(len(B)):
        for b in range(a + 1, len(B)):
            if not V.contains(L.bracket(B[a], B[b])):
                return False
    return True


def is_ideal(L: LieAlgebra, S) -> bool:
    V = as_space(L, S)
    for v in V.basis:
        for e in L.basis:
            if not V.contains(L.bracket(v, e)):
                return False
    return True


class Subalgebra:
    """A subspace of ``parent`` with lazily cached closure flags."""

    __slots__ = ("parent", "space", "__dict__")

    def __init__(self, parent: LieAlgebra, space: Subspace):
        self.parent = parent
        self.space = as_space(parent, space)

    @cached_property
    def is_subalgebra(self) -> bool:
        return is_subalgebra(self.parent, self.space)

    @cached_property
    def is_ideal(self) -> bool:
        return is_ideal(self.parent, self.space)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> tuple:
        return self.space.basis

    def algebra(self) -> LieAlgebra:
        return restrict(self.parent, self.space)

    def __eq__(self, other):
        if isinstance(other, Subalgebra):
            return self.parent == other.parent and self.space == other.space
        if isinstance(other, Subspace):
            return self.space == other
        return NotImplemented

    def __hash__(self):
        return hash(self.space)

    def __repr__(self):
        return f"Subalgebra(dim={self.dim}, {self.space!r})"

    def __getstate__(self):
        return (self.parent, self.space)

    def __setstate__(self, state):
        self.parent, self.space = state


def restrict(L: LieAlgebra, S) -> LieAlgebra:
    """The subalgebra S as a LieAlgebra on its echelon basis."""
    V = as_space(L, S)
    B = V.basis
    pairs = {}
    for a in range(len(B)):
        for b in range(a + 1, len(B)):
            w = L.bracket(B[a], B[b])
            if any(w):
                if not V.contains(w):
                    raise NotASubalgebra("subspace is not closed under the bracket")
                pairs[(a, b)] = V.coordinates(w)
    return LieAlgebra(L.field, len(B), pairs, check=False)


def derived_subalgebra(L: LieAlgebra, S=None) -> Subspace:
    """[S, S] (the whole algebra when S is omitted)."""
    V = L.full if S is None else as_space(L, S)
    B = V.basis
    vecs = [L.bracket(B[a], B[b]) for a in range(len(B)) for b in range(a + 1, len(B))]
    return Subspace.span(L.field, L.dim, vecs)


def bracket_spaces(L: LieAlgebra, A, B) -> Subspace:
    """span{[a, b] : a in A, b in B}."""
    A = as_space(L, A)
    B = as_space(L, B)
    return Subspace.span(L.field, L.dim, [L.bracket(a, b) for a in A.basis for b in B.basis])


def _closure(L: LieAlgebra, seed_vectors, multipliers=None) -> Subspace:
    """Smallest subspace containing the seeds and closed under bracketing.

    With ``multipliers`` given, closes only under ``[v, m]`` for those m
    (an ideal closure); otherwise under brackets of the span with itself.
    """
    F, n = L.field, L.dim
    V = Subspace.span(F, n, seed_vectors)
    basis = list(V.basis)
    if multipliers is None:
        i = 0
        while i < len(basis):
            for j in range(i):
                w = V.reduce(L.bracket(basis[j], basis[i]))
                if any(w):
                    V = V.with_vectors([w])
                    basis.append(w)
            i += 1
    else:
        mult = list(multipliers)
        i = 0
        while i < len(basis):
            for m in mult:
                w = V.reduce(L.bracket(basis[i], m))
                if any(w):
                    V = V.with_vectors([w])
                    basis.append(w)
            i += 1
    return V


def generated_subalgebra(L: LieAlgebra, gens) -> Subalgebra:
    """The subalgebra <gens>: smallest subalgebra containing the generators."""
    gens = [L.vec(g) for g in gens] if not isinstance(gens, Subspace) else list(gens.basis)
    return Subalgebra(L, _closure(L, gens))


def closure_space(L: LieAlgebra, gens) -> Subspace:
    return _closure(L, gens)


def ideal_closure(L: LieAlgebra, seed, within=None) -> Subalgebra:
    """Smallest ideal of ``within`` (default L) containing ``seed``.

    ``within`` must be a subalgebra containing the seed when given.
    """
    seed_space = as_space(L, seed) if not _is_vector(seed) else Subspace.span(L.field, L.dim, [L.vec(seed)])
    mults = L.basis if within is None else as_space(L, within).basis
    return Subalgebra(L, _closure(L, seed_space.basis, mults))


def _is_vector(x) -> bool:
    return isinstance(x, tuple) and (not x or not isinstance(x[0], tuple))


# ---------------------------------------------------------------------------
# quotients

class Projection:
    """The linear map L -> L/I onto the non-pivot coordinates of I."""

    def __init__(self, L: LieAlgebra, ideal: Subspace, target: LieAlgebra):
        self.source = L
        self.ideal = ideal
        self.target = target
        self.keep = ideal.complement_indices()

    def __call__(self, v) -> tuple:
        r = self.ideal.reduce(v)
        return tuple(r[i] for i in self.keep)

    def lift(self, w) -> tuple:
        """A preimage of ``w``: place its coordinates at the kept slots."""
        F = self.source.field
        v = [F.zero] * self.source.dim
        for i, a in zip(self.keep, w):
            v[i] = a
        return tuple(v)

    def image(self, S) -> Subspace:
        S = as_space(self.source, S)
        return Subspace.span(self.target.field, self.target.dim, [self(v) for v in S.basis])

    def preimage(self, T) -> Subspace:
        T = as_space(self.target, T)
        vecs = [self.lift(w) for w in T.basis] + list(self.ideal.basis)
        return Subspace.span(self.source.field, self.source.dim, vecs)


def quotient(L: LieAlgebra, I) -> tuple:
    """(L/I, projection).  The quotient basis is the non-pivot coordinates of I."""
    V = as_space(L, I)
    if not is_ideal(L, V):
        raise NotAnIdeal("quotient needs an ideal")
    keep = V.complement_indices()
    pairs = {}
    for a in range(len(keep)):
        for b in range(a + 1, len(keep)):
            w = V.reduce(L.basis_bracket(keep[a], keep[b]))
            w = tuple(w[i] for i in keep)
            if any(w):
                pairs[(a, b)] = w
    names = tuple(L.names[i] for i in keep)
    Q = LieAlgebra(L.field, len(keep), pairs, names, check=False)
    proj = Projection(L, V, Q)
    # bracket preservation on basis pairs
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            assert proj(L.basis_bracket(i, j)) == Q.bracket(proj(L.basis[i]), proj(L.basis[j]))
    return Q, proj


# ---------------------------------------------------------------------------
# centralizers, normalizers, stabilizers

def stabilizer(L: LieAlgebra, ambient, target, multipliers) -> Subspace:
    """{x in ambient : [x, m] in target for every m in multipliers}."""
    A = as_space(L, ambient)
    T = as_space(L, target)
    F, n = L.field, L.dim
    mults = list(multipliers)
    if not A.dim:
        return A
    if not mults:
        return A
    # unknowns: coefficients c on A's basis; equations: residual([a_i, m]) = 0
    cols = []
    for a in A.basis:
        col = []
        for m in mults:
            col.extend(T.reduce(L.bracket(a, m)))
        cols.append(col)
    rows = [tuple(col[t] for col in cols) for t in range(len(cols[0]))]
    coeffs = kernel_rows(F, rows, A.dim)
    return Subspace.span(F, n, [A.combine(c) for c in coeffs])


def centralizer(L: LieAlgebra, S) -> Subspace:
    S = as_space(L, S)
    return stabilizer(L, L.full, L.zero_space, S.basis)


def normalizer(L: LieAlgebra, S, ambient=None) -> Subspace:
    """{x in ambient : [x, S] ⊆ S}; ambient defaults to L."""
    S = as_space(L, S)
    A = L.full if ambient is None else as_space(L, ambient)
    return stabilizer(L, A, S, S.basis)


def center(L: LieAlgebra) -> Subspace:
    return centralizer(L, L.full)


def change_basis(L: LieAlgebra, P, names=None) -> LieAlgebra:
    """The same algebra written on the basis given by the rows of P."""
    F, n = L.field, L.dim
    rows = [L.vec(r) for r in P]
    red, piv = rref_rows(F, rows, n)
    if len(red) != n:
        raise ValueError("change of basis matrix is singular")
    # solve coordinates: w = sum c_i rows_i  <=>  columns system
    aug_cols = rows

    def coords(w):
        sys_rows = [tuple(r[k] for r in aug_cols) + (w[k],) for k in range(n)]
        red2, piv2 = rref_rows(F, sys_rows, n + 1)
        out = [F.zero] * n
        for row, c in zip(red2, piv2):
            out[c] = row[n]
        return tuple(out)

    pairs = {}
    for a in range(n):
        for b in range(a + 1, n):
            w = L.bracket(rows[a], rows[b])
            if any(w):
                pairs[(a, b)] = coords(w)
    return LieAlgebra(F, n, pairs, names, check=False)
