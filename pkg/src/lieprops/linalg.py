"""Exact dense linear algebra over GF(p) and Q.

Vectors are tuples of field elements.  ``Subspace`` values are always held
in reduced row-echelon form, so two spans of the same space compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations, product
from math import gcd

from .errors import DimensionMismatch, FieldMismatch
from .fields import Field


def rref_rows(F: Field, rows, ncols: int):
    """Row-reduce ``rows``; returns (nonzero rows as tuples, pivot columns)."""
    p = F.p
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        row = m[r]
        a = row[c]
        if a != 1:
            inv = F.inv(a)
            if p:
                row = [(x * inv) % p for x in row]
            else:
                row = [x * inv for x in row]
            m[r] = row
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f:
                    if p:
                        m[i] = [(x - f * y) % p for x, y in zip(m[i], row)]
                    else:
                        m[i] = [x - f * y for x, y in zip(m[i], row)]
        pivots.append(c)
        r += 1
    return [tuple(x) for x in m[:r]], pivots


def kernel_rows(F: Field, rows, ncols: int):
    """Basis (not echelonized) of {v : rows . v = 0}."""
    red, pivots = rref_rows(F, rows, ncols)
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [F.zero] * ncols
        v[f] = F.one
        for row, pc in zip(red, pivots):
            if row[f]:
                v[pc] = F.norm(-row[f])
        out.append(tuple(v))
    return out


def vec_add(F, u, v):
    if F.p:
        p = F.p
        return tuple((a + b) % p for a, b in zip(u, v))
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(F, u, v):
    if F.p:
        p = F.p
        return tuple((a - b) % p for a, b in zip(u, v))
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(F, c, v):
    if F.p:
        p = F.p
        return tuple((c * a) % p for a in v)
    return tuple(c * a for a in v)


def lin_comb(F, coeffs, vectors, n):
    acc = [0] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    acc[k] += c * a
    if F.p:
        return tuple(a % F.p for a in acc)
    return tuple(Fraction(a) for a in acc)


def zero_vec(F, n):
    return (F.zero,) * n


def unit_vec(F, n, i):
    v = [F.zero] * n
    v[i] = F.one
    return tuple(v)


def normalize_projective(F, v):
    """Scale ``v`` so its first nonzero coordinate is 1."""
    for a in v:
        if a:
            if a == 1:
                return tuple(v)
            return vec_scale(F, F.inv(a), v)
    return tuple(v)


@dataclass(frozen=True)
class Matrix:
    """A rows x cols grid over one field."""

    field: Field
    rows: tuple
    ncols: int

    @classmethod
    def from_rows(cls, F: Field, rows, ncols=None) -> "Matrix":
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        out = []
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged matrix rows")
            out.append(tuple(_coerce_entry(F, x) for x in r))
        return cls(F, tuple(out), ncols)

    @classmethod
    def identity(cls, F: Field, n: int) -> "Matrix":
        return cls(F, tuple(unit_vec(F, n, i) for i in range(n)), n)

    @classmethod
    def zeros(cls, F: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(F, tuple(zero_vec(F, ncols) for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j) -> tuple:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, tuple(zip(*self.rows)) if self.rows else (), self.nrows)

    def apply(self, v) -> tuple:
        F = self.field
        if len(v) != self.ncols:
            raise DimensionMismatch("matrix/vector size mismatch")
        out = []
        for r in self.rows:
            s = 0
            for a, b in zip(r, v):
                if a and b:
                    s += a * b
            out.append(F.norm(s) if F.p else Fraction(s))
        return tuple(out)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        F = self.field
        if other.field != F:
            raise FieldMismatch("matrix product across fields")
        if self.ncols != other.nrows:
            raise DimensionMismatch("inner dimensions differ")
        cols = list(zip(*other.rows)) if other.rows else [() for _ in range(other.ncols)]
        rows = []
        for r in self.rows:
            row = []
            for c in cols:
                s = 0
                for a, b in zip(r, c):
                    if a and b:
                        s += a * b
                row.append(F.norm(s) if F.p else Fraction(s))
            rows.append(tuple(row))
        return Matrix(F, tuple(rows), other.ncols)

    def __add__(self, other):
        F = self.field
        return Matrix(F, tuple(vec_add(F, a, b) for a, b in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other):
        F = self.field
        return Matrix(F, tuple(vec_sub(F, a, b) for a, b in zip(self.rows, other.rows)), self.ncols)

    def scale(self, c) -> "Matrix":
        F = self.field
        return Matrix(F, tuple(vec_scale(F, c, r) for r in self.rows), self.ncols)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def trace(self):
        F = self.field
        return F.norm(sum(self.rows[i][i] for i in range(min(self.nrows, self.ncols))))

    def power(self, k: int) -> "Matrix":
        out = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def is_nilpotent(self) -> bool:
        """True iff M^n = 0 (n = size); decided by iterating images."""
        F = self.field
        V = Subspace.full(F, self.ncols)
        while V.dim:
            W = Subspace.span(F, self.ncols, [self.apply(b) for b in V.basis])
            if W.dim == V.dim:
                return False
            V = W
        return True

    def flat(self) -> tuple:
        return tuple(a for r in self.rows for a in r)


def _coerce_entry(F: Field, x):
    if F.p and isinstance(x, Fraction) and x.denominator != 1:
        raise FieldMismatch(f"entry {x} does not belong to {F}")
    if not F.p and not isinstance(x, (int, Fraction)):
        raise FieldMismatch(f"entry {x!r} does not belong to {F}")
    return F(x)


def rref(m: Matrix):
    """Reduced row-echelon form and rank; zero rows kept at the bottom."""
    F = m.field
    for r in m.rows:
        for x in r:
            if not F.check(x):
                raise FieldMismatch(f"entry {x!r} does not belong to {F}")
    red, pivots = rref_rows(F, m.rows, m.ncols)
    rank = len(red)
    full = list(red) + [zero_vec(F, m.ncols)] * (m.nrows - rank)
    return Matrix(F, tuple(full), m.ncols), rank


def rank(m: Matrix) -> int:
    return len(rref_rows(m.field, m.rows, m.ncols)[0])


def kernel(m: Matrix) -> "Subspace":
    F = m.field
    return Subspace.span(F, m.ncols, kernel_rows(F, m.rows, m.ncols))


def image(m: Matrix) -> "Subspace":
    F = m.field
    return Subspace.span(F, m.nrows, [m.column(j) for j in range(m.ncols)])


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n held by its reduced row-echelon basis."""

    field: Field
    ambient_dim: int
    basis: tuple
    pivots: tuple = dc_field(compare=False, repr=False)

    @classmethod
    def span(cls, F: Field, n: int, vectors) -> "Subspace":
        vectors = list(vectors)
        for v in vectors:
            if len(v) != n:
                raise DimensionMismatch(f"vector of length {len(v)} in F^{n}")
        red, pivots = rref_rows(F, vectors, n)
        return cls(F, n, tuple(red), tuple(pivots))

    @classmethod
    def zero(cls, F: Field, n: int) -> "Subspace":
        return cls(F, n, (), ())

    @classmethod
    def full(cls, F: Field, n: int) -> "Subspace":
        return cls(F, n, tuple(unit_vec(F, n, i) for i in range(n)), tuple(range(n)))

    @classmethod
    def _from_rref(cls, F, n, rows, pivots) -> "Subspace":
        return cls(F, n, tuple(rows), tuple(pivots))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def reduce(self, v) -> tuple:
        """Residual of ``v`` after eliminating the pivot coordinates."""
        F = self.field
        p = F.p
        v = list(v)
        for row, c in zip(self.basis, self.pivots):
            a = v[c]
            if a:
                if p:
                    v = [(x - a * y) % p for x, y in zip(v, row)]
                else:
                    v = [x - a * y for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    __contains__ = contains

    def coordinates(self, v) -> tuple:
        """Coefficients of ``v`` (assumed inside) on the echelon basis."""
        return tuple(v[c] for c in self.pivots)

    def combine(self, coeffs) -> tuple:
        return lin_comb(self.field, coeffs, self.basis, self.ambient_dim)

    def le(self, other: "Subspace") -> bool:
        _check_compatible(self, other)
        return all(other.contains(b) for b in self.basis)

    __le__ = le

    def __lt__(self, other):
        return self.dim < other.dim and self.le(other)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def complement_indices(self) -> tuple:
        piv = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in piv)

    def sort_key(self):
        return (self.dim, self.basis)

    def with_vectors(self, vectors) -> "Subspace":
        return Subspace.span(self.field, self.ambient_dim, list(self.basis) + list(vectors))

    def __repr__(self):
        F = self.field
        rows = ", ".join("(" + ",".join(F.fmt(a) for a in r) + ")" for r in self.basis)
        return f"Subspace<{F}^{self.ambient_dim}: {rows}>"


def _check_compatible(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim or a.field != b.field:
        raise DimensionMismatch("subspaces live in different ambient spaces")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    return Subspace.span(a.field, a.ambient_dim, list(a.basis) + list(b.basis))


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """a ∩ b via the kernel of the residual map on a's coordinates."""
    _check_compatible(a, b)
    F, n = a.field, a.ambient_dim
    if not a.dim or not b.dim:
        return Subspace.zero(F, n)
    residuals = [b.reduce(v) for v in a.basis]
    # columns are residuals: solve sum c_i residual_i = 0
    rows = [tuple(r[k] for r in residuals) for k in range(n)]
    coeffs = kernel_rows(F, rows, a.dim)
    out = Subspace.span(F, n, [a.combine(c) for c in coeffs])
    assert out.dim + subspace_sum(a, b).dim == a.dim + b.dim
    return out


def intersect_all(F: Field, n: int, spaces) -> Subspace:
    acc = Subspace.full(F, n)
    for s in spaces:
        acc = subspace_intersect(acc, s)
        if acc.is_zero():
            break
    return acc


# ---------------------------------------------------------------------------
# enumeration of subspaces of F^n (finite fields)

def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def galois_number(n: int, q: int) -> int:
    """Total number of subspaces of GF(q)^n."""
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def iter_subspaces(F: Field, n: int, k: int):
    """Yield every k-dimensional subspace of F^n in canonical echelon form.

    Ordered by pivot set (lexicographic), then by free entries.
    """
    for pivots in combinations(range(n), k):
        yield from iter_subspaces_with_pivots(F, n, pivots)


def iter_subspaces_with_pivots(F: Field, n: int, pivots):
    """Subspaces whose echelon basis has exactly these pivot columns."""
    p = F.p
    k = len(pivots)
    pivset = set(pivots)
    free = []
    for r, c in enumerate(pivots):
        free.extend((r, j) for j in range(c + 1, n) if j not in pivset)
    for values in product(range(p), repeat=len(free)):
        rows = [[0] * n for _ in range(k)]
        for r, c in enumerate(pivots):
            rows[r][c] = 1
        for (r, j), a in zip(free, values):
            rows[r][j] = a
        yield Subspace(F, n, tuple(tuple(r) for r in rows), tuple(pivots))


def iter_projective(F: Field, d: int):
    """Coordinate vectors of F^d with first nonzero entry 1, in lexicographic order."""
    p = F.p
    for lead in range(d):
        for tail in product(range(p), repeat=d - lead - 1):
            yield (0,) * lead + (1,) + tail


def projective_count(d: int, q: int) -> int:
    return (q ** d - 1) // (q - 1) if d else 0


# ---------------------------------------------------------------------------
# polynomials over Q (coefficient lists, lowest degree first)

def charpoly(m: Matrix) -> list:
    """Characteristic polynomial det(tI - M), lowest degree first.

    Faddeev-LeVerrier; needs division by 1..n, so only used in
    characteristic 0 or characteristic > n.
    """
    F = m.field
    n = m.nrows
    if F.p and F.p <= n:
        raise ValueError("Faddeev-LeVerrier needs characteristic 0 or > n")
    coeffs = [F.zero] * (n + 1)
    coeffs[n] = F.one
    Mk = Matrix.zeros(F, n, n)
    ident = Matrix.identity(F, n)
    for k in range(1, n + 1):
        Mk = m @ Mk + ident.scale(coeffs[n - k + 1])
        tr = (m @ Mk).trace()
        coeffs[n - k] = F.norm(-tr * F.inv(F(k)))
    return coeffs


def minpoly(m: Matrix) -> list:
    """Minimal polynomial (monic, lowest degree first) via Krylov on powers."""
    F = m.field
    n = m.nrows
    powers = [Matrix.identity(F, n)]
    while True:
        k = len(powers)
        nxt = powers[-1] @ m
        # solve nxt = sum c_i powers[i]
        cols = [pw.flat() for pw in powers]
        rows = [tuple(col[t] for col in cols) + (nxt.flat()[t],) for t in range(n * n)]
        red, piv = rref_rows(F, rows, k + 1)
        if k not in piv:
            coeffs = [F.zero] * k
            for row, c in zip(red, piv):
                coeffs[c] = row[k]
            return [F.norm(-c) for c in coeffs] + [F.one]
        powers.append(nxt)


def poly_eval(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(coeffs) -> list:
    """Distinct rational roots of a polynomial with rational coefficients."""
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    roots = []
    # strip factors of t
    shift = 0
    while coeffs[shift] == 0:
        shift += 1
    if shift:
        roots.append(Fraction(0))
    coeffs = coeffs[shift:]
    if len(coeffs) == 1:
        return roots
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    a0, an = ints[0], ints[-1]
    for num in _divisors(a0):
        for d in _divisors(an):
            for sign in (1, -1):
                r = Fraction(sign * num, d)
                if r not in roots and poly_eval(ints, r) == 0:
                    roots.append(r)
    return sorted(roots)
