"""Deciders for the structural classes: solvability variants, supersolvability,
quasi-abelian algebras, simplicity, and the Frattini subalgebra and ideal."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb

from .algebra import (
    LieAlgebra,
    Subalgebra,
    adjoint,
    as_space,
    bracket_spaces,
    center,
    derived_subalgebra,
    ideal_closure,
    quotient,
    stabilizer,
)
from .config import DEFAULT, ScanConfig
from .errors import CapExceeded, Unsupported, UnknownProperty
from .linalg import (
    Matrix,
    Subspace,
    intersect_all,
    iter_projective,
    iter_subspaces,
    kernel,
    kernel_rows,
    minpoly,
    projective_count,
    rational_roots,
    charpoly,
    rref_rows,
    subspace_intersect,
)


@dataclass(frozen=True)
class SeriesChain:
    """Terms of a series; a descending series stops at 0 or where it stalls."""

    kind: str
    terms: tuple

    @property
    def dims(self) -> tuple:
        return tuple(t.dim for t in self.terms)

    @property
    def reaches_zero(self) -> bool:
        return self.terms[-1].is_zero()

    def __len__(self):
        return len(self.terms)


def _descend(L, start, step, kind):
    terms = [start]
    while not terms[-1].is_zero():
        nxt = step(terms[-1])
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return SeriesChain(kind, tuple(terms))


def derived_series(L: LieAlgebra, S=None) -> SeriesChain:
    start = L.full if S is None else as_space(L, S)
    return _descend(L, start, lambda V: derived_subalgebra(L, V), "derived")


def lower_central_series(L: LieAlgebra, S=None) -> SeriesChain:
    """C_0 = S, C_{k+1} = [S, C_k] (S defaults to L)."""
    top = L.full if S is None else as_space(L, S)
    return _descend(L, top, lambda V: bracket_spaces(L, top, V), "lower_central")


def is_abelian(L: LieAlgebra) -> bool:
    return L.is_abelian()


def is_nilpotent(L: LieAlgebra) -> bool:
    return lower_central_series(L).reaches_zero


def is_solvable(L: LieAlgebra) -> bool:
    return derived_series(L).reaches_zero


def is_strongly_solvable(L: LieAlgebra) -> bool:
    """L^2 is nilpotent."""
    return lower_central_series(L, derived_subalgebra(L)).reaches_zero


# ---------------------------------------------------------------------------
# quasi-abelian

def almost_abelian_element(L: LieAlgebra):
    """An x with [a, x] = a on L^2 when L = L^2 ∔ Fx, L^2 abelian and nonzero."""
    F, n = L.field, L.dim
    D = derived_subalgebra(L)
    if D.is_zero() or D.dim != n - 1:
        return None
    if not derived_subalgebra(L, D).is_zero():
        return None
    # unknown x = sum c_i e_i ; equations sum_i c_i [a, e_i] = a for a in basis(D)
    rows = []
    for a in D.basis:
        imgs = [L.bracket(a, e) for e in L.basis]
        for k in range(n):
            rows.append(tuple(img[k] for img in imgs) + (a[k],))
    red, piv = rref_rows(F, rows, n + 1)
    if n in piv:
        return None
    x = [F.zero] * n
    for row, c in zip(red, piv):
        x[c] = row[n]
    return tuple(x)


def is_almost_abelian(L: LieAlgebra) -> bool:
    return almost_abelian_element(L) is not None


def _witness_candidates(L: LieAlgebra):
    """Vectors by growing support and coefficient size; basis vectors first."""
    F, n = L.field, L.dim
    if F.is_finite:
        bounds = [None]
        values = list(range(1, F.p))
    else:
        bounds = [1, 2, 3]
    for bound in bounds:
        if bound is not None:
            values = [F(c) for c in range(-bound, bound + 1) if c]
        for s in range(1, n + 1):
            for pos in combinations(range(n), s):
                for vals in product(values, repeat=s):
                    if F.is_finite and vals[0] != 1:
                        continue
                    if bound and bound > 1 and max(abs(a) for a in vals) < bound:
                        continue
                    v = [F.zero] * n
                    for i, a in zip(pos, vals):
                        v[i] = F(a)
                    yield tuple(v)


def _not_closed(L, u, v) -> bool:
    V = Subspace.span(L.field, L.dim, [u, v])
    return V.dim == 2 and not V.contains(L.bracket(u, v))


def quasi_abelian_check(L: LieAlgebra):
    """(verdict, witness).  The witness (u, v) has [u, v] outside span{u, v}."""
    if L.is_abelian() or is_almost_abelian(L):
        return True, None
    basis = L.basis
    for u in _witness_candidates(L):
        for v in basis:
            if _not_closed(L, u, v):
                return False, (u, v)
    for u in _witness_candidates(L):
        for v in _witness_candidates(L):
            if _not_closed(L, u, v):
                return False, (u, v)
    raise AssertionError("non quasi-abelian algebra without a 2-dimensional witness")


def is_quasi_abelian(L: LieAlgebra) -> bool:
    return quasi_abelian_check(L)[0]


def quasi_abelian_literal(L: LieAlgebra) -> bool:
    """Every 2-dimensional subspace is a subalgebra (finite fields only)."""
    if not L.field.is_finite:
        raise Unsupported("literal 2-subspace check needs a finite field")
    for V in iter_subspaces(L.field, L.dim, 2):
        if not V.contains(L.bracket(V.basis[0], V.basis[1])):
            return False
    return True


# ---------------------------------------------------------------------------
# one-dimensional ideals and supersolvability

def eigenvalue_candidates(L: LieAlgebra, A: Matrix):
    F = L.field
    if F.is_finite:
        return list(F.elements())
    return rational_roots(charpoly(A))


def joint_eigenspaces(L: LieAlgebra) -> list:
    """Maximal subspaces W with [w, e_i] = λ_i w for all w in W and all i.

    Every nonzero vector of such a W spans a one-dimensional ideal, and
    every one-dimensional ideal lies in one of them.
    """
    F, n = L.field, L.dim
    if n == 0:
        return []
    spaces = [L.full]
    for e in L.basis:
        A = adjoint(L, e)
        if A.is_zero():
            continue
        refined = []
        lams = eigenvalue_candidates(L, A)
        for lam in lams:
            shifted = A - Matrix.identity(F, n).scale(lam)
            K = kernel(shifted)
            if K.is_zero():
                continue
            for V in spaces:
                W = subspace_intersect(V, K)
                if not W.is_zero():
                    refined.append(W)
        spaces = refined
        if not spaces:
            break
    return spaces


def _line_key(v):
    lead = next(i for i, a in enumerate(v) if a)
    return (lead, v)


def first_one_dim_ideal(L: LieAlgebra):
    """Deterministic choice: first echelon row of each joint eigenspace, least by
    (pivot position, entries)."""
    spaces = joint_eigenspaces(L)
    if not spaces:
        return None
    return min((W.basis[0] for W in spaces), key=_line_key)


def supersolvable_flag(L: LieAlgebra):
    """A chain of ideals of every dimension 0..n, or None.

    Supersolvability passes to quotients, so once a one-dimensional ideal
    I exists, L is supersolvable iff L/I is; the first branch of the
    depth-first search therefore decides and no backtracking is needed.
    """
    F, n = L.field, L.dim
    I = L.zero_space
    terms = [I]
    while I.dim < n:
        Q, proj = quotient(L, I)
        line = first_one_dim_ideal(Q)
        if line is None:
            return None
        I = I.with_vectors([proj.lift(line)])
        terms.append(I)
    return SeriesChain("supersolvable_flag", tuple(terms))


def is_supersolvable(L: LieAlgebra) -> bool:
    return supersolvable_flag(L) is not None


def check_flag(L: LieAlgebra, chain: SeriesChain) -> bool:
    """True iff ``chain`` is a full flag of ideals of L."""
    from .algebra import is_ideal

    terms = chain.terms
    if len(terms) != L.dim + 1:
        return False
    for k, T in enumerate(terms):
        if T.dim != k or not is_ideal(L, T):
            return False
        if k and not terms[k - 1].le(T):
            return False
    return True


# ---------------------------------------------------------------------------
# simplicity

def _killing_gram(L: LieAlgebra):
    ads = [adjoint(L, e) for e in L.basis]
    n = L.dim
    return [[(ads[i] @ ads[j]).trace() for j in range(n)] for i in range(n)]


def killing_form(L: LieAlgebra, x, y):
    return (adjoint(L, x) @ adjoint(L, y)).trace()


def _centroid_basis(L: LieAlgebra) -> list:
    """Basis of {T in End(L) : T ad x = ad x T for all x} as matrices."""
    F, n = L.field, L.dim
    ads = [adjoint(L, e) for e in L.basis]
    rows = []
    # unknown T[r][c] at index r*n + c
    for A in ads:
        for r in range(n):
            for c in range(n):
                # (T A - A T)[r][c] = sum_k T[r][k] A[k][c] - A[r][k] T[k][c]
                row = [F.zero] * (n * n)
                for k in range(n):
                    if A.rows[k][c]:
                        row[r * n + k] = F.norm(row[r * n + k] + A.rows[k][c])
                    if A.rows[r][k]:
                        row[k * n + c] = F.norm(row[k * n + c] - A.rows[r][k])
                rows.append(tuple(row))
    sol = kernel_rows(F, rows, n * n)
    return [Matrix(F, tuple(tuple(v[r * n:(r + 1) * n]) for r in range(n)), n) for v in sol]


def _is_simple_char0(L: LieAlgebra) -> bool:
    """Characteristic 0: nondegenerate Killing form and a centroid that is a field."""
    F, n = L.field, L.dim
    gram = _killing_gram(L)
    if len(rref_rows(F, gram, n)[0]) != n:
        return False
    C = _centroid_basis(L)
    m = len(C)
    if m == 1:
        return True
    # find a primitive element of the (commutative, semisimple) centroid;
    # at most C(m,2)(m-1) parameters on the moment curve fail
    bound = comb(m, 2) * (m - 1) + 1
    for t in range(bound + 1):
        T = C[0]
        for i in range(1, m):
            T = T + C[i].scale(F(t ** i))
        mp = minpoly(T)
        if len(mp) - 1 == m:
            import sympy

            x = sympy.Symbol("x")
            poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(mp)], x, domain="QQ")
            return bool(poly.is_irreducible)
    raise AssertionError("no primitive element found in the centroid")


def _is_simple_finite(L: LieAlgebra, cap: int) -> bool:
    F, n = L.field, L.dim
    count = projective_count(n, F.p)
    for e in L.basis:
        if ideal_closure(L, e).dim < n:
            return False
    if count > cap:
        raise CapExceeded("simplicity check (projective points)", count, cap)
    for c in iter_projective(F, n):
        if ideal_closure(L, tuple(c)).dim < n:
            return False
    return True


def is_simple(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> bool:
    """No proper nonzero ideal and L^2 = L; dimension <= 1 never counts."""
    n = L.dim
    if n <= 1 or L.is_abelian():
        return False
    if derived_subalgebra(L).dim != n:
        return False
    if not center(L).is_zero():
        return False
    if L.field.is_finite:
        return _is_simple_finite(L, cfg.max_elements)
    return _is_simple_char0(L)


def is_simple_or_1dim(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> bool:
    return L.dim == 1 or is_simple(L, cfg)


# ---------------------------------------------------------------------------
# ideals

def minimal_ideals(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> list:
    """All minimal nonzero ideals (a simple algebra returns [L])."""
    F, n = L.field, L.dim
    if n == 0:
        return []
    if not F.is_finite:
        if n == 1 or is_simple(L, cfg):
            return [Subalgebra(L, L.full)]
        raise Unsupported("minimal ideals over Q are only certified for simple algebras")
    count = projective_count(n, F.p)
    if count > cfg.max_elements:
        raise CapExceeded("minimal ideal search (projective points)", count, cfg.max_elements)
    closures = {}
    for c in iter_projective(F, n):
        J = ideal_closure(L, tuple(c)).space
        closures[J] = None
    cands = sorted(closures, key=lambda V: V.sort_key())
    out = []
    for J in cands:
        if not any(K.dim < J.dim and K.le(J) for K in cands):
            out.append(Subalgebra(L, J))
    return out


def ideal_core(L: LieAlgebra, V) -> Subalgebra:
    """Largest ideal of L inside V: iterate I -> {x in I : [x, L] ⊆ I}."""
    I = as_space(L, V)
    steps = 0
    while True:
        J = stabilizer(L, I, I, L.basis)
        if J == I:
            break
        I = J
        steps += 1
    assert steps <= as_space(L, V).dim
    return Subalgebra(L, I)


def largest_nilpotent_ideal(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> Subalgebra:
    """The unique maximal nilpotent ideal (the ideals nil on L are exactly the
    nilpotent ideals, so this is nil(L) taken relative to L itself)."""
    from .triang import nil_ideal

    F = L.field
    if F.is_finite:
        N = nil_ideal(L, L.full, method="exact", cfg=cfg)
    else:
        # char 0: the solvable radical is the Killing-orthogonal of L^2 and is
        # triangulable on L, so its ad-nilpotent elements form the nilradical
        R = solvable_radical(L)
        N = nil_ideal(L, R, method="fast", cfg=cfg)
    assert lower_central_series(L, N.space).reaches_zero
    from .algebra import is_ideal

    assert is_ideal(L, N.space)
    return Subalgebra(L, N.space)


def solvable_radical(L: LieAlgebra) -> Subspace:
    """Characteristic 0 only: the orthogonal of L^2 under the Killing form."""
    F, n = L.field, L.dim
    if F.is_finite:
        raise Unsupported("Killing-form radical is only valid in characteristic 0")
    D = derived_subalgebra(L)
    ads = [adjoint(L, e) for e in L.basis]
    dads = [adjoint(L, d) for d in D.basis]
    rows = [tuple((dA @ ads[i]).trace() for i in range(n)) for dA in dads]
    R = Subspace.span(F, n, kernel_rows(F, rows, n)) if rows else L.full
    assert derived_series(L, R).reaches_zero
    return R


# ---------------------------------------------------------------------------
# Frattini theory

@dataclass(frozen=True)
class FrattiniResult:
    frattini_subalgebra: Subspace
    frattini_ideal: Subalgebra
    maximal_count: int

    @property
    def is_phi_free(self) -> bool:
        return self.frattini_ideal.space.is_zero()


def frattini_subalgebra(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> Subspace:
    return frattini(L, cfg).frattini_subalgebra


def frattini(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> FrattiniResult:
    """F(L) = intersection of the maximal subalgebras, φ(L) = its ideal core."""
    if not L.field.is_finite:
        raise Unsupported("maximal subalgebras are not enumerable over Q")
    from .scans import maximal_subalgebras

    maxes = maximal_subalgebras(L, cfg)
    FL = intersect_all(L.field, L.dim, [M.space for M in maxes]) if maxes else L.zero_space
    phi = ideal_core(L, FL)
    assert phi.space.le(FL)
    return FrattiniResult(FL, phi, len(maxes))


def frattini_ideal(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> Subalgebra:
    return frattini(L, cfg).frattini_ideal


def is_phi_free(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> bool:
    return frattini(L, cfg).is_phi_free


# ---------------------------------------------------------------------------
# reports

PROPERTY_NAMES = (
    "abelian",
    "nilpotent",
    "solvable",
    "strongly_solvable",
    "supersolvable",
    "almost_abelian",
    "quasi_abelian",
    "simple",
)

INTRINSIC = {
    "abelian": is_abelian,
    "nilpotent": is_nilpotent,
    "solvable": is_solvable,
    "strongly_solvable": is_strongly_solvable,
    "supersolvable": is_supersolvable,
    "almost_abelian": is_almost_abelian,
    "quasi_abelian": is_quasi_abelian,
    "simple": is_simple,
    "simple_or_1dim": is_simple_or_1dim,
}


def decide(L: LieAlgebra, name: str, cfg: ScanConfig = DEFAULT) -> bool:
    try:
        fn = INTRINSIC[name]
    except KeyError:
        raise UnknownProperty(name) from None
    if name in ("simple", "simple_or_1dim"):
        return fn(L, cfg)
    return fn(L)


@dataclass
class PropertyReport:
    verdicts: dict = field(default_factory=dict)
    certificates: dict = field(default_factory=dict)

    def __getitem__(self, name):
        return self.verdicts[name]


_IMPLICATIONS = (
    ("supersolvable", "strongly_solvable"),
    ("strongly_solvable", "solvable"),
    ("abelian", "nilpotent"),
    ("nilpotent", "solvable"),
    ("almost_abelian", "quasi_abelian"),
    ("abelian", "quasi_abelian"),
)


def property_report(L: LieAlgebra, props=None, cfg: ScanConfig = DEFAULT) -> PropertyReport:
    """Verdicts with certificates for the requested properties (default: all)."""
    from .triang import is_nil_on

    names = list(PROPERTY_NAMES if props is None else props)
    for name in names:
        if name not in INTRINSIC:
            raise UnknownProperty(name)
    rep = PropertyReport()
    for name in names:
        if name == "nilpotent":
            lcs = lower_central_series(L)
            v = lcs.reaches_zero
            rep.certificates[name] = lcs
            engel = is_nil_on(L, L.full)
            assert engel.is_nil == v, "series and Engel descent disagree on nilpotency"
            if v:
                assert all(adjoint(L, e).is_nilpotent() for e in L.basis)
        elif name == "solvable":
            ds = derived_series(L)
            v = ds.reaches_zero
            rep.certificates[name] = ds
        elif name == "strongly_solvable":
            s = lower_central_series(L, derived_subalgebra(L))
            v = s.reaches_zero
            rep.certificates[name] = s
        elif name == "supersolvable":
            flag = supersolvable_flag(L)
            v = flag is not None
            if v:
                assert check_flag(L, flag)
                rep.certificates[name] = flag
        elif name == "quasi_abelian":
            v, wit = quasi_abelian_check(L)
            if wit is not None:
                rep.certificates[name] = wit
        elif name == "almost_abelian":
            x = almost_abelian_element(L)
            v = x is not None
            if v:
                rep.certificates[name] = x
        else:
            v = decide(L, name, cfg)
        rep.verdicts[name] = v
    for a, b in _IMPLICATIONS:
        if a in rep.verdicts and b in rep.verdicts and rep.verdicts[a]:
            assert rep.verdicts[b], f"{a} holds but {b} fails"
    return rep
