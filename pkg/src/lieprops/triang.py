"""Nil subalgebras, nil(S), triangulability on L, Fitting decompositions."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    LieAlgebra,
    Subalgebra,
    adjoint,
    as_space,
    derived_subalgebra,
    ideal_closure,
    is_subalgebra,
    stabilizer,
)
from .config import DEFAULT, ScanConfig
from .errors import CapExceeded, NotASubalgebra, NotNilpotent, NotTriangulable, Unsupported
from .linalg import (
    Matrix,
    Subspace,
    iter_projective,
    kernel_rows,
    projective_count,
    rref_rows,
    subspace_intersect,
    subspace_sum,
)


@dataclass(frozen=True)
class NilCertificate:
    """Engel descent V_0 = L, V_{k+1} = [V_k, S].

    ``chain`` ends in 0 when S is nil on L; otherwise it ends at the first
    term that reproduces itself, whose index is ``stall_index``.
    """

    is_nil: bool
    chain: tuple
    stall_index: int | None = None

    def __bool__(self):
        return self.is_nil


def _engel_descent(L: LieAlgebra, S: Subspace) -> NilCertificate:
    V = L.full
    chain = [V]
    gens = S.basis
    while V.dim:
        W = Subspace.span(L.field, L.dim, [L.bracket(v, s) for v in V.basis for s in gens])
        if W.dim == V.dim:
            return NilCertificate(False, tuple(chain), len(chain) - 1)
        chain.append(W)
        V = W
    return NilCertificate(True, tuple(chain))


def is_nil_on(L: LieAlgebra, S) -> NilCertificate:
    """Is every element of the subalgebra S ad-nilpotent on L?

    Decided by Engel descent: the chain reaches 0 iff ad_L S acts
    nilpotently, and it stalls otherwise.
    """
    V = as_space(L, S)
    if not is_subalgebra(L, V):
        raise NotASubalgebra("is_nil_on needs a subalgebra")
    return _engel_descent(L, V)


def is_ad_nilpotent(L: LieAlgebra, x) -> bool:
    return adjoint(L, x).is_nilpotent()


@dataclass(frozen=True)
class TriangulabilityResult:
    verdict: bool
    derived: Subspace
    certificate: NilCertificate

    def __bool__(self):
        return self.verdict


def is_triangulable_on(L: LieAlgebra, S) -> TriangulabilityResult:
    """S is triangulable on L iff every element of S^2 acts nilpotently on L."""
    V = as_space(L, S)
    if not is_subalgebra(L, V):
        raise NotASubalgebra("is_triangulable_on needs a subalgebra")
    D = derived_subalgebra(L, V)
    cert = _engel_descent(L, D)
    return TriangulabilityResult(cert.is_nil, D, cert)


def is_triangulable(L: LieAlgebra) -> bool:
    return is_triangulable_on(L, L.full).verdict


# ---------------------------------------------------------------------------
# nil(S)

def _nil_exact(L: LieAlgebra, S: Subspace, cfg: ScanConfig) -> Subspace:
    """Sum of the S-ideals generated by single elements that are nil on L.

    Every ideal of S is a sum of such principal ideals, and an ideal inside
    a nil ideal is nil, so this equals the sum of all nil ideals of S.
    """
    F = L.field
    count = projective_count(S.dim, F.p)
    if count > cfg.max_elements:
        raise CapExceeded("nil(S) exact path (projective points)", count, cfg.max_elements)
    N = L.zero_space
    for c in iter_projective(F, S.dim):
        x = S.combine(c)
        if N.contains(x):
            continue
        J = ideal_closure(L, x, within=S).space
        if _engel_descent(L, J).is_nil:
            N = subspace_sum(N, J)
    # the sum of nil ideals is again nil
    assert _engel_descent(L, N).is_nil
    return N


def ad_nilpotent_elements(L: LieAlgebra, S=None, cfg: ScanConfig = DEFAULT) -> list:
    """Projective representatives x != 0 of S with (ad_L x)^{dim L} = 0."""
    F = L.field
    if not F.is_finite:
        raise Unsupported("elementwise scans need a finite field")
    V = L.full if S is None else as_space(L, S)
    count = projective_count(V.dim, F.p)
    if count > cfg.max_elements:
        raise CapExceeded("ad-nilpotent element scan", count, cfg.max_elements)
    out = []
    for c in iter_projective(F, V.dim):
        x = V.combine(c)
        if is_ad_nilpotent(L, x):
            out.append(x)
    return out


def _nil_fast_finite(L: LieAlgebra, S: Subspace, cfg: ScanConfig) -> Subspace:
    pts = ad_nilpotent_elements(L, S, cfg)
    N = Subspace.span(L.field, L.dim, pts)
    # in the triangulable case the ad-nilpotent elements form a subspace
    assert len(pts) == projective_count(N.dim, L.field.p)
    return N


def _assoc_closure(F, mats, n):
    """Basis (flattened) of the unital associative algebra generated by mats."""
    ident = Matrix.identity(F, n)
    basis = [ident]
    red, piv = rref_rows(F, [ident.flat()], n * n)
    i = 0
    while i < len(basis):
        for A in mats:
            P = basis[i] @ A
            red2, piv2 = rref_rows(F, list(red) + [P.flat()], n * n)
            if len(red2) > len(red):
                red, piv = red2, piv2
                basis.append(P)
        i += 1
    return basis


def _nil_by_traces(L: LieAlgebra, S: Subspace) -> Subspace:
    """Ad-nilpotent elements of a subalgebra triangulable on L.

    Over the algebraic closure ad_L S is simultaneously triangular with
    diagonal weights λ_i; x is nilpotent iff every λ_i(x) = 0, which holds
    iff tr(ad x · W) = 0 for every W in the unital associative algebra
    generated by ad_L S.  Valid when the characteristic is 0 or exceeds
    dim L (weight multiplicities are then invertible).
    """
    F, n = L.field, L.dim
    ads = [adjoint(L, b) for b in S.basis]
    W = _assoc_closure(F, ads, n)
    rows = [tuple((A @ w).trace() for A in ads) for w in W]
    coeffs = kernel_rows(F, rows, S.dim)
    return Subspace.span(F, n, [S.combine(c) for c in coeffs])


def _nil_bound(L: LieAlgebra, S: Subspace) -> Subspace:
    """A certified lower bound: nil S-ideals generated by basis vectors of S and S^2."""
    N = L.zero_space
    seeds = list(S.basis) + list(derived_subalgebra(L, S).basis)
    for x in seeds:
        if N.contains(x):
            continue
        J = ideal_closure(L, x, within=S).space
        if _engel_descent(L, J).is_nil:
            N = subspace_sum(N, J)
    return N


def nil_ideal(L: LieAlgebra, S, method: str = "auto", cfg: ScanConfig = DEFAULT) -> Subalgebra:
    """nil(S): the largest ideal of S made of elements ad-nilpotent on L.

    ``method``: "exact" (finite fields, principal-ideal scan), "fast"
    (S triangulable on L: the set of ad-nilpotent elements), "bound"
    (a lower bound, any field) or "auto".
    """
    V = as_space(L, S)
    if not is_subalgebra(L, V):
        raise NotASubalgebra("nil_ideal needs a subalgebra")
    F = L.field
    if method == "auto":
        if F.is_finite and projective_count(V.dim, F.p) <= cfg.max_elements:
            method = "exact"
        else:
            method = "fast"
            if not is_triangulable_on(L, V).verdict:
                if F.is_finite:
                    raise CapExceeded("nil(S) exact path", projective_count(V.dim, F.p), cfg.max_elements)
                raise Unsupported("nil(S) over Q is only computed for triangulable S")
    if method == "exact":
        if not F.is_finite:
            raise Unsupported("the exact nil(S) path needs a finite field")
        N = _nil_exact(L, V, cfg)
    elif method == "fast":
        if not is_triangulable_on(L, V).verdict:
            raise NotTriangulable("fast nil(S) path needs S triangulable on L")
        if F.is_finite and F.p <= L.dim:
            N = _nil_fast_finite(L, V, cfg)
        else:
            N = _nil_by_traces(L, V)
            assert derived_subalgebra(L, V).le(N)
            assert all(is_ad_nilpotent(L, b) for b in N.basis)
    elif method == "bound":
        N = _nil_bound(L, V)
    else:
        raise ValueError(f"unknown nil_ideal method {method!r}")
    assert N.le(V)
    return Subalgebra(L, N)


def nil_ideal_by_enumeration(L: LieAlgebra, S, cfg: ScanConfig = DEFAULT) -> Subspace:
    """Reference route: enumerate all ideals of S, keep the nil ones, sum them."""
    from .scans import iter_subspaces_of

    V = as_space(L, S)
    N = L.zero_space
    for W in iter_subspaces_of(L, V, cfg):
        if W.dim and all(W.contains(L.bracket(w, s)) for w in W.basis for s in V.basis):
            if _engel_descent(L, W).is_nil:
                N = subspace_sum(N, W)
    return N


# ---------------------------------------------------------------------------
# Fitting decomposition

@dataclass(frozen=True)
class FittingDecomposition:
    null: Subspace
    one: Subspace


def fitting_decomposition(L: LieAlgebra, H) -> FittingDecomposition:
    """L = L_0 ∔ L_1 relative to the adjoint action of a nilpotent subalgebra H.

    L_1 = L·A^∞ is the stable term of the descent U_{k+1} = [U_k, H];
    L_0 is the stable term of the ascent K_{k+1} = {v : [v, H] ⊆ K_k}.
    """
    from .props import lower_central_series

    Hs = as_space(L, H)
    if not is_subalgebra(L, Hs):
        raise NotASubalgebra("Fitting decomposition needs a subalgebra")
    if not lower_central_series(L, Hs).reaches_zero:
        raise NotNilpotent("Fitting decomposition needs a nilpotent subalgebra")
    gens = Hs.basis
    U = L.full
    while True:
        W = Subspace.span(L.field, L.dim, [L.bracket(u, h) for u in U.basis for h in gens])
        if W == U:
            break
        U = W
    K = L.zero_space
    while True:
        K2 = stabilizer(L, L.full, K, gens)
        if K2 == K:
            break
        K = K2
    assert K.dim + U.dim == L.dim and subspace_intersect(K, U).is_zero()
    for h in gens:
        assert all(K.contains(L.bracket(v, h)) for v in K.basis)
        assert all(U.contains(L.bracket(v, h)) for v in U.basis)
    assert Hs.le(K)
    return FittingDecomposition(K, U)
