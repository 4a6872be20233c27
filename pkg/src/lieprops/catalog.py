"""Constructors for the named algebras and the classified families.

Basis order follows the order in which the generators are listed in the
definitions below; e_i of a family sits at slot ``offset + i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import LieAlgebra, abelian as _abelian, validate
from .config import DEFAULT, ScanConfig
from .errors import AlphaEqualsOne, BadP, CatalogError, CharMismatch, ReducibleAction
from .fields import GF, Field, Q
from .linalg import Matrix, charpoly, galois_number, iter_subspaces


def _build(F: Field, names, table) -> LieAlgebra:
    """``table`` maps (x, y) name pairs to {name: coeff}; either orientation."""
    idx = {nm: i for i, nm in enumerate(names)}
    n = len(names)
    data = {}
    for (a, b), terms in table.items():
        v = [F.zero] * n
        for nm, c in terms.items():
            v[idx[nm]] = F.norm(v[idx[nm]] + F(c))
        data[(idx[a], idx[b])] = tuple(v)
    return validate(data, F, names)


def heisenberg(F: Field = Q) -> LieAlgebra:
    """[a, b] = c, c central."""
    return _build(F, ("a", "b", "c"), {("a", "b"): {"c": 1}})


def sl2(F: Field = Q) -> LieAlgebra:
    """[h, e] = 2e, [h, f] = -2f, [e, f] = h."""
    return _build(F, ("e", "f", "h"), {
        ("h", "e"): {"e": 2},
        ("h", "f"): {"f": -2},
        ("e", "f"): {"h": 1},
    })


def abelian(n: int, F: Field = Q) -> LieAlgebra:
    return _abelian(F, n)


def affine2(F: Field = Q) -> LieAlgebra:
    """[a, x] = a."""
    return _build(F, ("a", "x"), {("a", "x"): {"a": 1}})


def almost_abelian(n: int, F: Field = Q) -> LieAlgebra:
    """L = L^2 ∔ Fx with ad x the identity on L^2 = span{a_1..a_(n-1)}."""
    if n < 2:
        raise CatalogError("almost abelian algebras need n >= 2 (L^2 must be nonzero)")
    names = tuple(f"a{i}" for i in range(1, n)) + ("x",)
    return _build(F, names, {(f"a{i}", "x"): {f"a{i}": 1} for i in range(1, n)})


def gein_family1(alpha, F: Field = Q) -> LieAlgebra:
    """[a1, x] = a1, [a2, x] = alpha a2 with alpha != 1."""
    alpha = F(alpha)
    if alpha == F.one:
        raise AlphaEqualsOne("family (1) needs alpha != 1")
    return _build(F, ("a1", "a2", "x"), {("a1", "x"): {"a1": 1}, ("a2", "x"): {"a2": alpha}})


def gein_family2(F: Field = Q) -> LieAlgebra:
    """[a1, x] = a1, [a2, x] = a1 + a2."""
    return _build(F, ("a1", "a2", "x"), {("a1", "x"): {"a1": 1}, ("a2", "x"): {"a1": 1, "a2": 1}})


def _has_invariant_subspace(F: Field, M: Matrix, cfg: ScanConfig) -> bool:
    k = M.nrows
    if F.is_finite:
        est = galois_number(k, F.p)
        if est > cfg.max_subspaces:
            from .errors import CapExceeded

            raise CapExceeded("invariant subspace search", est, cfg.max_subspaces)
        for d in range(1, k):
            for W in iter_subspaces(F, k, d):
                # row convention: a -> a M
                if all(W.contains(M.transpose().apply(w)) for w in W.basis):
                    return True
        return False
    # one operator acts irreducibly iff its characteristic polynomial is irreducible
    import sympy

    t = sympy.Symbol("t")
    cp = charpoly(M)
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(cp)], t, domain="QQ")
    return not poly.is_irreducible


def semidirect_abelian(F: Field, action, names=None) -> LieAlgebra:
    """A ∔ Fx with A abelian and [a_i, x] = sum_k action[i][k] a_k."""
    M = Matrix.from_rows(F, action)
    k = M.nrows
    if names is None:
        names = tuple(f"a{i}" for i in range(k)) + ("x",)
    data = {(i, k): tuple(M.rows[i]) + (F.zero,) for i in range(k)}
    return validate(data, F, names)


def stitzinger_min_nonabelian(action, F: Field = Q, cfg: ScanConfig = DEFAULT) -> LieAlgebra:
    """A ∔ Fx, A abelian, ad x acting irreducibly on A (given as rows)."""
    M = Matrix.from_rows(F, action)
    if M.nrows != M.ncols or M.nrows == 0:
        raise CatalogError("the action must be a nonempty square matrix")
    if M.is_zero():
        raise ReducibleAction("zero action gives an abelian algebra")
    if _has_invariant_subspace(F, M, cfg):
        raise ReducibleAction("the action has a proper invariant subspace")
    return semidirect_abelian(F, action)


def semidirect(B: LieAlgebra, rho, a_names=None) -> LieAlgebra:
    """A ∔ B with A abelian and [a, b] = a rho(b) (rows are images).

    Jacobi forces rho([b1, b2]) = rho(b1) rho(b2) - rho(b2) rho(b1);
    validation rejects inconsistent data.
    """
    F = B.field
    mats = [Matrix.from_rows(F, r) for r in rho]
    if len(mats) != B.dim:
        raise CatalogError("one action matrix per basis vector of B")
    k = mats[0].nrows if mats else 0
    n = k + B.dim
    if a_names is None:
        a_names = tuple(f"e{i}" for i in range(k))
    names = tuple(a_names) + tuple(B.names)
    data = {}
    for i in range(k):
        for j, R in enumerate(mats):
            data[(i, k + j)] = tuple(R.rows[i]) + (F.zero,) * B.dim
    for (i, j), v in B.brackets.items():
        data[(k + i, k + j)] = (F.zero,) * k + tuple(v)
    return validate(data, F, names)


def _shift(F: Field, k: int, cyclic=True):
    rows = []
    for i in range(k):
        r = [F.zero] * k
        if i + 1 < k or cyclic:
            r[(i + 1) % k] = F.one
        rows.append(tuple(r))
    return rows


def shape_type1(F: Field = GF(3), alpha=1) -> LieAlgebra:
    """Type I: A ∔ B with B = M ∔ Fx, M = Fm a minimal ideal of B.

    A = F^p (p the characteristic), m shifts cyclically, x acts by
    diag(alpha + i), and [m, x] = m.
    """
    p = F.characteristic
    if not p:
        raise CharMismatch("type I algebras live in characteristic p > 0")
    B = _build(F, ("m", "x"), {("m", "x"): {"m": 1}})
    diag = [tuple(F(alpha + i) if r == i else F.zero for r in range(p)) for i in range(p)]
    return semidirect(B, [_shift(F, p), diag])


def shape_type2(F: Field = GF(3)) -> LieAlgebra:
    """Type II: A ∔ B with B the Heisenberg algebra c, s, x, [s, x] = c.

    A = F[t]/(t^p - 1): s multiplies by t, x differentiates, c is the
    identity.  d/dt(t^p - 1) = 0 in characteristic p, so x is well defined,
    and D t - t D = 1 gives rho([s, x]) = rho(c).
    """
    p = F.characteristic
    if not p:
        raise CharMismatch("type II algebras live in characteristic p > 0")
    B = _build(F, ("c", "s", "x"), {("s", "x"): {"c": 1}})
    ident = [tuple(F.one if r == i else F.zero for r in range(p)) for i in range(p)]
    mult_t = _shift(F, p)
    deriv = []
    for i in range(p):
        r = [F.zero] * p
        if i:
            r[i - 1] = F(i)
        deriv.append(tuple(r))
    return semidirect(B, [ident, mult_t, deriv])


def _check_char(F: Field, p: int):
    if F.characteristic != p:
        raise CharMismatch(f"field {F} does not have characteristic {p}")


def ev_type_a(p: int, alpha=0, F: Field | None = None) -> LieAlgebra:
    """Basis x, y, e_0..e_(p-1): [e_i, y] = (alpha + i) e_i,
    [e_i, x] = e_(i+1) (indices mod p), [x, y] = x."""
    F = GF(p) if F is None else F
    _check_char(F, p)
    names = ("x", "y") + tuple(f"e{i}" for i in range(p))
    table = {("x", "y"): {"x": 1}}
    for i in range(p):
        table[(f"e{i}", "y")] = {f"e{i}": F(alpha) + i}
        table[(f"e{i}", "x")] = {f"e{(i + 1) % p}": 1}
    return _build(F, names, table)


def ev_type_b(p: int, F: Field | None = None) -> LieAlgebra:
    """Basis x, y, z, e_0..e_(p-1): [e_i, z] = e_i, [e_i, x] = e_(i+1)
    for i <= p-2; all other products zero (as printed)."""
    F = GF(p) if F is None else F
    _check_char(F, p)
    names = ("x", "y", "z") + tuple(f"e{i}" for i in range(p))
    table = {}
    for i in range(p):
        table[(f"e{i}", "z")] = {f"e{i}": 1}
        if i <= p - 2:
            table[(f"e{i}", "x")] = {f"e{i + 1}": 1}
    return _build(F, names, table)


def cross_product(F: Field = Q) -> LieAlgebra:
    """[e1, e2] = e3, [e2, e3] = e1, [e3, e1] = e2."""
    return _build(F, ("e1", "e2", "e3"), {
        ("e1", "e2"): {"e3": 1},
        ("e2", "e3"): {"e1": 1},
        ("e3", "e1"): {"e2": 1},
    })


def witt(p: int) -> LieAlgebra:
    """W(1;1) over GF(p): w_-1..w_(p-2), [w_i, w_j] = (j - i) w_(i+j),
    zero when i + j leaves the range."""
    if p < 5:
        raise BadP("the Witt algebra fixture needs p >= 5")
    F = GF(p)
    idx = list(range(-1, p - 1))
    names = tuple(f"w{i}" if i >= 0 else "wm1" for i in idx)
    nm = dict(zip(idx, names))
    table = {}
    for a in idx:
        for b in idx:
            if a < b and (a + b) in nm:
                table[(nm[a], nm[b])] = {nm[a + b]: b - a}
    return _build(F, names, table)


# ---------------------------------------------------------------------------
# registry

@dataclass
class CatalogEntry:
    """A built algebra plus the claims made about it.

    ``expect`` maps property -> (value, "assert" | "report").
    """

    name: str
    params: dict
    algebra: LieAlgebra
    expect: dict = field(default_factory=dict)


def _parse_scalar(text: str):
    return Fraction(text) if "/" in text else int(text)


def _parse_matrix(text: str):
    return [tuple(_parse_scalar(c) for c in row.split(",")) for row in text.split(";")]


BUILDERS = {
    "heisenberg": (lambda P: heisenberg(P["field"]), ("field",)),
    "sl2": (lambda P: sl2(P["field"]), ("field",)),
    "abelian": (lambda P: abelian(int(P.get("n", 3)), P["field"]), ("field", "n")),
    "affine2": (lambda P: affine2(P["field"]), ("field",)),
    "almost_abelian": (lambda P: almost_abelian(int(P.get("n", 3)), P["field"]), ("field", "n")),
    "gein_family1": (lambda P: gein_family1(_parse_scalar(P.get("alpha", "2")), P["field"]), ("field", "alpha")),
    "gein_family2": (lambda P: gein_family2(P["field"]), ("field",)),
    "stitzinger": (
        lambda P: stitzinger_min_nonabelian(_parse_matrix(P.get("action", "0,1;-1,0")), P["field"]),
        ("field", "action"),
    ),
    "shape_type1": (lambda P: shape_type1(P["field"], _parse_scalar(P.get("alpha", "1"))), ("field", "alpha")),
    "shape_type2": (lambda P: shape_type2(P["field"]), ("field",)),
    "ev_type_a": (
        lambda P: ev_type_a(int(P.get("p", 3)), _parse_scalar(P.get("alpha", "0")), P.get("field")),
        ("p", "alpha", "field"),
    ),
    "ev_type_b": (lambda P: ev_type_b(int(P.get("p", 3)), P.get("field")), ("p", "field")),
    "cross_product": (lambda P: cross_product(P["field"]), ("field",)),
    "witt": (lambda P: witt(int(P.get("p", 5))), ("p",)),
}

_DEFAULT_FIELD = {"shape_type1": "GF(3)", "shape_type2": "GF(3)", "stitzinger": "GF(3)"}


def build(name: str, params: dict | None = None) -> LieAlgebra:
    """Build a catalog algebra from string parameters (the CLI surface)."""
    if name not in BUILDERS:
        raise CatalogError(f"unknown catalog entry {name!r}")
    fn, allowed = BUILDERS[name]
    P = dict(params or {})
    for k in P:
        if k not in allowed:
            raise CatalogError(f"{name} takes parameters {', '.join(allowed)}; got {k!r}")
    if "field" in P:
        P["field"] = Field.parse(P["field"])
    elif "field" in allowed and name not in ("ev_type_a", "ev_type_b"):
        P["field"] = Field.parse(_DEFAULT_FIELD.get(name, "Q"))
    return fn(P)


def _e(name, params, L, **expect):
    return CatalogEntry(name, params, L, expect)


def entries(fields=(GF(2), GF(3), GF(5), Q)) -> list:
    """The fixture list used by the validation and harness suites."""
    A, R = "assert", "report"
    out = []
    for F in fields:
        tag = str(F)
        out.append(_e("heisenberg", {"field": tag}, heisenberg(F),
                      nilpotent=(True, A), supersolvable=(True, A), simple=(False, A)))
        # the char-2 table degenerates (h becomes central)
        char2 = F.characteristic == 2
        out.append(_e("sl2", {"field": tag}, sl2(F),
                      simple=(not char2, R if char2 else A), solvable=(char2, R if char2 else A)))
        out.append(_e("abelian", {"field": tag, "n": 3}, abelian(3, F), abelian=(True, A)))
        out.append(_e("affine2", {"field": tag}, affine2(F), supersolvable=(True, A)))
        for n in (2, 3):
            out.append(_e("almost_abelian", {"field": tag, "n": n}, almost_abelian(n, F),
                          almost_abelian=(True, A), quasi_abelian=(True, A)))
        if F.p != 2:
            out.append(_e("gein_family1", {"field": tag, "alpha": 2}, gein_family1(2, F),
                          quasi_abelian=(False, A)))
        out.append(_e("gein_family2", {"field": tag}, gein_family2(F), quasi_abelian=(False, A)))
        out.append(_e("cross_product", {"field": tag}, cross_product(F),
                      simple=(True, A if F.characteristic != 2 else R)))
    F3 = GF(3)
    out.append(_e("stitzinger", {"field": "GF(3)", "action": "0,1;-1,0"},
                  stitzinger_min_nonabelian([(0, 1), (-1, 0)], F3), abelian=(False, A)))
    out.append(_e("shape_type1", {"field": "GF(3)", "alpha": 1}, shape_type1(F3, 1), solvable=(True, A)))
    out.append(_e("shape_type2", {"field": "GF(3)"}, shape_type2(F3), solvable=(True, A)))
    for alpha in (0, 1):
        out.append(_e("ev_type_a", {"p": 3, "alpha": alpha}, ev_type_a(3, alpha),
                      solvable=(True, A), strongly_solvable=(False, A)))
    out.append(_e("ev_type_b", {"p": 3}, ev_type_b(3),
                  solvable=(True, R), strongly_solvable=(False, R), supersolvable=(False, R)))
    out.append(_e("witt", {"p": 5}, witt(5), simple=(True, A)))
    return out
