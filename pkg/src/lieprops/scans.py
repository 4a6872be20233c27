"""Finite-field enumeration: subalgebra lattices, two-generation, pair scans.

Work is split into chunks by pivot set.  Chunks run in order (or in a
process pool when ``cfg.workers > 1``) and results are merged in chunk
order, so output never depends on the worker count.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from itertools import combinations

from .algebra import LieAlgebra, Subalgebra, as_space, closure_space, restrict
from .config import DEFAULT, ScanConfig
from .errors import CapExceeded, Unsupported, UnknownProperty
from .fields import Field
from .linalg import (
    Subspace,
    galois_number,
    gaussian_binomial,
    iter_subspaces,
    iter_subspaces_with_pivots,
)

SCAN_PROPERTIES = (
    "abelian",
    "nilpotent",
    "quasi_abelian",
    "solvable",
    "strongly_solvable",
    "supersolvable",
    "simple_or_1dim",
    "triangulable_on_L",
)


def _require_finite(F: Field, what: str):
    if not F.is_finite:
        raise Unsupported(f"{what} needs a finite field")


def _pmap(fn, tasks, workers):
    """map() that keeps task order; uses processes when workers > 1."""
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, tasks))


def _first_hit(fn, tasks, workers):
    """Run chunk searches; each returns (hit or None, scanned).  Merge as a
    sequential scan would: the first hit in chunk order, counts up to it."""
    if workers <= 1:
        results = []
        for t in tasks:
            r = fn(t)
            results.append(r)
            if r[0] is not None:
                break
    else:
        results = _pmap(fn, tasks, workers)
    scanned = 0
    for hit, n in results:
        scanned += n
        if hit is not None:
            return hit, scanned
    return None, scanned


# ---------------------------------------------------------------------------
# subspaces and subalgebras

def iter_subspaces_of(L: LieAlgebra, V, cfg: ScanConfig = DEFAULT):
    """Every subspace of V (as subspaces of L), smallest dimension first."""
    F = L.field
    _require_finite(F, "subspace enumeration")
    V = as_space(L, V)
    est = galois_number(V.dim, F.p)
    if est > cfg.max_subspaces:
        raise CapExceeded("subspaces", est, cfg.max_subspaces)
    for k in range(V.dim + 1):
        for W in iter_subspaces(F, V.dim, k):
            yield Subspace.span(F, L.dim, [V.combine(r) for r in W.basis])


def _subalgebras_with_pivots(L: LieAlgebra, pivots):
    out = []
    for V in iter_subspaces_with_pivots(L.field, L.dim, pivots):
        B = V.basis
        if all(V.contains(L.bracket(B[a], B[b])) for a in range(len(B)) for b in range(a + 1, len(B))):
            out.append(V)
    return out


def subalgebra_count_estimate(L: LieAlgebra) -> int:
    return galois_number(L.dim, L.field.p)


def enumerate_subalgebras(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> list:
    """All subalgebras (0 and L included), by dimension, pivot set, entries."""
    F, n = L.field, L.dim
    _require_finite(F, "subalgebra enumeration")
    est = galois_number(n, F.p)
    if est > cfg.max_subspaces:
        raise CapExceeded("subalgebra enumeration (subspaces)", est, cfg.max_subspaces)
    tasks = [piv for k in range(n + 1) for piv in combinations(range(n), k)]
    chunks = _pmap(partial(_subalgebras_with_pivots, L), tasks, cfg.workers)
    return [Subalgebra(L, V) for chunk in chunks for V in chunk]


def maximal_subalgebras(L: LieAlgebra, cfg: ScanConfig = DEFAULT, subalgebras=None) -> list:
    """Proper subalgebras contained in no other proper subalgebra."""
    subs = enumerate_subalgebras(L, cfg) if subalgebras is None else subalgebras
    proper = [S for S in subs if S.dim < L.dim]
    # larger first: a candidate inside a bigger proper subalgebra is inside
    # some maximal one already found
    proper.sort(key=lambda S: -S.dim)
    maxes = []
    for S in proper:
        if not any(S.space.le(M.space) for M in maxes):
            maxes.append(S)
    maxes.sort(key=lambda S: S.space.sort_key())
    return maxes


def proper_subalgebras(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> list:
    return [S for S in enumerate_subalgebras(L, cfg) if S.dim < L.dim]


# ---------------------------------------------------------------------------
# two-generation

@dataclass(frozen=True)
class TwoGenResult:
    """verdict is True (pair found), False (exhaustive, none) or None (unknown)."""

    verdict: bool | None
    pair: tuple | None
    heuristic: bool
    scanned: int

    def __bool__(self):
        return bool(self.verdict)


def _twogen_chunk(L: LieAlgebra, pivots):
    scanned = 0
    for V in iter_subspaces_with_pivots(L.field, L.dim, pivots):
        scanned += 1
        if closure_space(L, V.basis).dim == L.dim:
            return (V.basis[0], V.basis[1]), scanned
    return None, scanned


def _pair_budget(L: LieAlgebra, cfg: ScanConfig):
    n, q = L.dim, L.field.p
    count = gaussian_binomial(n, 1, q) + gaussian_binomial(n, 2, q)
    if count > cfg.max_pairs:
        raise CapExceeded("pair scan (projective pairs)", count, cfg.max_pairs)


def _random_vector(F: Field, n: int, rng: random.Random):
    if F.is_finite:
        return tuple(rng.randrange(F.p) for _ in range(n))
    return tuple(F(rng.randint(-3, 3)) for _ in range(n))


def sample_pair(L: LieAlgebra, seed, index: int):
    """The index-th random pair of the stream for ``seed``.

    Each sample has its own generator, so any partition of the sample
    range across workers reproduces the same pairs.
    """
    rng = random.Random(f"{seed}/{index}")
    return _random_vector(L.field, L.dim, rng), _random_vector(L.field, L.dim, rng)


def _twogen_sampled_chunk(L: LieAlgebra, seed, rng_range):
    lo, hi = rng_range
    for i in range(lo, hi):
        x, y = sample_pair(L, seed, i)
        if closure_space(L, [x, y]).dim == L.dim:
            return (x, y), i - lo + 1
    return None, hi - lo


def _sample_ranges(total: int, size: int = 64):
    # fixed chunk size: the partition must not depend on the worker count
    return [(lo, min(total, lo + size)) for lo in range(0, total, size)]


def is_two_generated(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> TwoGenResult:
    """Is L = <x, y> for some pair?

    Exhaustive mode scans 2-dimensional subspaces span{x, y}: the
    subalgebra <x, y> depends only on that span.  Sampled mode can only
    prove two-generation; a miss is reported as unknown.
    """
    F, n = L.field, L.dim
    if n <= 2:
        basis = L.basis
        x = basis[0] if n else L.zero
        y = basis[1] if n == 2 else x
        return TwoGenResult(True, (x, y), False, 0)
    if cfg.mode == "sampled" or not F.is_finite:
        if cfg.mode == "exhaustive":
            raise Unsupported("exhaustive two-generation scan needs a finite field")
        tasks = _sample_ranges(cfg.samples)
        hit, scanned = _first_hit(partial(_twogen_sampled_chunk, L, cfg.seed), tasks, cfg.workers)
        if hit is not None:
            return TwoGenResult(True, hit, False, scanned)
        return TwoGenResult(None, None, True, scanned)
    _pair_budget(L, cfg)
    tasks = list(combinations(range(n), 2))
    hit, scanned = _first_hit(partial(_twogen_chunk, L), tasks, cfg.workers)
    return TwoGenResult(hit is not None, hit, False, scanned)


def generates(L: LieAlgebra, x, y) -> bool:
    return closure_space(L, [L.vec(x), L.vec(y)]).dim == L.dim


# ---------------------------------------------------------------------------
# properties of two-generated subalgebras

def subalgebra_has(L: LieAlgebra, S, prop: str, cfg: ScanConfig = DEFAULT) -> bool:
    """P evaluated on the subalgebra S; triangulable_on_L looks at ad_L S."""
    if prop not in SCAN_PROPERTIES:
        raise UnknownProperty(prop)
    V = as_space(L, S)
    if prop == "triangulable_on_L":
        from .triang import is_triangulable_on

        return is_triangulable_on(L, V).verdict
    from .props import decide

    return decide(restrict(L, V), prop, cfg)


@dataclass(frozen=True)
class ScanResult:
    """status: all_hold, witness, or no_witness_sampled (heuristic)."""

    prop: str
    status: str
    witness: tuple | None
    scanned: int

    @property
    def all_hold(self) -> bool:
        return self.status == "all_hold"


def _scan_spaces(L: LieAlgebra, prop, cfg, spaces):
    cache = {}
    scanned = 0
    for V in spaces:
        scanned += 1
        x = V.basis[0]
        y = V.basis[-1]
        S = closure_space(L, V.basis)
        if S.dim == L.dim:
            continue
        ok = cache.get(S)
        if ok is None:
            ok = cache[S] = subalgebra_has(L, S, prop, cfg)
        if not ok:
            return (x, y, S), scanned
    return None, scanned


def _scan_chunk(L: LieAlgebra, prop, cfg, pivots):
    spaces = iter_subspaces_with_pivots(L.field, L.dim, pivots)
    return _scan_spaces(L, prop, cfg, spaces)


def _scan_sampled_chunk(L: LieAlgebra, prop, cfg, rng_range):
    lo, hi = rng_range
    for i in range(lo, hi):
        x, y = sample_pair(L, cfg.seed, i)
        V = Subspace.span(L.field, L.dim, [x, y])
        if V.dim:
            hit, _ = _scan_spaces(L, prop, cfg, [V])
            if hit is not None:
                return hit, i - lo + 1
    return None, hi - lo


def twogen_subalgebra_scan(L: LieAlgebra, prop: str, cfg: ScanConfig = DEFAULT) -> ScanResult:
    """Check P on every proper subalgebra <x, y>, x and y not both zero.

    The pairs are taken up to span: 1- and 2-dimensional subspaces.
    """
    if prop not in SCAN_PROPERTIES:
        raise UnknownProperty(prop)
    F, n = L.field, L.dim
    inner = cfg.with_(workers=1)
    if cfg.mode == "sampled" or not F.is_finite:
        if cfg.mode == "exhaustive":
            raise Unsupported("exhaustive pair scans need a finite field")
        tasks = _sample_ranges(cfg.samples)
        hit, scanned = _first_hit(partial(_scan_sampled_chunk, L, prop, inner), tasks, cfg.workers)
        status = "witness" if hit else "no_witness_sampled"
        return ScanResult(prop, status, hit, scanned)
    _pair_budget(L, cfg)
    tasks = [piv for k in (1, 2) for piv in combinations(range(n), k)]
    hit, scanned = _first_hit(partial(_scan_chunk, L, prop, inner), tasks, cfg.workers)
    return ScanResult(prop, "witness" if hit else "all_hold", hit, scanned)
