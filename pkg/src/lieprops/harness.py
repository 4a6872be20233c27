"""Executable checks of the structural theorems on concrete algebras.

Each verifier computes the hypothesis, never assumes it, and returns a
HarnessReport.  A failed conclusion carries a witness that can be
re-checked through the public API.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .algebra import (
    LieAlgebra,
    as_space,
    bracket_spaces,
    closure_space,
    normalizer,
    quotient,
    restrict,
)
from .config import DEFAULT, ScanConfig
from .errors import Unsupported
from .linalg import Subspace, subspace_intersect, subspace_sum
from .props import (
    decide,
    frattini,
    is_simple,
    is_solvable,
    is_strongly_solvable,
    is_supersolvable,
    minimal_ideals,
)
from .scans import (
    enumerate_subalgebras,
    is_two_generated,
    maximal_subalgebras,
    subalgebra_has,
    twogen_subalgebra_scan,
)
from .triang import (
    ad_nilpotent_elements,
    is_nil_on,
    is_triangulable_on,
    nil_ideal,
)

MET, NOT_MET, VACUOUS, HEURISTIC = "met", "not_met", "vacuous", "heuristic"
HELD, FAILED, SKIPPED = "held", "failed", "skipped"


@dataclass
class HarnessReport:
    theorem: str
    hypothesis: str
    conclusion: str = SKIPPED
    checks: list = field(default_factory=list)
    witness: dict = field(default_factory=dict)
    stats: dict = field(default_factory=dict)

    def check(self, name: str, ok: bool, **witness):
        # a check repeated over many items is recorded once, as their conjunction
        for i, (seen, prev) in enumerate(self.checks):
            if seen == name:
                self.checks[i] = (name, prev and bool(ok))
                break
        else:
            self.checks.append((name, bool(ok)))
        if not ok:
            for k, v in witness.items():
                self.witness.setdefault(f"{name}.{k}", v)
        return ok

    def close(self):
        """Set the conclusion from the recorded checks."""
        if self.hypothesis in (MET, HEURISTIC) and self.checks:
            self.conclusion = HELD if all(ok for _, ok in self.checks) else FAILED
        return self

    @property
    def ok(self) -> bool:
        return self.conclusion != FAILED


def _not_met(theorem, reason, **witness):
    rep = HarnessReport(theorem, NOT_MET)
    rep.witness["reason"] = reason
    rep.witness.update(witness)
    return rep


def _first_proper(L, subs, pred):
    """First proper subalgebra in ``subs`` failing ``pred``, or None."""
    for S in subs:
        if S.dim < L.dim and not pred(S.space):
            return S.space
    return None


# ---------------------------------------------------------------------------
# condition (*)

def verify_condition_star(L: LieAlgebra, prop: str, cfg: ScanConfig = DEFAULT) -> HarnessReport:
    """If every two-generated proper subalgebra has P, then L has P or L is two-generated."""
    theorem = f"condition_star:{prop}"
    scan = twogen_subalgebra_scan(L, prop, cfg)
    if scan.status == "witness":
        x, y, S = scan.witness
        return _not_met(theorem, "two-generated proper subalgebra lacks P", x=x, y=y, subalgebra=S)
    rep = HarnessReport(theorem, MET if scan.all_hold else HEURISTIC)
    rep.stats["pairs"] = scan.scanned
    has_p = subalgebra_has(L, L.full, prop, cfg)
    tg = True if has_p else is_two_generated(L, cfg).verdict
    if tg is None:
        # sampled: no generating pair found, which is not a disproof
        rep.check("has_P_or_two_generated", False)
        rep.conclusion = SKIPPED
        return rep
    rep.check("has_P_or_two_generated", has_p or tg)
    return rep.close()


# ---------------------------------------------------------------------------
# Gein: simple with all proper subalgebras nilpotent

def verify_gein(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> HarnessReport:
    theorem = "gein"
    if L.dim <= 2:
        return HarnessReport(theorem, VACUOUS)
    if not is_simple(L, cfg):
        return _not_met(theorem, "not simple")
    maxes = maximal_subalgebras(L, cfg)
    for M in maxes:
        if not decide(restrict(L, M.space), "nilpotent"):
            return _not_met(theorem, "maximal subalgebra not nilpotent", subalgebra=M.space)
    rep = HarnessReport(theorem, MET)
    rep.stats["maximal"] = len(maxes)
    for M1, M2 in combinations(maxes, 2):
        I = subspace_intersect(M1.space, M2.space)
        if not rep.check("maximal_intersections_zero", I.is_zero(), m1=M1.space, m2=M2.space):
            break
    else:
        rep.check("maximal_intersections_zero", True)
    nils = ad_nilpotent_elements(L, None, cfg)
    rep.check("no_ad_nilpotent_elements", not nils, element=nils[0] if nils else None)
    rep.check("two_generated", is_two_generated(L, cfg).verdict is True)
    return rep.close()


# ---------------------------------------------------------------------------
# simple algebras whose proper subalgebras are triangulable on L

def _maximal_nil(L, subs):
    """Nonzero subalgebras nil on L and maximal among such."""
    nil = [S.space for S in subs if S.dim and is_nil_on(L, S.space).is_nil]
    nil.sort(key=lambda V: -V.dim)
    out = []
    for V in nil:
        if not any(V.le(K) for K in out):
            out.append(V)
    return out


def verify_simple_triangulable(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> HarnessReport:
    theorem = "simple_triangulable"
    if L.dim <= 2:
        return HarnessReport(theorem, VACUOUS)
    if not is_simple(L, cfg):
        return _not_met(theorem, "not simple")
    subs = enumerate_subalgebras(L, cfg)
    bad = _first_proper(L, subs, lambda V: is_triangulable_on(L, V).verdict)
    if bad is not None:
        return _not_met(theorem, "proper subalgebra not triangulable on L", subalgebra=bad)
    maxes = maximal_subalgebras(L, cfg, subs)
    max_spaces = {M.space for M in maxes}
    max_nil = _maximal_nil(L, subs)
    rep = HarnessReport(theorem, MET)
    rep.stats.update(subalgebras=len(subs), maximal=len(maxes), maximal_nil=len(max_nil))

    # (1) M abelian without nonzero ad-nilpotent elements, or nil(M) maximal nil
    ok1 = True
    for M in maxes:
        N = nil_ideal(L, M.space, cfg=cfg).space
        abelian_case = bracket_spaces(L, M.space, M.space).is_zero() and not ad_nilpotent_elements(L, M.space, cfg)
        nil_case = not N.is_zero() and N in max_nil
        if not (abelian_case or nil_case):
            ok1 = rep.check("maximal_abelian_or_nil_maximal", False, subalgebra=M.space)
            break
    if ok1:
        rep.check("maximal_abelian_or_nil_maximal", True)

    # (2) normalizers of maximal nil subalgebras are maximal
    ok2 = True
    for K in max_nil:
        if normalizer(L, K) not in max_spaces:
            ok2 = rep.check("nil_normalizer_maximal", False, nil=K)
            break
    if ok2:
        rep.check("nil_normalizer_maximal", True)

    # (3) intersections of distinct maximal subalgebras: no nonzero ad-nilpotent element, abelian
    ok3 = True
    for M1, M2 in combinations(maxes, 2):
        I = subspace_intersect(M1.space, M2.space)
        if I.is_zero():
            continue
        if ad_nilpotent_elements(L, I, cfg):
            ok3 = rep.check("intersections_no_ad_nilpotent", False, m1=M1.space, m2=M2.space)
            break
        if not bracket_spaces(L, I, I).is_zero():
            ok3 = rep.check("intersections_abelian", False, m1=M1.space, m2=M2.space)
            break
    if ok3:
        rep.check("intersections_no_ad_nilpotent", True)
        rep.check("intersections_abelian", True)

    rep.check("two_generated", is_two_generated(L, cfg).verdict is True)
    return rep.close()


# ---------------------------------------------------------------------------
# triangulability conclusions

def _quotient_by_phi(L, cfg):
    phi = frattini(L, cfg).frattini_ideal.space
    Q, proj = quotient(L, phi)
    return phi, Q, proj


def verify_triangulable_two_generation(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> HarnessReport:
    """(1) solvable and every two-generated proper subalgebra triangulable on L
    => L triangulable.  (2) every proper subalgebra triangulable on L but L not
    => L two-generated and L/φ(L) simple."""
    theorem = "triangulable_two_generation"
    rep = HarnessReport(theorem, NOT_MET)
    tri_L = is_triangulable_on(L, L.full).verdict
    if is_solvable(L):
        scan = twogen_subalgebra_scan(L, "triangulable_on_L", cfg)
        if scan.all_hold:
            rep.hypothesis = MET
            rep.check("part1.triangulable", tri_L)
    if not tri_L:
        subs = enumerate_subalgebras(L, cfg)
        bad = _first_proper(L, subs, lambda V: is_triangulable_on(L, V).verdict)
        if bad is None:
            rep.hypothesis = MET
            rep.check("part2.two_generated", is_two_generated(L, cfg).verdict is True)
            phi, Q, _ = _quotient_by_phi(L, cfg)
            rep.stats["phi_dim"] = phi.dim
            rep.check("part2.quotient_simple", is_simple(Q, cfg))
        else:
            rep.witness.setdefault("part2.non_triangulable", bad)
    if rep.hypothesis == NOT_MET:
        rep.witness["reason"] = "neither part applies"
    return rep.close()


def verify_strongly_solvable_two_generation(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> HarnessReport:
    """Every two-generated proper subalgebra strongly solvable and L solvable,
    not strongly solvable => every proper subalgebra strongly solvable and L
    two-generated."""
    theorem = "strongly_solvable_two_generation"
    if not L.field.is_finite:
        # the non-solvable part needs an infinite field of char > 5; sample only
        scan = twogen_subalgebra_scan(L, "strongly_solvable", cfg.with_(mode="sampled"))
        if scan.status == "witness":
            return _not_met(theorem, "two-generated proper subalgebra not strongly solvable")
        rep = HarnessReport(theorem, HEURISTIC)
        tg = is_two_generated(L, cfg.with_(mode="sampled"))
        if tg.verdict is True:
            rep.check("two_generated", True)
        return rep.close()
    if not is_solvable(L) or is_strongly_solvable(L):
        return _not_met(theorem, "L not solvable-and-not-strongly-solvable")
    scan = twogen_subalgebra_scan(L, "strongly_solvable", cfg)
    if not scan.all_hold:
        x, y, S = scan.witness
        return _not_met(theorem, "two-generated proper subalgebra not strongly solvable", x=x, y=y, subalgebra=S)
    rep = HarnessReport(theorem, MET)
    subs = enumerate_subalgebras(L, cfg)
    bad = _first_proper(L, subs, lambda V: is_strongly_solvable(restrict(L, V)))
    rep.check("proper_strongly_solvable", bad is None, subalgebra=bad)
    tg = is_two_generated(L, cfg)
    rep.check("two_generated", tg.verdict is True)
    if tg.pair:
        rep.witness["pair"] = tg.pair
    return rep.close()


def verify_supersolvable_two_generation(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> HarnessReport:
    """Solvable L.  (1) minimal non-supersolvable => two-generated.  (2) every
    two-generated proper subalgebra supersolvable but L not => every proper
    subalgebra supersolvable."""
    theorem = "supersolvable_two_generation"
    if not is_solvable(L):
        return _not_met(theorem, "not solvable")
    if is_supersolvable(L):
        return _not_met(theorem, "L supersolvable")
    scan = twogen_subalgebra_scan(L, "supersolvable", cfg)
    subs = enumerate_subalgebras(L, cfg)
    bad = _first_proper(L, subs, lambda V: is_supersolvable(restrict(L, V)))
    rep = HarnessReport(theorem, NOT_MET)
    if scan.all_hold:
        rep.hypothesis = MET
        rep.check("part2.proper_supersolvable", bad is None, subalgebra=bad)
    if bad is None:
        rep.hypothesis = MET
        tg = is_two_generated(L, cfg)
        rep.check("part1.two_generated", tg.verdict is True)
        if tg.pair:
            rep.witness["pair"] = tg.pair
    if rep.hypothesis == NOT_MET:
        x, y, S = scan.witness
        rep.witness.update(reason="neither part applies", x=x, y=y, subalgebra=S)
    return rep.close()


# ---------------------------------------------------------------------------
# structure of solvable φ-free minimal non-strongly-solvable algebras

def _heisenberg_shape(B: LieAlgebra) -> bool:
    if B.dim != 3:
        return False
    D = bracket_spaces(B, B.full, B.full)
    return D.dim == 1 and bracket_spaces(B, D, B.full).is_zero()


def _type_one_shape(B: LieAlgebra, cfg) -> bool:
    """B = M ∔ Fx with M an abelian minimal ideal of codimension 1."""
    for M in minimal_ideals(B, cfg):
        if M.dim == B.dim - 1 and bracket_spaces(B, M.space, M.space).is_zero():
            return True
    return False


def verify_min_non_strongly_solvable_shape(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> HarnessReport:
    theorem = "min_non_strongly_solvable_shape"
    if not L.field.is_finite:
        raise Unsupported("the shape check enumerates subalgebras")
    if not is_solvable(L) or is_strongly_solvable(L):
        return _not_met(theorem, "not solvable-and-not-strongly-solvable")
    fr = frattini(L, cfg)
    if not fr.is_phi_free:
        return _not_met(theorem, "not phi-free", phi=fr.frattini_ideal.space)
    subs = enumerate_subalgebras(L, cfg)
    bad = _first_proper(L, subs, lambda V: is_strongly_solvable(restrict(L, V)))
    if bad is not None:
        return _not_met(theorem, "not minimal non-strongly-solvable", subalgebra=bad)
    rep = HarnessReport(theorem, MET)
    rep.check("positive_characteristic", L.field.characteristic > 0)
    mins = minimal_ideals(L, cfg)
    rep.check("unique_minimal_ideal", len(mins) == 1, count=len(mins))
    A = mins[0].space
    rep.check("dim_A_at_least_2", A.dim >= 2)
    rep.check("A_abelian", bracket_spaces(L, A, A).is_zero())
    shape = None
    for S in subs:
        if S.dim != L.dim - A.dim or not subspace_intersect(S.space, A).is_zero():
            continue
        B = restrict(L, S.space)
        if _type_one_shape(B, cfg):
            shape = "I"
        elif _heisenberg_shape(B):
            shape = "II"
        if shape:
            rep.witness["complement"] = S.space
            break
    rep.stats["type"] = shape or "none"
    rep.check("complement_of_type_I_or_II", shape is not None)
    rep.check("two_generated", is_two_generated(L, cfg).verdict is True)
    return rep.close()


# ---------------------------------------------------------------------------
# lemmas

def verify_frattini_two_generation(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> HarnessReport:
    """L is two-generated iff L/φ(L) is."""
    rep = HarnessReport("frattini_two_generation", MET)
    phi, Q, _ = _quotient_by_phi(L, cfg)
    a = is_two_generated(L, cfg).verdict
    b = is_two_generated(Q, cfg).verdict
    rep.stats["phi_dim"] = phi.dim
    rep.check("two_generated_iff_quotient", a == b, L=a, quotient=b)
    return rep.close()


SATURATED = ("solvable", "strongly_solvable", "supersolvable", "nilpotent")


def verify_saturation(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> HarnessReport:
    """P(L/φ(L)) = P(L) for the saturated classes."""
    rep = HarnessReport("saturation", MET)
    _, Q, _ = _quotient_by_phi(L, cfg)
    for p in SATURATED:
        a, b = decide(L, p, cfg), decide(Q, p, cfg)
        rep.check(p, a == b, L=a, quotient=b)
    return rep.close()


def verify_frattini_quotient(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> HarnessReport:
    """φ(L) ⊆ F(L) and L/φ(L) is φ-free."""
    rep = HarnessReport("frattini_quotient", MET)
    fr = frattini(L, cfg)
    rep.check("phi_in_F", fr.frattini_ideal.space.le(fr.frattini_subalgebra))
    Q, _ = quotient(L, fr.frattini_ideal.space)
    rep.check("quotient_phi_free", frattini(Q, cfg).is_phi_free)
    return rep.close()


def verify_nil_sum(L: LieAlgebra, cfg: ScanConfig = DEFAULT, pairs: int = 200, subs=None) -> HarnessReport:
    """S, T nil on L with [S, T] ⊆ T => S + T nil on L (seeded sample of pairs)."""
    rep = HarnessReport("nil_sum", MET)
    subs = enumerate_subalgebras(L, cfg) if subs is None else subs
    nil = [S.space for S in subs if is_nil_on(L, S.space).is_nil]
    cands = [(S, T) for S in nil for T in nil]
    rng = random.Random(f"{cfg.seed}/nil_sum")
    if len(cands) > pairs:
        cands = rng.sample(cands, pairs)
    tested = 0
    for S, T in cands:
        if not bracket_spaces(L, S, T).le(T):
            continue
        tested += 1
        U = subspace_sum(S, T)
        if not rep.check("sum_nil", is_nil_on(L, U).is_nil, S=S, T=T):
            break
    else:
        rep.check("sum_nil", True)
    rep.stats["pairs"] = tested
    return rep.close()


def verify_nil_elementwise(L: LieAlgebra, cfg: ScanConfig = DEFAULT, subs=None) -> HarnessReport:
    """For triangulable S: nil(S) is the set of ad-nilpotent elements of S."""
    if not L.field.is_finite:
        raise Unsupported("the elementwise comparison needs a finite field")
    rep = HarnessReport("nil_elementwise", MET)
    subs = enumerate_subalgebras(L, cfg) if subs is None else subs
    q = L.field.p
    tested = 0
    for S in subs:
        if not is_triangulable_on(L, S.space).verdict:
            continue
        tested += 1
        N = nil_ideal(L, S.space, method="exact", cfg=cfg).space
        pts = ad_nilpotent_elements(L, S.space, cfg)
        span = Subspace.span(L.field, L.dim, pts)
        is_subspace = len(pts) == (q ** span.dim - 1) // (q - 1)
        if not rep.check("nil_equals_ad_nilpotent", span == N and is_subspace, subalgebra=S.space):
            break
    else:
        rep.check("nil_equals_ad_nilpotent", True)
    rep.stats["triangulable"] = tested
    return rep.close()


def verify_nil_quotient(L: LieAlgebra, S=None, cfg: ScanConfig = DEFAULT, subs=None) -> HarnessReport:
    """nil(S/φ(L)) = nil(S)/φ(L) for φ(L) ⊆ S (every such S when S is None)."""
    rep = HarnessReport("nil_quotient", MET)
    phi, Q, proj = _quotient_by_phi(L, cfg)
    if S is not None:
        cands = [as_space(L, S)]
        if not phi.le(cands[0]):
            return _not_met("nil_quotient", "phi(L) not inside S")
    else:
        subs = enumerate_subalgebras(L, cfg) if subs is None else subs
        cands = [V.space for V in subs if phi.le(V.space)]
    for V in cands:
        lhs = nil_ideal(Q, proj.image(V), method="exact", cfg=cfg).space
        rhs = proj.image(nil_ideal(L, V, method="exact", cfg=cfg).space)
        if not rep.check("nil_commutes_with_quotient", lhs == rhs, subalgebra=V):
            break
    else:
        rep.check("nil_commutes_with_quotient", True)
    rep.stats.update(phi_dim=phi.dim, subalgebras=len(cands))
    return rep.close()


def verify_triangulable_strongly_solvable(L: LieAlgebra, cfg: ScanConfig = DEFAULT, subs=None) -> HarnessReport:
    """Every subalgebra triangulable on L is strongly solvable."""
    rep = HarnessReport("triangulable_strongly_solvable", MET)
    subs = enumerate_subalgebras(L, cfg) if subs is None else subs
    for S in subs:
        if is_triangulable_on(L, S.space).verdict and not is_strongly_solvable(restrict(L, S.space)):
            rep.check("strongly_solvable", False, subalgebra=S.space)
            break
    else:
        rep.check("strongly_solvable", True)
    return rep.close()


def lemma_suite(L: LieAlgebra, cfg: ScanConfig = DEFAULT) -> list:
    subs = enumerate_subalgebras(L, cfg)
    return [
        verify_frattini_two_generation(L, cfg),
        verify_saturation(L, cfg),
        verify_frattini_quotient(L, cfg),
        verify_nil_sum(L, cfg, subs=subs),
        verify_nil_elementwise(L, cfg, subs=subs),
        verify_nil_quotient(L, None, cfg, subs=subs),
        verify_triangulable_strongly_solvable(L, cfg, subs=subs),
    ]


STAR_PROPERTIES = ("abelian", "nilpotent", "quasi_abelian", "simple_or_1dim")

SUITES = {
    "star": lambda L, cfg: [verify_condition_star(L, p, cfg) for p in STAR_PROPERTIES],
    "gein": lambda L, cfg: [verify_gein(L, cfg)],
    "t31": lambda L, cfg: [verify_min_non_strongly_solvable_shape(L, cfg)],
    "t33": lambda L, cfg: [verify_strongly_solvable_two_generation(L, cfg)],
    "t35": lambda L, cfg: [verify_supersolvable_two_generation(L, cfg)],
    "t44": lambda L, cfg: [verify_simple_triangulable(L, cfg)],
    "t47": lambda L, cfg: [verify_triangulable_two_generation(L, cfg)],
    "lemmas": lemma_suite,
}


def run_suite(L: LieAlgebra, suite: str, cfg: ScanConfig = DEFAULT) -> list:
    if suite not in SUITES:
        raise KeyError(suite)
    return SUITES[suite](L, cfg)


def regenerates(L: LieAlgebra, pair) -> bool:
    """Does the pair generate L through the closure API?"""
    x, y = pair
    return closure_space(L, [L.vec(x), L.vec(y)]).dim == L.dim
