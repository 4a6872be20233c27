"""Search for simple minimal non-solvable algebras that are not two-generated.

Samples are random alternating structure tensors kept only when they
satisfy Jacobi, plus every catalog fixture over the same field within the
dimension range.  The hypothesis is decided exactly: L simple and every
maximal subalgebra solvable (so every proper subalgebra is).
"""

from __future__ import annotations

import logging
import os
import random
from dataclasses import dataclass, field
from functools import partial

from .algebra import LieAlgebra, restrict
from .config import DEFAULT, ScanConfig
from .errors import JacobiViolation, Unsupported
from .fields import Field
from .props import is_simple, is_solvable
from .scans import _pmap, generates, is_two_generated, maximal_subalgebras

log = logging.getLogger(__name__)

CHUNK = 256
LOW_PASS_RATE = 0.001


@dataclass
class HuntRecord:
    """One hunted instance.  hypothesis: met | not_simple | not_minimal."""

    source: str
    index: int
    seed: object
    algebra: LieAlgebra
    hypothesis: str
    conclusion: str = "skipped"
    pair: tuple | None = None
    witness: object = None

    @property
    def counterexample(self) -> bool:
        return self.conclusion == "failed"


@dataclass
class HuntSummary:
    samples: int = 0
    valid: int = 0
    simple: int = 0
    met: int = 0
    counterexamples: int = 0
    records: list = field(default_factory=list)

    @property
    def pass_rate(self) -> float:
        return self.valid / self.samples if self.samples else 0.0


def random_tensor(F: Field, n: int, rng: random.Random) -> dict:
    """A random alternating table: one random vector per pair i < j."""
    return {(i, j): tuple(rng.randrange(F.p) for _ in range(n)) for i in range(n) for j in range(i + 1, n)}


def sample_algebra(F: Field, dim_min: int, dim_max: int, seed, index: int):
    """The index-th sample for ``seed``, or None when it fails Jacobi."""
    rng = random.Random(f"{seed}/hunt/{index}")
    n = rng.randint(dim_min, dim_max)
    try:
        return LieAlgebra(F, n, random_tensor(F, n, rng))
    except JacobiViolation:
        return None


def examine(L: LieAlgebra, cfg: ScanConfig = DEFAULT, source="sample", index=0, seed=None) -> HuntRecord:
    """Decide the hypothesis and, when it holds, two-generation."""
    rec = HuntRecord(source, index, seed, L, "not_simple")
    if L.dim < 3 or not is_simple(L, cfg):
        return rec
    # the verdict must be exact: a sampled miss is not a counterexample
    inner = cfg.with_(workers=1, mode="exhaustive")
    for M in maximal_subalgebras(L, inner):
        if not is_solvable(restrict(L, M.space)):
            rec.hypothesis = "not_minimal"
            rec.witness = M.space
            return rec
    rec.hypothesis = "met"
    tg = is_two_generated(L, inner)
    rec.conclusion = "held" if tg.verdict else "failed"
    rec.pair = tg.pair
    return rec


def _hunt_chunk(F, dim_min, dim_max, seed, cfg, rng_range):
    lo, hi = rng_range
    valid = 0
    simple = 0
    out = []
    seen = {}
    for i in range(lo, hi):
        L = sample_algebra(F, dim_min, dim_max, seed, i)
        if L is None:
            continue
        valid += 1
        # identical tables recur often in small dimension; reuse the verdict
        key = L
        if key in seen:
            rec = HuntRecord("sample", i, seed, L, *seen[key])
        else:
            rec = examine(L, cfg, "sample", i, seed)
            seen[key] = (rec.hypothesis, rec.conclusion, rec.pair, rec.witness)
        if rec.hypothesis != "not_simple":
            simple += 1
            out.append(rec)
    return (out, valid, simple), hi - lo


def conjecture_hunt(
    F: Field,
    dim_min: int,
    dim_max: int,
    samples: int,
    seed=0,
    cfg: ScanConfig = DEFAULT,
    include_catalog: bool = True,
) -> HuntSummary:
    """Run the hunt.  Records are kept for every simple instance, in order:
    catalog fixtures first, then samples by index."""
    if not F.is_finite:
        raise Unsupported("the hunt needs a finite field")
    if dim_min < 1 or dim_max < dim_min:
        raise ValueError("need 1 <= dim_min <= dim_max")
    summary = HuntSummary()
    if include_catalog:
        from .catalog import entries

        for k, e in enumerate(entries(fields=(F,))):
            L = e.algebra
            if L.field == F and dim_min <= L.dim <= dim_max:
                rec = examine(L, cfg.with_(workers=1), f"catalog:{e.name}", k, seed)
                if rec.hypothesis != "not_simple":
                    summary.records.append(rec)
    tasks = [(lo, min(samples, lo + CHUNK)) for lo in range(0, samples, CHUNK)]
    fn = partial(_hunt_chunk, F, dim_min, dim_max, seed, cfg.with_(workers=1))
    for (recs, valid, simple), n in _pmap(fn, tasks, cfg.workers):
        summary.samples += n
        summary.valid += valid
        summary.simple += simple
        summary.records.extend(recs)
    summary.simple += sum(1 for r in summary.records if r.source != "sample")
    summary.met = sum(1 for r in summary.records if r.hypothesis == "met")
    summary.counterexamples = sum(1 for r in summary.records if r.counterexample)
    if samples and summary.pass_rate < LOW_PASS_RATE:
        log.warning("only %d of %d samples satisfy Jacobi", summary.valid, summary.samples)
    return summary


def dump_counterexample(rec: HuntRecord, directory) -> str:
    """Write the algebra in lie-sc format with its provenance in comments."""
    from .fileformat import write

    os.makedirs(directory, exist_ok=True)
    name = f"hunt-{rec.seed}-{rec.source.replace(':', '_')}-{rec.index}.lie"
    path = os.path.join(directory, name)
    write(rec.algebra, path, comments=[f"seed={rec.seed} source={rec.source} index={rec.index}"])
    return path


def reverify(rec: HuntRecord, cfg: ScanConfig = DEFAULT) -> bool:
    """Does a claimed counterexample survive independent re-checking?

    Re-derives simplicity, minimality and (non-)two-generation from the
    algebra alone; a claimed generating pair must not generate.
    """
    L = rec.algebra
    again = examine(L, cfg.with_(workers=1), rec.source, rec.index, rec.seed)
    if again.hypothesis != "met" or again.conclusion != "failed":
        return False
    if rec.pair is not None and generates(L, *rec.pair):
        return False
    return True


__all__ = [
    "HuntRecord",
    "HuntSummary",
    "conjecture_hunt",
    "dump_counterexample",
    "examine",
    "reverify",
    "sample_algebra",
]
