"""report-v1: line-delimited ``key=value`` records.

The first line is ``report-v1``.  Each further line is one record of
space-separated ``key=value`` pairs, ``record=<kind>`` first.  Value
encoding:

- booleans ``true``/``false``, missing values ``none``
- a vector: comma-separated coordinates (``0,0,1``)
- a subspace: its echelon basis vectors joined by ``;``, ``-`` when zero
- a list: items joined by ``|``

``time_ms`` is the only nondeterministic field and is dropped when timing
is off.
"""

from __future__ import annotations

import sys
from fractions import Fraction

from .algebra import Subalgebra
from .linalg import Subspace

HEADER = "report-v1"


def _is_scalar(a) -> bool:
    return isinstance(a, (int, Fraction)) and not isinstance(a, bool)


def fmt_vector(v) -> str:
    return ",".join(str(a) for a in v)


def fmt_space(S) -> str:
    if isinstance(S, Subalgebra):
        S = S.space
    return ";".join(fmt_vector(b) for b in S.basis) or "-"


def fmt_value(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (Subspace, Subalgebra)):
        return fmt_space(v)
    if _is_scalar(v):
        return str(v)
    if isinstance(v, str):
        if not v or any(c.isspace() for c in v) or "=" in v:
            raise ValueError(f"string value {v!r} is not a single token")
        return v
    if isinstance(v, (tuple, list)):
        if v and all(_is_scalar(a) for a in v):
            return fmt_vector(v)
        return "|".join(fmt_value(a) for a in v) or "-"
    raise TypeError(f"cannot encode {type(v).__name__} in report-v1")


class ReportWriter:
    """Writes the header once, then one line per record."""

    def __init__(self, stream=None, timing: bool = True):
        self.stream = stream if stream is not None else sys.stdout
        self.timing = timing
        self._started = False

    def record(self, kind: str, items=(), /, **fields):
        if not self._started:
            self.stream.write(HEADER + "\n")
            self._started = True
        pairs = [("record", kind)] + list(items) + list(fields.items())
        parts = []
        for k, v in pairs:
            if k == "time_ms" and not self.timing:
                continue
            parts.append(f"{k}={fmt_value(v)}")
        self.stream.write(" ".join(parts) + "\n")

    def finish(self):
        if not self._started:
            self.stream.write(HEADER + "\n")
            self._started = True


def parse_records(text: str) -> list:
    """Read a report back as a list of dicts of raw strings."""
    lines = text.splitlines()
    if not lines or lines[0] != HEADER:
        raise ValueError("not a report-v1 stream")
    out = []
    for line in lines[1:]:
        if line:
            out.append(dict(part.split("=", 1) for part in line.split(" ")))
    return out


# ---------------------------------------------------------------------------
# record shapes shared by the CLI and the tests

def algebra_fields(L) -> list:
    return [("field", str(L.field)), ("dim", L.dim)]


def property_items(rep) -> list:
    return [(name, v) for name, v in rep.verdicts.items()]


def certificate_items(name, cert) -> list:
    """Flatten a property certificate into record fields."""
    from .props import SeriesChain

    if isinstance(cert, SeriesChain):
        items = [("kind", cert.kind), ("dims", list(cert.dims))]
        if name == "supersolvable":
            items.append(("terms", list(cert.terms)))
        return items
    if isinstance(cert, tuple) and cert and isinstance(cert[0], tuple):
        return [("witness", list(cert))]
    if isinstance(cert, tuple):
        return [("element", cert)]
    return [("witness", cert)]


def harness_items(rep) -> list:
    items = [
        ("name", rep.theorem),
        ("hypothesis", rep.hypothesis),
        ("conclusion", rep.conclusion),
        ("checks", [f"{name}:{'ok' if ok else 'fail'}" for name, ok in rep.checks]),
    ]
    for k, v in sorted(rep.stats.items()):
        items.append((f"stat.{k}", v))
    for k, v in sorted(rep.witness.items()):
        if isinstance(v, str):
            v = v.replace(" ", "_")
        items.append((f"witness.{k}", v))
    return items


def hunt_items(rec) -> list:
    return [
        ("source", rec.source),
        ("index", rec.index),
        ("seed", str(rec.seed)),
        ("dim", rec.algebra.dim),
        ("hypothesis", rec.hypothesis),
        ("conclusion", rec.conclusion),
        ("pair", list(rec.pair) if rec.pair else None),
    ]
