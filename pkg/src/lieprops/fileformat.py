"""The ``lie-sc v1`` structure-constants text format.

::

    lie-sc v1
    field GF(7)          # or: field Q
    dim 3
    basis e f h          # optional; default names e0 e1 ...
    [e,f] = 1*h
    [e,h] = 5*e          # i < j only; unlisted brackets are zero

Over GF(p) coefficients are integer residues; fractions are allowed over Q
only.  Errors carry the 1-based line number.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import LieAlgebra, validate
from .errors import (
    FieldMismatch,
    InvalidField,
    LieSyntaxError,
    UnknownBasisName,
    UpperTriangleViolation,
)
from .fields import Field

HEADER = "lie-sc v1"

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_NAME_RE = re.compile(_NAME + r"\Z")
_BRACKET_RE = re.compile(r"\[\s*(\S+?)\s*,\s*(\S+?)\s*\]\s*=\s*(.*)\Z")
_TERM_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?\s*\*\s*(\S+)\Z")
_DIM_RE = re.compile(r"dim\s+(\d+)\Z")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _split_terms(rhs: str, lineno: int):
    # terms are joined by " + "; a coefficient may carry its own sign
    parts = re.split(r"\s\+\s", f" {rhs} ")
    terms = [t.strip() for t in parts]
    if any(not t for t in terms):
        raise LieSyntaxError("empty term in bracket line", lineno)
    return terms


def _scalar(F: Field, num: str, den: str | None, lineno: int):
    if den is not None:
        if F.is_finite:
            raise FieldMismatch(f"line {lineno}: fractions are not allowed over {F}; use integer residues", lineno)
        if int(den) == 0:
            raise LieSyntaxError("zero denominator", lineno)
        return Fraction(int(num), int(den))
    return F(int(num))


def parse(text: str) -> LieAlgebra:
    """Parse and validate a ``lie-sc v1`` document."""
    lines = text.splitlines()
    content = [(n, _strip(raw)) for n, raw in enumerate(lines, 1)]
    content = [(n, s) for n, s in content if s]
    if not content or content[0][1] != HEADER or content[0][0] != 1:
        raise LieSyntaxError(f"line 1 must be '{HEADER}'", 1)
    it = iter(content[1:])

    def expect(prefix):
        try:
            n, s = next(it)
        except StopIteration:
            raise LieSyntaxError(f"missing '{prefix}' line", len(lines) + 1) from None
        if not s.startswith(prefix + " "):
            raise LieSyntaxError(f"expected '{prefix} ...', got {s!r}", n)
        return n, s

    n, s = expect("field")
    try:
        F = Field.parse(s[len("field "):].strip())
    except InvalidField as exc:
        raise LieSyntaxError(str(exc), n) from None
    n, s = expect("dim")
    m = _DIM_RE.match(s)
    if not m:
        raise LieSyntaxError(f"bad dim line {s!r}", n)
    dim = int(m.group(1))

    names = tuple(f"e{i}" for i in range(dim))
    rest = list(it)
    if rest and rest[0][1].startswith("basis"):
        n, s = rest.pop(0)
        given = s.split()[1:]
        if s.split()[0] != "basis":
            raise LieSyntaxError(f"unexpected line {s!r}", n)
        if len(given) != dim:
            raise LieSyntaxError(f"basis lists {len(given)} names for dim {dim}", n)
        bad = [g for g in given if not _NAME_RE.match(g)]
        if bad:
            raise LieSyntaxError(f"invalid basis name {bad[0]!r}", n)
        if len(set(given)) != dim:
            raise LieSyntaxError("basis names must be distinct", n)
        names = tuple(given)
    index = {name: i for i, name in enumerate(names)}

    def lookup(name, lineno):
        if name not in index:
            raise UnknownBasisName(f"unknown basis name {name!r}", lineno)
        return index[name]

    data = {}
    for n, s in rest:
        m = _BRACKET_RE.match(s)
        if not m:
            raise LieSyntaxError(f"cannot parse {s!r}", n)
        i, j = lookup(m.group(1), n), lookup(m.group(2), n)
        if j <= i:
            raise UpperTriangleViolation(f"bracket [{m.group(1)},{m.group(2)}] must list the earlier basis element first", n)
        if (i, j) in data:
            raise LieSyntaxError(f"bracket [{m.group(1)},{m.group(2)}] given twice", n)
        vec = [F.zero] * dim
        rhs = m.group(3).strip()
        if rhs != "0":
            for term in _split_terms(rhs, n):
                t = _TERM_RE.match(term)
                if not t:
                    raise LieSyntaxError(f"bad term {term!r}; expected <coeff>*<name>", n)
                k = lookup(t.group(3), n)
                vec[k] = F.norm(vec[k] + _scalar(F, t.group(1), t.group(2), n))
        data[(i, j)] = tuple(vec)
    if not data:
        return LieAlgebra(F, dim, {}, names)
    return validate(data, F, names)


def serialize(L: LieAlgebra) -> str:
    """Canonical text: sorted bracket lines, nonzero terms in basis order."""
    F = L.field
    out = [HEADER, f"field {F}", f"dim {L.dim}"]
    if L.dim:
        out.append("basis " + " ".join(L.names))
    for (i, j), vec in sorted(L.brackets.items()):
        terms = [f"{F.fmt(a)}*{L.names[k]}" for k, a in enumerate(vec) if a]
        out.append(f"[{L.names[i]},{L.names[j]}] = " + " + ".join(terms))
    return "\n".join(out) + "\n"


def read(path) -> LieAlgebra:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write(L: LieAlgebra, path, comments=()) -> None:
    text = serialize(L)
    if comments:
        head, rest = text.split("\n", 1)
        text = head + "\n" + "".join(f"# {c}\n" for c in comments) + rest
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
