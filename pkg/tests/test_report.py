import io
from fractions import Fraction

import pytest

from lieprops.fields import GF
from lieprops.linalg import Subspace
from lieprops.report import ReportWriter, fmt_value, parse_records


def test_value_encoding():
    F = GF(3)
    assert fmt_value(True) == "true" and fmt_value(None) == "none"
    assert fmt_value((0, 0, 1)) == "0,0,1"
    assert fmt_value(Subspace.span(F, 3, [(1, 0, 0), (0, 0, 1)])) == "1,0,0;0,0,1"
    assert fmt_value(Subspace.zero(F, 3)) == "-"
    assert fmt_value([3, 1, 0]) == "3,1,0"
    assert fmt_value([(1, 0), (0, 1)]) == "1,0|0,1"
    assert fmt_value((Fraction(1, 2), Fraction(-3))) == "1/2,-3"
    with pytest.raises(ValueError):
        fmt_value("two words")


def test_writer_round_trip():
    buf = io.StringIO()
    w = ReportWriter(buf, timing=False)
    w.record("demo", [("a", 1)], b=True, time_ms=12)
    w.record("demo", c="x")
    text = buf.getvalue()
    assert text == "report-v1\nrecord=demo a=1 b=true\nrecord=demo c=x\n"
    assert parse_records(text) == [{"record": "demo", "a": "1", "b": "true"}, {"record": "demo", "c": "x"}]


def test_empty_stream_still_has_header():
    buf = io.StringIO()
    ReportWriter(buf).finish()
    assert buf.getvalue() == "report-v1\n"
